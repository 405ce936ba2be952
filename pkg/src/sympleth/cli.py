"""Command-line front end.

Expressions follow a small grammar, whitespace-insensitive::

    expr  := [sign] term { ('+' | '-') term }
    term  := [coeff '*'] atom { '[' expr ']' }     (postfix composition)
    atom  := ('s'|'m'|'h'|'e'|'p') '[' parts ']'
    coeff := integer [ '/' integer ]
    parts := empty | integer { ',' integer }

Exit codes: 0 on success, 1 on a verification failure, 2 on usage or parse
errors.  Set SYMPLETH_CACHE_DIR to keep an on-disk memo of plethysm results
(keyed by canonical input text; versioned; safe to delete at any time).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import statistics
import sys
import time
from dataclasses import dataclass

from . import tableaux, verify
from .plethysm import (
    DEFAULT_CONTEXT,
    METHODS,
    MethodUnavailableError,
    expand_schur,
    fresh_context,
    monomial_expansion,
    perp_sequence,
    plethysm,
)
from .lr import perp_dict, schur_perp
from .partitions import make_partition
from .symfunc import SymFunc, clear_caches, term_sort_key

CACHE_ENV = "SYMPLETH_CACHE_DIR"
CACHE_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (position {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, text, method="auto", ctx=None):
        self.text = text
        self.i = 0
        self.method = method
        self.ctx = ctx or DEFAULT_CONTEXT

    # -- scanning ----------------------------------------------------------

    def _skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self._skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.i)
        self.i += 1

    def integer(self):
        self._skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.i])

    # -- grammar -----------------------------------------------------------

    def parse(self):
        value = self.expr()
        self._skip()
        if self.i < len(self.text):
            raise ParseError(f"unexpected {self.text[self.i]!r}", self.i)
        return value

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            if self.peek() == "-":
                sign = -1
            self.i += 1
        value = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
            value = value + self.term().scale(sign)
        return value

    def term(self):
        coeff = 1
        if self.peek().isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.i += 1
                start = self.i
                den = self.integer()
                if den == 0:
                    raise ParseError("zero denominator", start)
                from fractions import Fraction

                coeff = Fraction(num, den)
            else:
                coeff = num
            self.take("*")
        return self.atom().scale(coeff)

    def atom(self):
        basis = self.peek()
        if basis not in ("s", "m", "h", "e", "p"):
            raise ParseError("expected a basis letter s, m, h, e or p", self.i)
        self.i += 1
        part = self.partition()
        value = SymFunc(basis, {part: 1})
        while self.peek() == "[":
            inner = self.application()
            value = plethysm(value, inner, self.method, "s", self.ctx)
        return value

    def partition(self):
        self.take("[")
        start = self.i
        parts = []
        if self.peek() != "]":
            parts.append(self.integer())
            while self.peek() == ",":
                self.i += 1
                parts.append(self.integer())
        self.take("]")
        try:
            return make_partition(parts)
        except ValueError as exc:
            raise ParseError(str(exc), start) from None

    def application(self):
        self.take("[")
        value = self.expr()
        self.take("]")
        return value


def parse_expr(text, method="auto", ctx=None):
    """Parse and eagerly evaluate an expression to a SymFunc."""
    return _Parser(text, method, ctx).parse()


# -- output helpers ------------------------------------------------------------


def canonical_text(f):
    return str(f)


def checksum(f):
    """Hex digest of the canonical Schur-basis rendering."""
    return hashlib.sha256(str(f.to_basis("s")).encode()).hexdigest()[:16]


def _terms_payload(f):
    return [
        {"partition": list(part), "coeff": str(c)} for part, c in f.sorted_terms()
    ]


def _result_payload(input_text, method, f, millis):
    return {
        "input": input_text,
        "method": method,
        "basis": f.basis,
        "terms": _terms_payload(f),
        "millis": millis,
    }


def _emit_result(args, input_text, f, millis):
    if args.format == "json":
        print(json.dumps(_result_payload(input_text, args.method, f, millis)))
    elif args.format == "csv":
        print("partition,coeff")
        for part, c in f.sorted_terms():
            print(f"\"[{','.join(map(str, part))}]\",{c}")
    else:
        print(canonical_text(f))


# -- on-disk cache ---------------------------------------------------------------


def _cache_path(key):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    digest = hashlib.sha256(f"v{CACHE_VERSION}|{key}".encode()).hexdigest()
    return os.path.join(root, f"{digest}.json")


def _cached_plethysm(input_text, method, basis, compute):
    path = _cache_path(f"{input_text}|{method}|{basis}")
    if path and os.path.exists(path):
        with open(path) as fh:
            payload = json.load(fh)
        terms = {tuple(t["partition"]): t["coeff"] for t in payload["terms"]}
        from fractions import Fraction

        f = SymFunc(payload["basis"], {p: Fraction(c) for p, c in terms.items()})
        return f, payload["millis"]
    t0 = time.perf_counter()
    f = compute()
    millis = (time.perf_counter() - t0) * 1000.0
    if path:
        with open(path, "w") as fh:
            json.dump(_result_payload(input_text, method, f, millis), fh)
    return f, millis


# -- subcommands -----------------------------------------------------------------


def _cmd_expand(args):
    t0 = time.perf_counter()
    f = parse_expr(args.expr, args.method)
    f = f.to_basis(args.basis)
    millis = (time.perf_counter() - t0) * 1000.0
    if args.mode:
        fs = f.to_basis("s")
        if not fs.is_homogeneous():
            print("round-trip check needs a homogeneous value", file=sys.stderr)
            return 1
        back = expand_schur(perp_sequence(fs, args.mode))
        if back != fs:
            print("round-trip reconstruction mismatch", file=sys.stderr)
            return 1
    _emit_result(args, args.expr.strip(), f, millis)
    return 0


def _cmd_plethysm(args):
    outer = parse_expr(args.outer, args.method)
    inner = parse_expr(args.inner, args.method)
    input_text = f"{canonical_text(outer)}[{canonical_text(inner)}]"
    f, millis = _cached_plethysm(
        input_text,
        args.method,
        args.basis,
        lambda: plethysm(outer, inner, args.method, args.basis),
    )
    _emit_result(args, input_text, f, millis)
    return 0


def _cmd_perp(args):
    f = parse_expr(args.expr, args.method).to_basis("s")
    if args.shape:
        shape = _Parser(args.shape).partition()
        out = schur_perp(shape, f)
        print(canonical_text(out))
        return 0
    if args.r is not None:
        strip = (args.r,) if args.mode == "row" else (1,) * args.r
        print(canonical_text(SymFunc("s", perp_dict(strip, f.terms))))
        return 0
    seq = perp_sequence(f, args.mode)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "mode": seq.mode,
                    "entries": [
                        {"r": r + 1, "terms": _terms_payload(e)}
                        for r, e in enumerate(seq.entries)
                    ],
                }
            )
        )
    else:
        for r, e in enumerate(seq.entries):
            print(f"r={r + 1}: {canonical_text(e)}")
    return 0


def _cmd_monomials(args):
    f = parse_expr(args.expr, args.method)
    mono = monomial_expansion(f, args.vars)
    items = sorted(mono.items(), key=lambda kv: term_sort_key(kv[0]))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "vars": args.vars,
                    "terms": [
                        {"exponents": list(e), "coeff": str(c)} for e, c in items
                    ],
                }
            )
        )
        return 0
    if not items:
        print("0")
        return 0
    pieces = []
    for expo, c in items:
        vars_txt = "*".join(
            f"x{i + 1}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(expo)
            if e
        )
        body = vars_txt if vars_txt else "1"
        pieces.append(body if c == 1 else f"{c}*{body}")
    print(" + ".join(pieces))
    return 0


def _cmd_tableaux(args):
    counts = {label: {} for label in tableaux.TableauType}
    for t in tableaux.enumerate_equal_weight(args.k):
        label = tableaux.type_of(t)
        sh = t.shape
        counts[label][sh] = counts[label].get(sh, 0) + 1
    if args.format == "json":
        payload = {
            "k": args.k,
            "types": {
                label.value: {
                    f"[{','.join(map(str, sh))}]": c
                    for sh, c in sorted(shapes.items(), key=lambda kv: term_sort_key(kv[0]))
                }
                for label, shapes in counts.items()
            },
        }
        print(json.dumps(payload))
        return 0
    for label, shapes in counts.items():
        total = sum(shapes.values())
        print(f"type {label.value}: {total} tableaux")
        for sh, c in sorted(shapes.items(), key=lambda kv: term_sort_key(kv[0])):
            print(f"  [{','.join(map(str, sh))}]: {c}")
    return 0


def _cmd_verify(args):
    kwargs = {}
    if args.suite == "oracle":
        kwargs["max_product"] = args.max_product
    elif args.suite == "deg3":
        kwargs["max_k"] = args.max_k
    elif args.suite in ("rowcol", "hooks"):
        kwargs["max_h"] = args.max_h
    elif args.suite == "lemmas":
        kwargs["seed"] = args.seed
        kwargs["max_h"] = args.max_h
        kwargs["trials"] = args.trials
    results = verify.run_suite(args.suite, **kwargs)
    failed = False
    for name, ok, detail in results:
        if ok:
            print(f"ok {name}")
        else:
            failed = True
            print(f"FAIL {name}: {detail}")
    return 1 if failed else 0


@dataclass
class BenchRow:
    case: str
    method: str
    millis: float
    millis_min: float
    terms: int
    checksum: str


def _bench_once(outer, inner, method):
    clear_caches()
    ctx = fresh_context()
    t0 = time.perf_counter()
    result = plethysm(outer, inner, method, "s", ctx)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return result, elapsed


def _cmd_bench(args):
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in METHODS:
            print(f"unknown method {m!r}", file=sys.stderr)
            return 2
    rows = []
    mismatch = False
    for case in args.cases:
        try:
            outer, inner = _split_case(case)
        except ParseError as exc:
            print(f"cannot parse case {case!r}: {exc}", file=sys.stderr)
            return 2
        sums = {}
        for method in methods:
            result, _warm = _bench_once(outer, inner, method)  # warm-up, discarded
            times = []
            for _ in range(args.reps):
                result, elapsed = _bench_once(outer, inner, method)
                times.append(elapsed)
            rows.append(
                BenchRow(
                    case=case.strip(),
                    method=method,
                    millis=statistics.median(times),
                    millis_min=min(times),
                    terms=len(result.terms),
                    checksum=checksum(result),
                )
            )
            sums[method] = rows[-1].checksum
        if len(set(sums.values())) > 1:
            mismatch = True
            print(f"CHECKSUM MISMATCH on {case!r}: {sums}", file=sys.stderr)
    if args.format == "json":
        print(json.dumps([row.__dict__ for row in rows]))
    elif args.format == "csv":
        print("case,method,millis,terms,checksum")
        for row in rows:
            print(f"\"{row.case}\",{row.method},{row.millis:.3f},{row.terms},{row.checksum}")
    else:
        for row in rows:
            print(
                f"{row.case}  method={row.method}  median={row.millis:.3f}ms  "
                f"min={row.millis_min:.3f}ms  terms={row.terms}  checksum={row.checksum}"
            )
    return 1 if mismatch else 0


def _split_case(case):
    """Split a bench case of the shape f[g] into its two expressions."""
    p = _Parser(case)
    p._skip()
    # skip an optional coefficient on the outer factor
    start = p.i
    if p.peek().isdigit():
        p.integer()
        if p.peek() == "/":
            p.i += 1
            p.integer()
        p.take("*")
    if p.peek() not in ("s", "m", "h", "e", "p"):
        raise ParseError("bench case must look like f[g]", p.i)
    p.i += 1
    p.partition()
    outer_end = p.i
    if p.peek() != "[":
        raise ParseError("bench case must apply a composition f[g]", p.i)
    outer = parse_expr(case[start:outer_end])
    p.take("[")
    inner_start = p.i
    depth = 1
    while depth:
        ch = p.text[p.i] if p.i < len(p.text) else ""
        if not ch:
            raise ParseError("unbalanced brackets", p.i)
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        p.i += 1
    inner = parse_expr(case[inner_start : p.i - 1])
    p._skip()
    if p.i < len(case):
        raise ParseError("trailing input after the composition", p.i)
    return outer, inner


def build_parser():
    ap = argparse.ArgumentParser(
        prog="sympleth",
        description="Exact symmetric-function computations with fast plethysm expansion",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, with_mode=False):
        p.add_argument(
            "--method",
            choices=METHODS,
            default="auto",
            help="computation path for compositions inside the expression",
        )
        p.add_argument("--basis", choices=("s", "m", "h", "e", "p"), default="s")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        if with_mode:
            p.add_argument("--mode", choices=("row", "column"), default=None)

    p = sub.add_parser("expand", help="evaluate an expression and print its expansion")
    p.add_argument("expr")
    add_common(p, with_mode=True)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("plethysm", help="compose two expressions")
    p.add_argument("outer")
    p.add_argument("inner")
    add_common(p)
    p.set_defaults(func=_cmd_plethysm)

    p = sub.add_parser("perp", help="apply perp operators or print the full sequence")
    p.add_argument("expr")
    p.add_argument("--shape", default=None, help="partition literal such as [2,1]")
    p.add_argument("--r", type=int, default=None, help="single strip size")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--mode", choices=("row", "column"), default="row")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_perp)

    p = sub.add_parser("monomials", help="expand into monomials of n variables")
    p.add_argument("expr")
    p.add_argument("-n", "--vars", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_monomials)

    p = sub.add_parser("tableaux", help="type census of equal-weight tableaux")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_tableaux)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=verify.SUITES)
    p.add_argument("--max-product", type=int, default=12)
    p.add_argument("--max-k", type=int, default=5)
    p.add_argument("--max-h", type=int, default=7)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=20250809)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="time computation methods on composition cases")
    p.add_argument("cases", nargs="+")
    p.add_argument("--methods", default="sperp,powersum")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=_cmd_bench)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except MethodUnavailableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
