"""Named verification suites exposed through the command line.

Every suite returns a list of (name, passed, detail) triples; the detail of a
failing check carries the first counterexample found.
"""

from __future__ import annotations

import random

from . import tableaux
from .partitions import conjugate, partition_list, row_pair_involution
from .plethysm import (
    DEFAULT_CONTEXT,
    column_closed_form,
    expand_schur,
    hook_alternating_closed_form,
    hook_one_closed_form,
    hook_tail_closed_form,
    hook_two_closed_form,
    perp_sequence,
    plethysm_powersum,
    plethysm_sperp,
    plethysm_sum_alphabets,
    row_closed_form,
)
from .symfunc import SymFunc, index_add, restrict_length, schur

SUITES = ("oracle", "deg3", "rowcol", "hooks", "lemmas")


def _random_homogeneous(rng, degree, lo=-5, hi=5):
    while True:
        terms = {p: rng.randint(lo, hi) for p in partition_list(degree)}
        f = SymFunc("s", terms)
        if f:
            return f


def suite_oracle(max_product=12, ctx=None):
    ctx = ctx or DEFAULT_CONTEXT
    count = 0
    bad = None
    for m in range(1, max_product + 1):
        for mu in {(m,), (1,) * m}:
            for a in range(1, max_product // m + 1):
                for lam in partition_list(a):
                    got = plethysm_sperp(lam, mu, ctx)
                    want = plethysm_powersum(schur(lam), schur(mu))
                    count += 1
                    if got != want and bad is None:
                        bad = f"outer {lam}, inner {mu}: {got} != {want}"
    name = f"recursive method equals power-sum oracle ({count} shape pairs, product <= {max_product})"
    return [(name, bad is None, bad or "")]


def suite_deg3(max_k=5, partition_max_k=6, ctx=None):
    ctx = ctx or DEFAULT_CONTEXT
    results = []
    pairs = [
        ((3,), tableaux.TableauType.ROW),
        ((2, 1), tableaux.TableauType.HOOK3),
        ((2, 1), tableaux.TableauType.HOOK2),
        ((1, 1, 1), tableaux.TableauType.COLUMN),
    ]
    for lam, label in pairs:
        bad = None
        for k in range(1, max_k + 1):
            got = tableaux.type_sum(label, k)
            want = plethysm_powersum(schur(lam), schur((k,)))
            if got != want and bad is None:
                bad = f"k={k}: {got} != {want}"
        results.append(
            (f"type {label.value} realizes outer {lam} for k <= {max_k}", bad is None, bad or "")
        )
    bad = None
    for k in range(1, partition_max_k + 1):
        tabs = tableaux.enumerate_equal_weight(k)
        if len(tabs) != len(set(tabs)):
            bad = f"k={k}: duplicate tableaux"
            break
        for t in tabs:
            tableaux.type_of(t)  # raises if the classification is partial
    results.append(
        (f"types partition the equal-weight tableaux for k <= {partition_max_k}", bad is None, bad or "")
    )
    return results


def suite_rowcol(max_h=7, ctx=None):
    ctx = ctx or DEFAULT_CONTEXT
    results = []
    cases = [
        ("row outer", lambda h, inner: row_closed_form(h, inner), lambda h: (h,)),
        ("column outer", lambda h, inner: column_closed_form(h, inner), lambda h: (1,) * h),
    ]
    for name, fn, shape in cases:
        for inner in ((1, 1), (2,)):
            bad = None
            for h in range(1, max_h + 1):
                got = fn(h, inner)
                want = plethysm_powersum(schur(shape(h)), schur(inner))
                if got != want and bad is None:
                    bad = f"h={h}: {got} != {want}"
            results.append(
                (f"{name} on inner {inner} agrees with oracle, h <= {max_h}", bad is None, bad or "")
            )
    return results


def suite_hooks(max_h=7, ctx=None):
    ctx = ctx or DEFAULT_CONTEXT
    results = []
    for inner in ((1, 1), (2,)):
        bad = None
        for h in range(2, max_h + 1):
            got = hook_one_closed_form(h, inner)
            want = plethysm_powersum(schur((h - 1, 1)), schur(inner))
            if got != want and bad is None:
                bad = f"h={h}: {got} != {want}"
        results.append((f"single-leg hooks on {inner}, h <= {max_h}", bad is None, bad or ""))
        bad = None
        for h in range(2, max_h + 1):
            got = hook_tail_closed_form(h, inner)
            want = plethysm_powersum(schur((2,) + (1,) * (h - 2)), schur(inner))
            if got != want and bad is None:
                bad = f"h={h}: {got} != {want}"
        results.append((f"long-leg hooks on {inner}, h <= {max_h}", bad is None, bad or ""))
        bad = None
        for h in range(3, max_h + 1):
            got = hook_two_closed_form(h, inner, ctx)
            want = plethysm_powersum(schur((h - 2, 1, 1)), schur(inner))
            if got != want and bad is None:
                bad = f"h={h}: {got} != {want}"
        results.append((f"double-leg hooks on {inner}, h <= {max_h}", bad is None, bad or ""))
        bad = None
        for h in range(1, max_h + 1):
            for k in range(0, h):
                got = hook_alternating_closed_form(h, k, inner, ctx)
                want = plethysm_powersum(schur((h - k,) + (1,) * k), schur(inner))
                if got != want and bad is None:
                    bad = f"h={h}, k={k}: {got} != {want}"
        results.append(
            (f"alternating hook formula on {inner}, h <= {max_h}", bad is None, bad or "")
        )
    return results


def suite_lemmas(seed=20250809, max_h=7, max_k=8, trials=100, ctx=None):
    ctx = ctx or DEFAULT_CONTEXT
    rng = random.Random(seed)
    results = []

    # length-two truncation recurrence for degree-three outer rows
    bad = None
    for k in range(5, max_k + 1):
        lhs = restrict_length(plethysm_sperp((3,), (k,), ctx), 2)
        rhs = index_add(
            schur((6, 6)), restrict_length(plethysm_sperp((3,), (k - 4,), ctx), 2)
        )
        extra = {(3 * k,): 1}
        for r in range(2, k + 1):
            extra[(3 * k - r, r)] = extra.get((3 * k - r, r), 0) + 1
        rhs = rhs + SymFunc("s", extra)
        if lhs != rhs and bad is None:
            bad = f"k={k}: {lhs} != {rhs}"
    results.append((f"two-row truncation recurrence, 5 <= k <= {max_k}", bad is None, bad or ""))

    # the two hook types carry the same shape multiset
    bad = None
    for k in range(1, 7):
        a = tableaux.type_sum(tableaux.TableauType.HOOK3, k)
        b = tableaux.type_sum(tableaux.TableauType.HOOK2, k)
        if a != b and bad is None:
            bad = f"k={k}: {a} != {b}"
    results.append(("hook types share shape multisets, k <= 6", bad is None, bad or ""))

    # product recurrence linking neighboring hooks
    bad = None
    for h in range(2, max_h + 1):
        for r in range(1, h):
            lhs = plethysm_sperp((h - r,), (1, 1), ctx) * plethysm_sperp(
                (1,) * r, (1, 1), ctx
            )
            rhs = plethysm_sperp((h - r,) + (1,) * r, (1, 1), ctx) + plethysm_sperp(
                (h - r + 1,) + (1,) * (r - 1), (1, 1), ctx
            )
            if lhs != rhs and bad is None:
                bad = f"h={h}, r={r}"
    results.append((f"hook product recurrence, h <= {max_h}", bad is None, bad or ""))

    # coefficient symmetry under the row-pair involution
    bad = None
    for h in range(2, max_h + 1):
        for f in (
            plethysm_sperp((h - 1, 1), (1, 1), ctx),
            plethysm_sperp((h,), (1, 1), ctx),
        ):
            for part, c in f.terms.items():
                if f.terms.get(row_pair_involution(part), 0) != c:
                    if bad is None:
                        bad = f"h={h}, term {part}"
    results.append((f"row-pair involution symmetry, h <= {max_h}", bad is None, bad or ""))

    # conjugation duality between the two-cell inner shapes
    bad = None
    duals = [p for n in range(1, 4) for p in partition_list(n)]
    duals += [(h,) for h in range(4, 9)] + [(1,) * h for h in range(4, 9)]
    for lam in duals:
        a = plethysm_sperp(lam, (2,), ctx)
        b = plethysm_sperp(lam, (1, 1), ctx)
        flipped = SymFunc("s", {conjugate(p): c for p, c in b.terms.items()})
        if a != flipped and bad is None:
            bad = f"outer {lam}"
    results.append(("conjugation duality for two-cell inner shapes", bad is None, bad or ""))

    # composing with a two-term alphabet splits over partition sequences
    bad = None
    for _ in range(6):
        f = _random_homogeneous(rng, rng.randint(1, 4), -2, 2)
        g1 = _random_homogeneous(rng, rng.randint(1, 2), 0, 2)
        g2 = _random_homogeneous(rng, rng.randint(1, 2), 0, 2)
        got = plethysm_sum_alphabets(f, [g1, g2], ctx)
        want = plethysm_powersum(f, g1 + g2)
        if got != want and bad is None:
            bad = f"f={f}, g1={g1}, g2={g2}"
    results.append(("two-alphabet expansion matches oracle", bad is None, bad or ""))

    # perp sequences determine their source
    bad = None
    for i in range(trials):
        f = _random_homogeneous(rng, rng.randint(1, 10))
        for mode in ("row", "column"):
            back = expand_schur(perp_sequence(f, mode, ctx), ctx)
            if back != f and bad is None:
                bad = f"trial {i}, mode {mode}, f={f}"
    results.append((f"perp-sequence round trip, {trials} random inputs", bad is None, bad or ""))

    return results


def run_suite(name, **kwargs):
    fns = {
        "oracle": suite_oracle,
        "deg3": suite_deg3,
        "rowcol": suite_rowcol,
        "hooks": suite_hooks,
        "lemmas": suite_lemmas,
    }
    if name not in fns:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
    return fns[name](**kwargs)
