"""Plethysm computation paths and the perp-sequence reconstruction algorithm.

Three routes produce the Schur expansion of a plethysm:

* ``plethysm_powersum``: expand both arguments into powersums, compose there
  (indices of the inner argument get scaled), convert back.  Total but slow
  at scale; it serves as the reference oracle.
* ``plethysm_sperp``: when the inner shape is a single row or column, derive
  the perp images of the target from strictly smaller plethysms and rebuild
  the expansion with ``expand_schur``.  Heavily memoized.
* ``closed_form``: direct combinatorial descriptions for special families
  (row or column outer shapes composed with a two-cell inner shape, hooks,
  and outer shapes of degree three composed with a row).

``plethysm`` dispatches between them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import lr
from .partitions import (
    conjugate,
    corner_count,
    has_two_odd_columns,
    is_defective_threshold,
    is_even,
    is_threshold,
    make_partition,
    partition_list,
)
from .symfunc import SymFunc, omega

METHODS = ("auto", "sperp", "powersum", "closed")


class MethodUnavailableError(ValueError):
    """The requested computation path does not apply to the given shapes."""


class PerpInconsistencyError(ValueError):
    """The entries handed to expand_schur cannot be the perp images of any
    symmetric function."""


class PlethysmContext:
    """Shared memo state for a family of plethysm computations."""

    def __init__(self, lr_ctx=None):
        self.lr = lr_ctx if lr_ctx is not None else lr.DEFAULT_CONTEXT
        self.cache = {}
        self.monomial = {}


DEFAULT_CONTEXT = PlethysmContext()


def fresh_context():
    """A context with entirely cold caches, for reproducible timings."""
    return PlethysmContext(lr.LRContext())


# -- power-sum oracle ---------------------------------------------------------


def plethysm_powersum(f, g, basis="s"):
    """Compose f with g through the power-sum basis.

    The degree-r power sum acts on g by scaling every index partition by r;
    the composition extends linearly in f and multiplicatively over its
    index parts.
    """
    fp = f.to_basis("p")
    gp = g.to_basis("p")
    from .symfunc import _free_mult

    out = {}
    scaled_cache = {}
    for mu, c in fp.terms.items():
        term = {(): 1}
        for part in mu:
            scaled = scaled_cache.get(part)
            if scaled is None:
                scaled = {tuple(part * x for x in nu): cv for nu, cv in gp.terms.items()}
                scaled_cache[part] = scaled
            term = _free_mult(term, scaled)
        for k, v in term.items():
            out[k] = out.get(k, 0) + c * v
    return SymFunc("p", out).to_basis(basis)


def plethysm_sum_alphabets(f, alphabets, ctx=None):
    """Compose homogeneous f with a formal sum of alphabets.

    Expands over all sequences of partitions, one per summand, whose sizes
    add up to the degree of f, weighting each product of component
    plethysms by the inner product of f against the matching Schur product.
    """
    ctx = ctx or DEFAULT_CONTEXT
    fs = f.to_basis("s")
    if not fs.is_homogeneous():
        raise ValueError("homogeneous input required")
    d = fs.degree()
    alphabets = list(alphabets)
    if not alphabets:
        c = fs.terms.get((), 0)
        return SymFunc("s", {(): c} if c else {})
    acc = {}
    for comp in _compositions(d, len(alphabets)):
        for nus in itertools.product(*(partition_list(c) for c in comp)):
            coeff = _product_coefficient(fs, nus, ctx)
            if not coeff:
                continue
            prod = SymFunc("s", {(): 1})
            for nu, g in zip(nus, alphabets):
                prod = prod * plethysm(SymFunc("s", {nu: 1}), g, "auto", "s", ctx)
                if prod.is_zero():
                    break
            for part, c in prod.terms.items():
                acc[part] = acc.get(part, 0) + coeff * c
    return SymFunc("s", acc)


def _compositions(total, k):
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def _product_coefficient(fs, nus, ctx):
    """Hall inner product of fs against a product of Schur functions."""
    cur = {(): 1}
    for nu in nus:
        if not nu:
            continue
        nxt = {}
        for a, ca in cur.items():
            for part, m in ctx.lr.schur_product(a, nu).items():
                nxt[part] = nxt.get(part, 0) + ca * m
        cur = nxt
    return sum(c * cur.get(part, 0) for part, c in fs.terms.items())


def negate_alphabet(f):
    """Image of homogeneous f under negating the alphabet: the sign
    (-1)**degree times the omega involution."""
    if not f.is_homogeneous():
        raise ValueError("homogeneous input required")
    g = omega(f)
    return g if f.degree() % 2 == 0 else g.scale(-1)


# -- perp sequences and the reconstruction loop -------------------------------


@dataclass(frozen=True)
class PerpSequence:
    """The images of a homogeneous function under every row (or column) perp.

    entries[r - 1] is the image under the perp of degree r; it is homogeneous
    of degree len(entries) - r.
    """

    mode: str
    entries: tuple

    def __post_init__(self):
        if self.mode not in ("row", "column"):
            raise ValueError("mode must be 'row' or 'column'")


def perp_sequence(f, mode="row", ctx=None):
    """All perp images of f needed to reconstruct it, largest degree last."""
    if mode not in ("row", "column"):
        raise ValueError("mode must be 'row' or 'column'")
    ctx = ctx or DEFAULT_CONTEXT
    fs = f.to_basis("s")
    if not fs.is_homogeneous():
        raise ValueError("homogeneous input required")
    entries = []
    for r in range(1, fs.degree() + 1):
        strip = (r,) if mode == "row" else (1,) * r
        entries.append(SymFunc("s", lr.perp_dict(strip, fs.terms, ctx.lr)))
    return PerpSequence(mode, tuple(entries))


def _expand_entries(entries, mode, ctx, require_nonnegative=False):
    """Rebuild a Schur term dict from its perp images.

    Scanning r downward, the terms whose first part (row mode) or first
    column (column mode) equals r are exactly
    entries[r] minus the degree-r perp of everything recovered so far, with
    the removed row or column put back.
    """
    out = {}
    row = mode == "row"
    for r in range(len(entries), 0, -1):
        delta = dict(entries[r - 1])
        if out:
            strip = (r,) if row else (1,) * r
            for part, c in lr.perp_dict(strip, out, ctx.lr).items():
                delta[part] = delta.get(part, 0) - c
        for part, c in delta.items():
            if not c:
                continue
            if require_nonnegative and c < 0:
                raise PerpInconsistencyError(
                    f"negative multiplicity {c} at {part} while recovering degree {r}"
                )
            if row:
                if part and part[0] > r:
                    raise PerpInconsistencyError(
                        f"residual term {part} has first part above {r}"
                    )
                new = (r,) + part
            else:
                if len(part) > r:
                    raise PerpInconsistencyError(
                        f"residual term {part} has more than {r} rows"
                    )
                new = tuple(x + 1 for x in part) + (1,) * (r - len(part))
            out[new] = out.get(new, 0) + c
    return {k: v for k, v in out.items() if v}


def expand_schur(seq: PerpSequence, ctx=None, require_nonnegative=False):
    """Recover the unique homogeneous f whose perp images are the given
    sequence.  Inconsistent input raises PerpInconsistencyError."""
    ctx = ctx or DEFAULT_CONTEXT
    entries = [dict(e.terms) for e in seq.entries]
    return SymFunc("s", _expand_entries(entries, seq.mode, ctx, require_nonnegative))


# -- perps of a plethysm without expanding it ---------------------------------


def _size_vectors(m, r, rp):
    """Vectors (d_0, .., d_rp) of sizes with sum m and weighted sum r."""
    out = []

    def rec(i, weight_left, used, acc):
        if used > m:
            return
        if i > rp:
            if weight_left == 0:
                out.append((m - used,) + tuple(acc))
            return
        for d in range(weight_left // i + 1):
            acc.append(d)
            rec(i + 1, weight_left - i * d, used + d, acc)
            acc.pop()

    rec(1, r, 0, [])
    return out


def _perp_of_plethysm(lam, mu, r, column, ctx):
    lam = make_partition(lam)
    mu = make_partition(mu)
    if r < 1:
        raise ValueError("perp degree must be positive")
    ctx = ctx or DEFAULT_CONTEXT
    rp = min(r, (len(mu) if column else (mu[0] if mu else 0)))
    inner = []
    for i in range(rp + 1):
        if i == 0:
            inner.append(SymFunc("s", {mu: 1}))
        else:
            strip = (1,) * i if column else (i,)
            inner.append(SymFunc("s", lr.perp_dict(strip, {mu: 1}, ctx.lr)))
    acc = {}
    for sizes in _size_vectors(sum(lam), r, rp):
        pools = [partition_list(d) for d in sizes]
        for nus in itertools.product(*pools):
            coeff = _product_coefficient(SymFunc("s", {lam: 1}), nus, ctx)
            if not coeff:
                continue
            prod = SymFunc("s", {(): 1})
            for i, nu in enumerate(nus):
                outer = conjugate(nu) if (column and i % 2 == 1) else nu
                prod = prod * plethysm(
                    SymFunc("s", {outer: 1}), inner[i], "auto", "s", ctx
                )
                if prod.is_zero():
                    break
            for part, c in prod.terms.items():
                acc[part] = acc.get(part, 0) + coeff * c
    return SymFunc("s", acc)


def plethysm_row_perp(lam, mu, r, ctx=None):
    """Image of the plethysm of two Schur functions under the degree-r row
    perp, computed as a sum over partition sequences instead of expanding
    the plethysm first."""
    return _perp_of_plethysm(lam, mu, r, False, ctx)


def plethysm_col_perp(lam, mu, r, ctx=None):
    """Column-perp companion of plethysm_row_perp; odd positions in the
    sequence carry the omega twist."""
    return _perp_of_plethysm(lam, mu, r, True, ctx)


# -- the recursive engine -----------------------------------------------------


def _mult_into(acc, left, right, scale, ctx):
    for a, ca in left.items():
        for b, cb in right.items():
            c = scale * ca * cb
            for part, m in ctx.lr.schur_product(a, b).items():
                acc[part] = acc.get(part, 0) + c * m


def _sperp_expansion(lam, mu, ctx):
    """Schur term dict of the plethysm of s_lam with s_mu, mu a row or column.

    The perp images of the target factor through plethysms with strictly
    smaller arguments: peeling one cell off the inner column (or row) pairs
    every skew coefficient of lam with a product of two smaller plethysms.
    The target is then rebuilt with the reconstruction loop.
    """
    key = (lam, mu)
    hit = ctx.cache.get(key)
    if hit is not None:
        return hit
    if not lam:
        res = {(): 1}
    elif not mu:
        res = {(): 1} if len(lam) <= 1 else {}
    elif mu == (1,):
        res = {lam: 1}
    else:
        column = all(x == 1 for x in mu)
        row = len(mu) == 1
        if not (row or column):
            raise MethodUnavailableError(
                f"recursive method needs a row or column inner shape, got {mu}"
            )
        w = len(mu) if column else mu[0]
        inner_mu = (1,) * (w - 1) if column else (w - 1,)
        size = sum(lam)
        entries = []
        for r in range(1, size * w + 1):
            acc = {}
            if r <= size:
                for hat in partition_list(size - r):
                    coeffs = ctx.lr.skew_expansion(lam, hat)
                    if not coeffs:
                        continue
                    left = None
                    for delta, c in coeffs.items():
                        if sum(delta) != r:
                            continue
                        gamma = delta if column else conjugate(delta)
                        right = _sperp_expansion(gamma, inner_mu, ctx)
                        if not right:
                            continue
                        if left is None:
                            left = _sperp_expansion(hat, mu, ctx)
                            if not left:
                                break
                        _mult_into(acc, left, right, c, ctx)
            entries.append(acc)
        res = _expand_entries(
            entries, "row" if column else "column", ctx, require_nonnegative=True
        )
    ctx.cache[key] = res
    return res


def plethysm_sperp(lam, mu, ctx=None):
    """Plethysm of two Schur functions by perp recursion; the inner shape
    must be a single row or a single column."""
    ctx = ctx or DEFAULT_CONTEXT
    return SymFunc("s", _sperp_expansion(make_partition(lam), make_partition(mu), ctx))


# -- closed-form families -----------------------------------------------------


def even_partitions(n):
    return tuple(p for p in partition_list(n) if is_even(p))


def threshold_partitions(n):
    return tuple(p for p in partition_list(n) if is_threshold(p))


def _oriented(terms, flip):
    if not flip:
        return terms
    return {conjugate(p): c for p, c in terms.items()}


def _check_inner(inner):
    inner = make_partition(inner)
    if inner not in ((1, 1), (2,)):
        raise MethodUnavailableError(f"no closed form for inner shape {inner}")
    return inner == (2,)


def row_closed_form(h, inner=(1, 1)):
    """Row outer shape on a two-cell inner shape: one Schur term for every
    partition of twice h with all column lengths even (conjugated when the
    inner shape is the row)."""
    flip = _check_inner(inner)
    if h < 0:
        raise ValueError("h must be nonnegative")
    return SymFunc("s", _oriented({p: 1 for p in even_partitions(2 * h)}, flip))


def column_closed_form(h, inner=(1, 1)):
    """Column outer shape on a two-cell inner shape: one Schur term for every
    threshold partition of twice h."""
    flip = _check_inner(inner)
    if h < 0:
        raise ValueError("h must be nonnegative")
    return SymFunc("s", _oriented({p: 1 for p in threshold_partitions(2 * h)}, flip))


def hook_one_closed_form(h, inner=(1, 1)):
    """Outer hook with a single box below the arm.

    Each partition with exactly two odd columns of distinct lengths appears
    once; each even partition appears with multiplicity one less than its
    corner count."""
    flip = _check_inner(inner)
    if h < 2:
        raise ValueError("h must be at least 2")
    out = {}
    for p in partition_list(2 * h):
        if has_two_odd_columns(p):
            out[p] = out.get(p, 0) + 1
        elif is_even(p):
            b = corner_count(p)
            if b > 1:
                out[p] = out.get(p, 0) + b - 1
    return SymFunc("s", _oriented(out, flip))


def hook_tail_closed_form(h, inner=(1, 1)):
    """Outer hook with a two-box arm above a column.

    Defective threshold partitions appear once; threshold partitions appear
    floor((corners - 1) / 2) times."""
    flip = _check_inner(inner)
    if h < 2:
        raise ValueError("h must be at least 2")
    out = {}
    for p in partition_list(2 * h):
        if is_defective_threshold(p):
            out[p] = out.get(p, 0) + 1
        elif is_threshold(p):
            b = (corner_count(p) - 1) // 2
            if b:
                out[p] = out.get(p, 0) + b
    return SymFunc("s", _oriented(out, flip))


def hook_two_closed_form(h, inner=(1, 1), ctx=None):
    """Outer hook with two boxes below the arm.

    The multiplicity of each partition of twice h counts skew lattice
    fillings against even partitions four cells smaller, corrected on even
    shapes (a corner-pair count) and on two-odd-column shapes (one less)."""
    flip = _check_inner(inner)
    if h < 3:
        raise ValueError("h must be at least 3")
    ctx = ctx or DEFAULT_CONTEXT
    base = {}
    for nu in even_partitions(2 * (h - 2)):
        for part, m in ctx.lr.schur_product(nu, (2, 1, 1)).items():
            base[part] = base.get(part, 0) + m
    out = {}
    for p in partition_list(2 * h):
        if is_even(p):
            a = math.comb(corner_count(p) - 1, 2)
        elif has_two_odd_columns(p):
            a = base.get(p, 0) - 1
        else:
            a = base.get(p, 0)
        if a:
            out[p] = a
    return SymFunc("s", _oriented(out, flip))


def hook_alternating_closed_form(h, k, inner=(1, 1), ctx=None):
    """General outer hook by inclusion-exclusion over pairs of an even and a
    threshold partition."""
    flip = _check_inner(inner)
    if not h > k >= 0:
        raise ValueError("need h > k >= 0")
    ctx = ctx or DEFAULT_CONTEXT
    acc = {}
    for i in range(k + 1):
        sign = -1 if i % 2 else 1
        for nu in even_partitions(2 * (h - k + i)):
            for rho in threshold_partitions(2 * (k - i)):
                for part, m in ctx.lr.schur_product(nu, rho).items():
                    acc[part] = acc.get(part, 0) + sign * m
    return SymFunc("s", _oriented({p: c for p, c in acc.items() if c}, flip))


def degree_three_closed_form(lam, k):
    """Outer shape of degree three on a row inner shape, via the type
    classification of equal-weight tableaux."""
    from . import tableaux

    lam = make_partition(lam)
    if k < 1:
        raise ValueError("k must be at least 1")
    labels = {
        (3,): tableaux.TableauType.ROW,
        (2, 1): tableaux.TableauType.HOOK3,
        (1, 1, 1): tableaux.TableauType.COLUMN,
    }
    if lam not in labels:
        raise MethodUnavailableError(f"outer shape {lam} is not of degree three")
    return tableaux.type_sum(labels[lam], k)


def closed_form(lam, mu, ctx=None):
    """Dispatch to whichever closed family covers the pair of shapes."""
    lam = make_partition(lam)
    mu = make_partition(mu)
    ctx = ctx or DEFAULT_CONTEXT
    if mu in ((1, 1), (2,)):
        if len(lam) <= 1:
            return row_closed_form(sum(lam), mu)
        if lam[0] == 1:
            return column_closed_form(len(lam), mu)
        if all(x == 1 for x in lam[1:]):
            return hook_alternating_closed_form(sum(lam), len(lam) - 1, mu, ctx)
        raise MethodUnavailableError(f"no closed form for outer shape {lam}")
    if len(mu) == 1 and sum(lam) == 3:
        return degree_three_closed_form(lam, mu[0])
    raise MethodUnavailableError(f"no closed form for shapes {lam}, {mu}")


# -- dispatch -----------------------------------------------------------------


def plethysm(f, g, method="auto", basis="s", ctx=None):
    """Plethysm of two symmetric functions, linear in the outer argument."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    ctx = ctx or DEFAULT_CONTEXT
    if method == "powersum":
        return plethysm_powersum(f, g, basis)
    fs = f.to_basis("s")
    gs = g.to_basis("s")
    single = None
    if len(gs.terms) == 1:
        ((mu, c),) = gs.terms.items()
        if c == 1:
            single = mu
    acc = {}
    for lam, c in fs.terms.items():
        if single is None:
            if method != "auto":
                raise MethodUnavailableError(
                    f"method {method!r} needs a single unit Schur term inside"
                )
            res = plethysm_powersum(SymFunc("s", {lam: 1}), gs, "s")
        elif method == "sperp":
            res = plethysm_sperp(lam, single, ctx)
        elif method == "closed":
            res = closed_form(lam, single, ctx)
        else:
            try:
                res = closed_form(lam, single, ctx)
            except MethodUnavailableError:
                try:
                    res = plethysm_sperp(lam, single, ctx)
                except MethodUnavailableError:
                    res = plethysm_powersum(SymFunc("s", {lam: 1}), gs, "s")
        for part, v in res.terms.items():
            acc[part] = acc.get(part, 0) + c * v
    return SymFunc("s", acc).to_basis(basis)


# -- monomial expansions ------------------------------------------------------


def monomial_expansion(f, n, ctx=None):
    """Coefficients of f as a polynomial in n variables.

    Peels off the last variable: the part of degree r in it is governed by
    the degree-r row perp of f in one variable fewer.  Returns a dict from
    exponent tuples of length n to coefficients.
    """
    if n < 0:
        raise ValueError("need a nonnegative variable count")
    ctx = ctx or DEFAULT_CONTEXT
    fs = f.to_basis("s")
    memo = ctx.monomial

    def key_of(terms):
        return tuple(sorted(terms.items()))

    def rec(terms, n):
        if n == 0:
            c = terms.get((), 0)
            return {(): c} if c else {}
        key = (key_of(terms), n)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out = {}
        maxr = max((sum(p) for p in terms), default=0)
        for r in range(maxr + 1):
            sub_terms = terms if r == 0 else lr.perp_dict((r,), terms, ctx.lr)
            for expo, c in rec(sub_terms, n - 1).items():
                out[expo + (r,)] = c
        memo[key] = out
        return out

    return rec(dict(fs.terms), n)
