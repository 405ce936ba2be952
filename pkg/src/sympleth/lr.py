"""Littlewood-Richardson kernel: strips, products, skew expansions, perp operators.

The combinatorial routines work on raw partition tuples and integer dicts so
the recursive plethysm engines can stay off the SymFunc wrapper in their hot
loops.  An LRContext carries the memo tables; all cached values are pure
functions of their keys, so a context may be shared freely across threads
under CPython.
"""

from __future__ import annotations

from .partitions import conjugate, contains
from .symfunc import SymFunc


# -- strip enumeration -------------------------------------------------------


def add_horizontal_strips(lam, r):
    """Partitions obtained from lam by adding a horizontal r-strip."""
    out = []
    n = len(lam)

    def rec(i, prefix, left):
        if i == n:
            if left == 0:
                out.append(tuple(prefix))
            elif left <= (lam[n - 1] if n else r):
                out.append(tuple(prefix) + (left,))
            return
        cap = lam[i - 1] if i else lam[0] + left
        hi = min(cap, lam[i] + left)
        for new in range(hi, lam[i] - 1, -1):
            prefix.append(new)
            rec(i + 1, prefix, left - (new - lam[i]))
            prefix.pop()

    if not lam:
        return [(r,)] if r else [()]
    rec(0, [], r)
    return out


def remove_horizontal_strips(lam, r):
    """Partitions nu inside lam with lam/nu a horizontal r-strip."""
    out = []
    n = len(lam)

    def rec(i, prefix, left):
        if left < 0:
            return
        if i == n:
            if left == 0:
                p = tuple(prefix)
                while p and p[-1] == 0:
                    p = p[:-1]
                out.append(p)
            return
        lo = lam[i + 1] if i + 1 < n else 0
        for new in range(lam[i], lo - 1, -1):
            prefix.append(new)
            rec(i + 1, prefix, left - (lam[i] - new))
            prefix.pop()

    rec(0, [], r)
    return out


def add_vertical_strips(lam, r):
    return [conjugate(p) for p in add_horizontal_strips(conjugate(lam), r)]


def remove_vertical_strips(lam, r):
    return [conjugate(p) for p in remove_horizontal_strips(conjugate(lam), r)]


# -- product and skew expansions ---------------------------------------------


def _strip_states(shape, size, prevcum):
    """All ways to add a horizontal strip of the given size for the next
    letter of an LR filling.

    prevcum holds the previous letter's cumulative cell counts per row
    (None for the first letter, which is unconstrained).  Returns pairs
    (new shape, cumulative counts of the new letter per row).  The lattice
    condition is that the new letter's count through row r must not exceed
    the previous letter's count through row r-1.
    """
    n = len(shape)
    results = []

    def rec(i, newshape, cums, placed):
        if i > n:
            if placed == size:
                trimmed = newshape[:-1] if newshape and newshape[-1] == 0 else newshape
                results.append((tuple(trimmed), tuple(cums[: len(trimmed)])))
            return
        old = shape[i] if i < n else 0
        left = size - placed
        cap = shape[i - 1] if i >= 1 else old + left
        if prevcum is None:
            lat = left
        elif i == 0:
            lat = 0
        else:
            prev_through = prevcum[min(i - 1, len(prevcum) - 1)] if prevcum else 0
            lat = prev_through - placed
        hi = min(old + left, cap, old + lat)
        for new in range(old, hi + 1):
            newshape.append(new)
            cums.append(placed + (new - old))
            rec(i + 1, newshape, cums, placed + (new - old))
            newshape.pop()
            cums.pop()

    rec(0, [], [], 0)
    return results


class LRContext:
    """Memoized Littlewood-Richardson computations."""

    def __init__(self):
        self._products = {}
        self._skews = {}
        self._coeffs = {}
        self._strips = {}

    # -- products --------------------------------------------------------

    def schur_product(self, a, b):
        """Schur expansion of s_a * s_b as {partition: multiplicity}."""
        if sum(b) > sum(a) or (sum(b) == sum(a) and b > a):
            a, b = b, a
        key = (a, b)
        hit = self._products.get(key)
        if hit is not None:
            return hit
        # run the filling DFS on whichever orientation has the smaller
        # letter-count times row-count footprint
        if a and b and a[0] * b[0] < len(a) * len(b):
            res = {
                conjugate(p): m
                for p, m in self._mult(conjugate(a), conjugate(b)).items()
            }
        else:
            res = self._mult(a, b)
        self._products[key] = res
        return res

    def _mult(self, a, b):
        if not b:
            return {a: 1}
        if not a:
            return {b: 1}
        strips = self._strips
        states = {(a, None): 1}
        for size in b:
            nxt = {}
            for (shape, prevcum), mult in states.items():
                skey = (shape, size, prevcum)
                moves = strips.get(skey)
                if moves is None:
                    moves = _strip_states(shape, size, prevcum)
                    strips[skey] = moves
                for key in moves:
                    nxt[key] = nxt.get(key, 0) + mult
            states = nxt
        out = {}
        for (shape, _), mult in states.items():
            out[shape] = out.get(shape, 0) + mult
        return out

    # -- skew expansions ---------------------------------------------------

    def skew_expansion(self, outer, inner):
        """Schur expansion of the skew function outer/inner.

        Counts the column-strict fillings of the skew diagram whose reverse
        row reading word is a lattice word, grouped by content.
        """
        key = (outer, inner)
        hit = self._skews.get(key)
        if hit is not None:
            return hit
        res = self._skew(outer, inner)
        self._skews[key] = res
        return res

    def _skew(self, outer, inner):
        if not contains(outer, inner):
            return {}
        inner = inner + (0,) * (len(outer) - len(inner))
        cells = []
        for r in range(1, len(outer) + 1):
            for c in range(outer[r - 1], inner[r - 1], -1):
                cells.append((r, c))
        total = sum(outer) - sum(inner)
        if total == 0:
            return {(): 1}
        out = {}
        counts = [0] * (len(outer) + 2)
        filling = {}

        def rec(idx):
            if idx == len(cells):
                content = []
                for v in range(1, len(counts)):
                    if counts[v] == 0:
                        break
                    content.append(counts[v])
                k = tuple(content)
                out[k] = out.get(k, 0) + 1
                return
            r, c = cells[idx]
            above = filling.get((r - 1, c))
            right = filling.get((r, c + 1))
            lo = 1 if above is None else above + 1
            hi = r if right is None else min(r, right)
            for v in range(lo, hi + 1):
                if v > 1 and counts[v - 1] <= counts[v]:
                    continue
                counts[v] += 1
                filling[(r, c)] = v
                rec(idx + 1)
                del filling[(r, c)]
                counts[v] -= 1

        rec(0)
        return out

    # -- coefficients ------------------------------------------------------

    def lr_coefficient(self, lam, mu, nu):
        """Multiplicity of s_lam in s_mu * s_nu."""
        if sum(lam) != sum(mu) + sum(nu):
            return 0
        if nu > mu:
            mu, nu = nu, mu
        key = (lam, mu, nu)
        alt = (conjugate(lam), conjugate(mu), conjugate(nu))
        if alt[2] > alt[1]:
            alt = (alt[0], alt[2], alt[1])
        if alt < key:
            key = alt
        hit = self._coeffs.get(key)
        if hit is None:
            klam, kmu, knu = key
            hit = self.skew_expansion(klam, kmu).get(knu, 0)
            self._coeffs[key] = hit
        return hit


DEFAULT_CONTEXT = LRContext()


def lr_coefficient(lam, mu, nu, ctx=None):
    return (ctx or DEFAULT_CONTEXT).lr_coefficient(tuple(lam), tuple(mu), tuple(nu))


# -- Pieri rules and perp operators -------------------------------------------


def pieri_row(lam, r):
    """s_lam times the complete homogeneous generator of degree r."""
    if r < 0:
        raise ValueError("strip size must be nonnegative")
    return SymFunc("s", {p: 1 for p in add_horizontal_strips(tuple(lam), r)})


def pieri_col(lam, r):
    """s_lam times the elementary generator of degree r."""
    if r < 0:
        raise ValueError("strip size must be nonnegative")
    return SymFunc("s", {p: 1 for p in add_vertical_strips(tuple(lam), r)})


def perp_dict(lam, terms, ctx=None):
    """Apply the adjoint of multiplication by s_lam to a Schur term dict."""
    ctx = ctx or DEFAULT_CONTEXT
    lam = tuple(lam)
    out = {}
    if not lam:
        return dict(terms)
    row = len(lam) == 1
    col = lam[0] == 1
    for mu, c in terms.items():
        if row:
            for nu in remove_horizontal_strips(mu, lam[0]):
                out[nu] = out.get(nu, 0) + c
        elif col:
            for nu in remove_vertical_strips(mu, len(lam)):
                out[nu] = out.get(nu, 0) + c
        else:
            for nu, k in ctx.skew_expansion(mu, lam).items():
                out[nu] = out.get(nu, 0) + c * k
    return {k: v for k, v in out.items() if v}


def schur_perp(lam, f, ctx=None):
    """The operator adjoint to multiplication by s_lam, applied termwise."""
    g = f.to_basis("s")
    return SymFunc("s", perp_dict(lam, g.terms, ctx))


def f_perp(f, g, ctx=None):
    """Adjoint of multiplication by f under the Hall inner product."""
    ctx = ctx or DEFAULT_CONTEXT
    if f.basis == "p" and g.basis == "p":
        out = {}
        for mu, cf in f.terms.items():
            for nu, cg in g.terms.items():
                c = cf * cg
                parts = list(nu)
                for r in mu:
                    if r not in parts:
                        c = 0
                        break
                    c *= r * parts.count(r)
                    parts.remove(r)
                if c:
                    k = tuple(parts)
                    out[k] = out.get(k, 0) + c
        return SymFunc("p", out)
    fs = f.to_basis("s")
    gs = g.to_basis("s")
    out = {}
    for lam, c in fs.terms.items():
        for nu, k in perp_dict(lam, gs.terms, ctx).items():
            out[nu] = out.get(nu, 0) + c * k
    return SymFunc("s", out).to_basis(g.basis)
