"""Exact linear combinations over the five classical symmetric-function bases.

Coefficients live in Q (ints where possible, fractions.Fraction otherwise) so
every operation is exact.  Basis conversions pivot through the power-sum basis.
SymFunc values are immutable after construction and safe to share between
threads; the module-level memo tables only ever gain entries whose values are
pure functions of their keys.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .partitions import conjugate, make_partition, partition_list

BASES = ("s", "m", "h", "e", "p")
BASIS_NAMES = {
    "s": "schur",
    "m": "monomial",
    "h": "homogeneous",
    "e": "elementary",
    "p": "powersum",
}


def _num(c):
    """Coerce a coefficient to int when integral, Fraction otherwise."""
    if type(c) is int:
        return c
    f = Fraction(c)
    return int(f) if f.denominator == 1 else f


def term_sort_key(p):
    """Sort key: degree descending, then descending lexicographic parts."""
    return (-sum(p), tuple(-x for x in p))


class SymFunc:
    """A finite linear combination of basis elements indexed by partitions."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        clean = {}
        for part, c in (terms or {}).items():
            c = _num(c)
            if c:
                clean[tuple(part)] = c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    # -- inspection ------------------------------------------------------

    def coefficient(self, part):
        return self.terms.get(tuple(part), 0)

    def constant_term(self):
        return self.terms.get((), 0)

    def degree(self):
        """Largest term degree; 0 for the zero function."""
        return max((sum(p) for p in self.terms), default=0)

    def is_homogeneous(self):
        degs = {sum(p) for p in self.terms}
        return len(degs) <= 1

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: term_sort_key(kv[0]))

    def key(self):
        """Hashable canonical form, usable as a memo key."""
        return (self.basis, tuple(self.sorted_terms()))

    def support(self):
        return sorted(self.terms, key=term_sort_key)

    # -- arithmetic ------------------------------------------------------

    def scale(self, c):
        c = _num(c)
        if not c:
            return SymFunc(self.basis)
        return SymFunc(self.basis, {p: v * c for p, v in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        g = other.to_basis(self.basis)
        out = dict(self.terms)
        for p, c in g.terms.items():
            out[p] = out.get(p, 0) + c
        return SymFunc(self.basis, out)

    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return _multiply(self, other.to_basis(self.basis))
        try:
            return self.scale(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        return self.scale(Fraction(1, 1) / Fraction(other))

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = other.to_basis(self.basis)
        return self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.key())

    # -- conversion ------------------------------------------------------

    def to_basis(self, target):
        if target not in BASES:
            raise ValueError(f"unknown basis {target!r}")
        if target == self.basis:
            return self
        return SymFunc(target, _from_powersum(_to_powersum(self), target))

    # -- formatting ------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for part, c in self.sorted_terms():
            body = f"{self.basis}[{','.join(map(str, part))}]"
            mag = c if c > 0 else -c
            head = body if mag == 1 else f"{mag}*{body}"
            if not pieces:
                pieces.append(head if c > 0 else "-" + head)
            else:
                pieces.append(("+" if c > 0 else "-") + head)
        return "".join(pieces)

    def __repr__(self):
        return f"SymFunc({self.basis!r}, {dict(self.sorted_terms())!r})"


# -- convenience constructors ---------------------------------------------


def _single(basis, parts, coeff):
    return SymFunc(basis, {make_partition(parts): coeff})


def schur(parts, coeff=1):
    return _single("s", parts, coeff)


def monomial(parts, coeff=1):
    return _single("m", parts, coeff)


def homogeneous(parts, coeff=1):
    return _single("h", parts, coeff)


def elementary(parts, coeff=1):
    return _single("e", parts, coeff)


def powersum(parts, coeff=1):
    return _single("p", parts, coeff)


# -- multiplication --------------------------------------------------------


def _merge_sorted(a, b):
    return tuple(sorted(a + b, reverse=True))


def _free_mult(A, B):
    """Product of term dicts in a free multiplicative basis (p, h, e)."""
    out = {}
    for pa, ca in A.items():
        for pb, cb in B.items():
            k = _merge_sorted(pa, pb)
            out[k] = out.get(k, 0) + ca * cb
    return out


def _multiply(f, g):
    """Product of two SymFuncs already expressed in the same basis."""
    basis = f.basis
    if basis in ("p", "h", "e"):
        return SymFunc(basis, _free_mult(f.terms, g.terms))
    if basis == "s":
        from . import lr

        out = {}
        for pa, ca in f.terms.items():
            for pb, cb in g.terms.items():
                c = ca * cb
                for part, mult in lr.DEFAULT_CONTEXT.schur_product(pa, pb).items():
                    out[part] = out.get(part, 0) + c * mult
        return SymFunc("s", out)
    # monomial basis: no free structure, go through powersums
    fp = f.to_basis("p")
    gp = g.to_basis("p")
    return SymFunc("p", _free_mult(fp.terms, gp.terms)).to_basis("m")


# -- generator expansions (Newton recurrences) ------------------------------


@lru_cache(maxsize=None)
def _h_in_p(n):
    """h_n in the power-sum basis, as a tuple of (partition, coeff)."""
    if n == 0:
        return (((), 1),)
    acc = {}
    for i in range(1, n + 1):
        for part, c in _h_in_p(n - i):
            k = _merge_sorted(part, (i,))
            acc[k] = acc.get(k, 0) + c
    inv = Fraction(1, n)
    return tuple((k, _num(c * inv)) for k, c in acc.items())


@lru_cache(maxsize=None)
def _e_in_p(n):
    """e_n in the power-sum basis."""
    if n == 0:
        return (((), 1),)
    acc = {}
    for i in range(1, n + 1):
        sign = -1 if i % 2 == 0 else 1
        for part, c in _e_in_p(n - i):
            k = _merge_sorted(part, (i,))
            acc[k] = acc.get(k, 0) + sign * c
    inv = Fraction(1, n)
    return tuple((k, _num(c * inv)) for k, c in acc.items())


@lru_cache(maxsize=None)
def _p_in_h(n):
    """p_n in the complete homogeneous basis."""
    acc = {(n,): n}
    for i in range(1, n):
        for part, c in _p_in_h(i):
            k = _merge_sorted(part, (n - i,))
            acc[k] = acc.get(k, 0) - c
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _p_in_e(n):
    """p_n in the elementary basis."""
    lead = -n if n % 2 == 0 else n
    acc = {(n,): lead}
    outer = -1 if n % 2 == 0 else 1
    for i in range(1, n):
        inner = -1 if i % 2 == 0 else 1
        for part, c in _p_in_e(i):
            k = _merge_sorted(part, (n - i,))
            acc[k] = acc.get(k, 0) - outer * inner * c
    return tuple((k, c) for k, c in acc.items() if c)


@lru_cache(maxsize=None)
def _prod_in_p(gen, lam):
    """Product expansion of a multiplicative family in powersums.

    gen is "h" or "e"; lam indexes the product of generators.
    """
    if not lam:
        return (((), 1),)
    head = _h_in_p(lam[0]) if gen == "h" else _e_in_p(lam[0])
    rest = dict(_prod_in_p(gen, lam[1:]))
    return tuple(_free_mult(dict(head), rest).items())


@lru_cache(maxsize=None)
def _prod_from_p(gen, lam):
    """p_lam expanded in the h or e basis."""
    if not lam:
        return (((), 1),)
    head = _p_in_h(lam[0]) if gen == "h" else _p_in_e(lam[0])
    rest = dict(_prod_from_p(gen, lam[1:]))
    return tuple(_free_mult(dict(head), rest).items())


# -- Schur to powersum via border-strip characters ---------------------------


def _strip_removals(lam, r):
    """Yield (partition, height) for every border r-strip removable from lam."""
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    for x in beta:
        y = x - r
        if y < 0 or y in bset:
            continue
        height = sum(1 for b in beta if y < b < x)
        nb = sorted((b for b in beta if b != x), reverse=True)
        nb.append(y)
        nb.sort(reverse=True)
        parts = tuple(nb[j] - (L - 1 - j) for j in range(L))
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        yield parts, height


@lru_cache(maxsize=None)
def _character(lam, mu):
    """Irreducible symmetric-group character value, by border-strip recursion."""
    if not mu:
        return 1 if not lam else 0
    total = 0
    for nu, height in _strip_removals(lam, mu[0]):
        total += (-1) ** height * _character(nu, mu[1:])
    return total


@lru_cache(maxsize=None)
def zee(lam):
    """Order of the centralizer of a permutation of cycle type lam."""
    z = 1
    run = 1
    for i, x in enumerate(lam):
        z *= x
        if i and lam[i - 1] == x:
            run += 1
        else:
            run = 1
        z *= run
    return z


@lru_cache(maxsize=None)
def _schur_in_p(lam):
    n = sum(lam)
    out = []
    for mu in partition_list(n):
        chi = _character(lam, mu)
        if chi:
            out.append((mu, _num(Fraction(chi, zee(mu)))))
    return tuple(out)


# -- powersum to Schur via ribbon growth on bitmask beta sets ----------------
#
# A partition of m is encoded, with L slots, as the set of first-column hook
# lengths {part_i + L - i}, packed into the bits of an int.  Multiplying by
# p_r moves one bit up by r positions; the sign is the parity of the number
# of occupied positions jumped over.  Expansions are memoized per index
# partition at the minimal slot count and shifted when embedded into a
# higher-degree computation.

_PS_MEMO = {(): {0: 1}}  # empty partition, L = 0: no slots, no bits


def _shift_mask_dict(d, delta):
    if delta == 0:
        return d
    low = (1 << delta) - 1
    return {(m << delta) | low: c for m, c in d.items()}


def _ribbon_mult(d, r):
    """Multiply a mask-encoded Schur expansion by p_r."""
    out = {}
    for mask, coeff in d.items():
        m = mask
        while m:
            low = m & -m
            x = low.bit_length() - 1
            m ^= low
            y = x + r
            if (mask >> y) & 1:
                continue
            between = mask >> (x + 1)
            crossed = (between & ((1 << (r - 1)) - 1)).bit_count()
            nm = (mask ^ low) | (1 << y)
            c = -coeff if crossed % 2 else coeff
            out[nm] = out.get(nm, 0) + c
    return {k: v for k, v in out.items() if v}


def _ps_expansion(mu):
    """Schur expansion of p_mu as {mask: int}, with L = sum(mu) slots."""
    hit = _PS_MEMO.get(mu)
    if hit is not None:
        return hit
    rest = _ps_expansion(mu[1:])
    res = _ribbon_mult(_shift_mask_dict(rest, mu[0]), mu[0])
    _PS_MEMO[mu] = res
    return res


def _mask_to_partition(mask):
    parts = []
    j = 0
    m = mask
    while m:
        low = m & -m
        x = low.bit_length() - 1
        m ^= low
        if x - j > 0:
            parts.append(x - j)
        j += 1
    parts.reverse()
    return tuple(parts)


def _powersum_terms_to_schur(terms):
    """Convert a power-sum term dict to a Schur term dict, degree by degree."""
    out = {}
    by_degree = {}
    for mu, c in terms.items():
        by_degree.setdefault(sum(mu), {})[mu] = c
    for n, group in by_degree.items():
        if n == 0:
            out[()] = out.get((), 0) + group[()]
            continue
        acc = {}
        for mu, c in group.items():
            for mask, k in _ps_expansion(mu).items():
                acc[mask] = acc.get(mask, 0) + c * k
        for mask, c in acc.items():
            if c:
                part = _mask_to_partition(mask)
                out[part] = out.get(part, 0) + c
    return out


# -- monomial basis ----------------------------------------------------------


def _distribution_count(groups, caps):
    """Number of ways to assign the grouped multiset of parts to capacity
    slots so that every slot is filled exactly."""
    caps = tuple(caps)

    def rec(gi, caps):
        if gi == len(groups):
            return 1 if not any(caps) else 0
        v, m = groups[gi]
        total = 0

        def place(j, left, ways, caps):
            nonlocal total
            if j == len(caps):
                if left == 0:
                    total += ways * rec(gi + 1, caps)
                return
            kmax = min(left, caps[j] // v)
            for k in range(kmax + 1):
                place(
                    j + 1,
                    left - k,
                    ways * math.comb(left, k),
                    caps[:j] + (caps[j] - k * v,) + caps[j + 1 :],
                )

        place(0, m, 1, caps)
        return total

    return rec(0, caps)


@lru_cache(maxsize=None)
def _p_in_m(lam):
    """p_lam in the monomial basis (integer coefficients)."""
    n = sum(lam)
    if n == 0:
        return (((), 1),)
    values = sorted(set(lam), reverse=True)
    groups = tuple((v, lam.count(v)) for v in values)
    out = []
    for mu in partition_list(n):
        if len(mu) > len(lam):
            continue
        c = _distribution_count(groups, mu)
        if c:
            out.append((mu, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _m_in_p(mu):
    """m_mu in the power-sum basis, by triangular elimination."""
    row = dict(_p_in_m(mu))
    acc = {mu: Fraction(1)}
    for nu, r in row.items():
        if nu == mu:
            continue
        for part, c in _m_in_p(nu):
            acc[part] = acc.get(part, 0) - r * Fraction(c)
    lead = Fraction(1, row[mu])
    return tuple((part, _num(c * lead)) for part, c in acc.items() if c)


# -- conversion drivers ------------------------------------------------------


def _to_powersum(f):
    """Term dict of f expressed in the power-sum basis."""
    if f.basis == "p":
        return dict(f.terms)
    out = {}
    for lam, c in f.terms.items():
        if f.basis == "s":
            expansion = _schur_in_p(lam)
        elif f.basis == "h":
            expansion = _prod_in_p("h", lam)
        elif f.basis == "e":
            expansion = _prod_in_p("e", lam)
        else:
            expansion = _m_in_p(lam)
        for part, k in expansion:
            out[part] = out.get(part, 0) + c * k
    return out


def _from_powersum(pterms, target):
    if target == "p":
        return pterms
    if target == "s":
        return _powersum_terms_to_schur(pterms)
    out = {}
    if target in ("h", "e"):
        for mu, c in pterms.items():
            for part, k in _prod_from_p(target, mu):
                out[part] = out.get(part, 0) + c * k
        return out
    for mu, c in pterms.items():
        for part, k in _p_in_m(mu):
            out[part] = out.get(part, 0) + c * k
    return out


# -- classical operators -----------------------------------------------------


def hall_inner_product(f, g):
    """Bilinear form with the Schur basis orthonormal."""
    if f.basis == "s" and g.basis == "s":
        if len(f.terms) > len(g.terms):
            f, g = g, f
        return _num(sum(c * g.terms.get(p, 0) for p, c in f.terms.items()))
    fp = _to_powersum(f)
    gp = _to_powersum(g)
    if len(fp) > len(gp):
        fp, gp = gp, fp
    return _num(sum(c * gp.get(p, 0) * zee(p) for p, c in fp.items()))


def omega(f):
    """The involution sending s_lam to s_(lam conjugate)."""
    if f.basis == "s":
        return SymFunc("s", {conjugate(p): c for p, c in f.terms.items()})
    if f.basis == "p":
        return SymFunc(
            "p",
            {p: (c if (sum(p) - len(p)) % 2 == 0 else -c) for p, c in f.terms.items()},
        )
    if f.basis == "h":
        return SymFunc("e", f.terms)
    if f.basis == "e":
        return SymFunc("h", f.terms)
    return omega(f.to_basis("p")).to_basis("m")


def restrict_length(f, k):
    """Keep the Schur terms indexed by partitions with at most k rows."""
    if f.basis != "s":
        raise ValueError("restrict_length needs a Schur-basis input")
    return SymFunc("s", {p: c for p, c in f.terms.items() if len(p) <= k})


def index_add(f, g):
    """Bilinear product sending a pair of Schur terms to the Schur function
    indexed by the componentwise sum of their partitions."""
    if f.basis != "s" or g.basis != "s":
        raise ValueError("index_add needs Schur-basis inputs")
    from .partitions import add_componentwise

    out = {}
    for pa, ca in f.terms.items():
        for pb, cb in g.terms.items():
            k = add_componentwise(pa, pb)
            out[k] = out.get(k, 0) + ca * cb
    return SymFunc("s", out)


def clear_caches():
    """Drop every module-level memo table (used for cold benchmark timings)."""
    for fn in (
        _h_in_p,
        _e_in_p,
        _p_in_h,
        _p_in_e,
        _prod_in_p,
        _prod_from_p,
        _character,
        zee,
        _schur_in_p,
        _p_in_m,
        _m_in_p,
    ):
        fn.cache_clear()
    _PS_MEMO.clear()
    _PS_MEMO[()] = {0: 1}
