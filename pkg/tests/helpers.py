"""Small independent oracles shared by the test modules.

Everything here is deliberately written against the definitions rather than
the package internals, so tests can compare two genuinely different routes.
"""

from itertools import permutations

from sympleth.partitions import partition_list
from sympleth.symfunc import SymFunc


def horizontal_additions(cur, size, bound):
    """Partitions reachable from cur by a horizontal strip of the given
    size while staying inside bound (weakly, row by row)."""
    out = []
    rows = len(bound)

    def rec(i, prefix, left):
        if i == rows:
            if left == 0:
                p = tuple(prefix)
                while p and p[-1] == 0:
                    p = p[:-1]
                out.append(p)
            return
        old = cur[i] if i < len(cur) else 0
        hi = min(bound[i], old + left, prefix[i - 1] if i else old + left)
        if i:
            hi = min(hi, cur[i - 1] if i - 1 < len(cur) else 0)
        for new in range(old, hi + 1):
            prefix.append(new)
            rec(i + 1, prefix, left - (new - old))
            prefix.pop()

    rec(0, [], size)
    return out


def brute_kostka(shape, weight):
    """Number of column-strict fillings of shape with the given content,
    counted as chains of horizontal strips (one strip per letter)."""
    shape = tuple(shape)
    weight = tuple(weight)
    if sum(shape) != sum(weight):
        return 0

    def chains(cur, remaining):
        if not remaining:
            return 1 if cur == shape else 0
        total = 0
        for nxt in horizontal_additions(cur, remaining[0], shape):
            total += chains(nxt, remaining[1:])
        return total

    return chains((), weight)


def specialize_monomial_basis(f, n):
    """Evaluate f in n variables straight from its monomial-basis expansion."""
    fm = f.to_basis("m")
    out = {}
    for part, c in fm.terms.items():
        if len(part) > n:
            continue
        expo = part + (0,) * (n - len(part))
        for perm in set(permutations(expo)):
            out[perm] = out.get(perm, 0) + c
    return {k: v for k, v in out.items() if v}


def random_homogeneous(rng, degree, lo=-5, hi=5, basis="s"):
    """A nonzero random element supported on partitions of one degree."""
    while True:
        terms = {p: rng.randint(lo, hi) for p in partition_list(degree)}
        f = SymFunc(basis, terms)
        if f:
            return f
