"""Integer partitions and the partition-level predicates behind the expansion formulas.

A partition is a plain tuple of weakly decreasing positive integers; the empty
tuple is the empty partition.  Cells are (row, column) pairs, 1-based, rows
numbered from the top.  Everything here is a pure function of immutable values,
so unrestricted concurrent use is safe.
"""

from __future__ import annotations

from functools import lru_cache

Partition = tuple
Cell = tuple


def make_partition(parts) -> Partition:
    """Normalize to a tuple, stripping trailing zeros; reject invalid input."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, x in enumerate(p):
        if x <= 0:
            raise ValueError(f"partition parts must be positive: {list(parts)!r}")
        if i and p[i - 1] < x:
            raise ValueError(f"partition parts must weakly decrease: {list(parts)!r}")
    return p


def partitions_of(n, max_part=None):
    """Yield all partitions of n in descending lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_list(n, max_part=None):
    """Cached tuple of partitions_of(n, max_part)."""
    return tuple(partitions_of(n, max_part))


@lru_cache(maxsize=None)
def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    """True when the diagram of inner fits inside the diagram of outer."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def durfee(p: Partition) -> int:
    """Side of the largest square of cells anchored at (1, 1)."""
    d = 0
    for i, x in enumerate(p):
        if x >= i + 1:
            d = i + 1
    return d


def is_even(p: Partition) -> bool:
    """True when every column of the diagram has even length."""
    return all(c % 2 == 0 for c in conjugate(p))


def is_threshold(p: Partition) -> bool:
    """True when column i is exactly one longer than row i for every i up to
    the Durfee size.  The empty partition qualifies vacuously."""
    q = conjugate(p)
    return all(q[i] == p[i] + 1 for i in range(durfee(p)))


def corners(p: Partition):
    """Cells with no neighbor below or to the right, in increasing row order."""
    out = []
    for i, part in enumerate(p):
        if i + 1 == len(p) or p[i + 1] < part:
            out.append((i + 1, part))
    return out


def corner_count(p: Partition) -> int:
    return len(corners(p))


def is_corner(p: Partition, r: int, c: int) -> bool:
    if r < 1 or r > len(p) or p[r - 1] != c:
        return False
    return r == len(p) or p[r] < c


def opposite_cell(s: int, t: int) -> Cell:
    """Partner cell used when peeling vertical strips off threshold shapes."""
    if s < 1 or t < 1:
        raise ValueError("cells are 1-based")
    return (t + 1, s) if s <= t else (t, s - 1)


def row_pair_involution(p: Partition) -> Partition:
    """Conjugate of the partition of consecutive row-pair sums.

    The input is padded with one zero row when its length is odd.  On the
    shapes where the hook expansions live (even shapes and the two-odd-column
    shapes) this map is an involution that preserves size and corner count.
    """
    q = p + (0,) if len(p) % 2 else p
    sums = tuple(q[i] + q[i + 1] for i in range(0, len(q), 2))
    return conjugate(make_partition(sums))


def has_two_odd_columns(p: Partition) -> bool:
    """All columns of even length except exactly two of distinct odd lengths.

    Only defined for partitions of even size.
    """
    if sum(p) % 2:
        raise ValueError("size must be even")
    odd = [c for c in conjugate(p) if c % 2]
    return len(odd) == 2 and odd[0] != odd[1]


def is_defective_threshold(p: Partition) -> bool:
    """Threshold condition violated in one of two controlled patterns.

    Writing q for the conjugate, the condition q[i] == p[i] + 1 must hold for
    every i up to the Durfee size except either (i) exactly two indices where
    q[i] == p[i] + 2 with cell (q[i], i) a corner, or q[i] == p[i]; or
    (ii) exactly one index where q[i] == p[i] + 3.  Partitions with no
    violation at all (genuine threshold shapes) are excluded.  Only defined
    for partitions of even size.
    """
    if sum(p) % 2:
        raise ValueError("size must be even")
    q = conjugate(p)
    two_kinds = 0
    plus_three = 0
    for i in range(1, durfee(p) + 1):
        ci, ri = q[i - 1], p[i - 1]
        if ci == ri + 1:
            continue
        if (ci == ri + 2 and is_corner(p, ci, i)) or ci == ri:
            two_kinds += 1
        elif ci == ri + 3:
            plus_three += 1
        else:
            return False
    fails = two_kinds + plus_three
    return (fails == 2 and plus_three == 0) or (fails == 1 and plus_three == 1)


def add_componentwise(a: Partition, b: Partition) -> Partition:
    """Row-by-row sum of two partitions, padding the shorter with zeros."""
    n = max(len(a), len(b))
    aa = a + (0,) * (n - len(a))
    bb = b + (0,) * (n - len(b))
    return make_partition(x + y for x, y in zip(aa, bb))
