"""Semistandard Young tableaux and the four-way type classification of
fillings with equal letter multiplicities, which realizes the degree-three
plethysm expansions combinatorially."""

from __future__ import annotations

import enum

from .partitions import make_partition, partitions_of
from .symfunc import SymFunc


class SSYT:
    """A semistandard Young tableau, stored row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        for i, row in enumerate(rows):
            if not row:
                raise ValueError("empty row")
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"row {i + 1} not weakly increasing: {row}")
            if i:
                if len(row) > len(rows[i - 1]):
                    raise ValueError("shape is not a partition")
                if any(rows[i - 1][j] >= row[j] for j in range(len(row))):
                    raise ValueError(f"column not strictly increasing at row {i + 1}")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SSYT is immutable")

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    def weight(self, max_letter=None):
        m = max_letter or max((x for r in self.rows for x in r), default=0)
        w = [0] * m
        for row in self.rows:
            for x in row:
                w[x - 1] += 1
        return tuple(w)

    def __eq__(self, other):
        return isinstance(other, SSYT) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "SSYT(%s)" % "/".join("".join(map(str, r)) for r in self.rows)


def enumerate_ssyt(shape, max_letter):
    """All SSYT of the given shape over the alphabet {1, .., max_letter}."""
    shape = make_partition(shape)
    if max_letter < 1:
        raise ValueError("max_letter must be at least 1")
    if not shape:
        return [SSYT(())]
    out = []
    rows = [[0] * ln for ln in shape]

    def rec(r, c):
        if r == len(shape):
            out.append(SSYT([tuple(row) for row in rows]))
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = rows[r][c - 1] if c else 1
        if r and c < shape[r - 1]:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, max_letter + 1):
            rows[r][c] = v
            rec(nr, nc)
        rows[r][c] = 0

    rec(0, 0)
    return out


def enumerate_equal_weight(k):
    """All SSYT with exactly k ones, k twos and k threes."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = []
    for shape in partitions_of(3 * k):
        if len(shape) > 3:
            continue
        out.extend(_fill_with_weight(shape, (k, k, k)))
    return out


def _fill_with_weight(shape, weight):
    """SSYT of the given shape with the exact letter multiplicities."""
    out = []
    rows = [[0] * ln for ln in shape]
    left = list(weight)

    def rec(r, c):
        if r == len(shape):
            out.append(SSYT([tuple(row) for row in rows]))
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = rows[r][c - 1] if c else 1
        if r and c < shape[r - 1]:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(max(lo, r + 1), len(weight) + 1):
            if left[v - 1] == 0:
                continue
            left[v - 1] -= 1
            rows[r][c] = v
            rec(nr, nc)
            rows[r][c] = 0
            left[v - 1] += 1

    rec(0, 0)
    return out


class TableauType(enum.Enum):
    """The four standard tableaux with three cells, written row by row."""

    ROW = "123"
    HOOK3 = "12/3"
    HOOK2 = "13/2"
    COLUMN = "1/2/3"

    @property
    def transpose(self):
        return _TRANSPOSE[self]

    @property
    def shape(self):
        return {
            TableauType.ROW: (3,),
            TableauType.HOOK3: (2, 1),
            TableauType.HOOK2: (2, 1),
            TableauType.COLUMN: (1, 1, 1),
        }[self]


_TRANSPOSE = {
    TableauType.ROW: TableauType.COLUMN,
    TableauType.COLUMN: TableauType.ROW,
    TableauType.HOOK3: TableauType.HOOK2,
    TableauType.HOOK2: TableauType.HOOK3,
}

_STANDARD = {
    ((1, 2, 3),): TableauType.ROW,
    ((1, 2), (3,)): TableauType.HOOK3,
    ((1, 3), (2,)): TableauType.HOOK2,
    ((1,), (2,), (3,)): TableauType.COLUMN,
}


def type_of(t: SSYT) -> TableauType:
    """Classify a tableau with equal letter multiplicities (k, k, k).

    With N2 and N3 the numbers of twos and threes in the second row:
    at most two rows map to ROW when N2 is even, N3 >= 2*N2 and
    N3 != 2*N2 + 1, to COLUMN when the same holds with N2 odd, and to the
    hooks otherwise (HOOK3 for N2 even, HOOK2 for N2 odd).  A three-row
    tableau classifies as the transpose of its first-column removal, which
    is well defined because the first column of a three-row filling in the
    letters {1, 2, 3} is forced.
    """
    w = t.weight(3)
    if w[0] != w[1] or w[1] != w[2] or w[0] == 0:
        raise ValueError(f"weight must be of the form (k, k, k), got {w}")
    if w == (1, 1, 1):
        return _STANDARD[t.rows]
    if len(t.rows) <= 2:
        second = t.rows[1] if len(t.rows) == 2 else ()
        n2 = sum(1 for x in second if x == 2)
        n3 = sum(1 for x in second if x == 3)
        if n3 >= 2 * n2 and n3 != 2 * n2 + 1:
            return TableauType.ROW if n2 % 2 == 0 else TableauType.COLUMN
        return TableauType.HOOK3 if n2 % 2 == 0 else TableauType.HOOK2
    reduced = SSYT([r[1:] for r in t.rows if len(r) > 1])
    if reduced.weight(3) != (w[0] - 1, w[1] - 1, w[2] - 1):
        raise ValueError("first column of a three-row filling must be 1/2/3")
    return type_of(reduced).transpose


def tableaux_of_type(label: TableauType, k: int):
    return [t for t in enumerate_equal_weight(k) if type_of(t) == label]


def type_sum(label: TableauType, k: int) -> SymFunc:
    """Sum of Schur functions over the shapes of the weight-(k, k, k)
    tableaux having the given type."""
    out = {}
    for t in tableaux_of_type(label, k):
        sh = t.shape
        out[sh] = out.get(sh, 0) + 1
    return SymFunc("s", out)
