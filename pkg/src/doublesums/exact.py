"""Exact scalars, determinants and sign/subset combinatorics.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence, Union

from .errors import DimensionError

Scalar = Union[int, Fraction]


def to_scalar(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {value!r} as an exact scalar")


@dataclass(frozen=True)
class ScalarMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ScalarMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        entries = tuple(to_scalar(x) for r in rows for x in r)
        return cls(len(rows), ncols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "ScalarMatrix":
        if not columns:
            return cls(0, 0, ())
        return cls.from_rows(list(zip(*columns)))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        if self.cols != other.rows:
            raise DimensionError("incompatible shapes for product")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum((a[i][t] * b[t][j] for t in range(self.cols)), Fraction(0))
             for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return ScalarMatrix(self.rows, other.cols, tuple(x for r in out for x in r))


def det(m) -> Fraction:
    """Exact determinant of a square matrix.

    ``m`` may be a :class:`ScalarMatrix` or a sequence of rows.  Each row is
    scaled to integers by the lcm of its denominators, then fraction-free
    Bareiss elimination runs over Python ints.
    """
    if isinstance(m, ScalarMatrix):
        if m.rows != m.cols:
            raise DimensionError(f"determinant of a {m.rows}x{m.cols} matrix")
        rows = m.to_rows()
    else:
        rows = [[to_scalar(x) for x in r] for r in m]
        if any(len(r) != len(rows) for r in rows):
            raise DimensionError("determinant of a non-square matrix")
    n = len(rows)
    if n == 0:
        return Fraction(1)

    scale = 1
    a = []
    for r in rows:
        l = 1
        for x in r:
            l = math.lcm(l, x.denominator)
        scale *= l
        a.append([x.numerator * (l // x.denominator) for x in r])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale)


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def epsilon(k: int) -> int:
    """Signature of the order-reversing permutation on ``k`` elements."""
    return -1 if k % 4 in (2, 3) else 1


def sign_power(e: int) -> int:
    """``(-1)**e`` for any integer ``e``."""
    return -1 if e % 2 else 1


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return sign_power(inversions)


def _check_positions(n: int, positions: Sequence[int]) -> None:
    for a, b in zip(positions, positions[1:]):
        if b <= a:
            raise ValueError(f"positions must be strictly increasing: {positions!r}")
    if positions and (positions[0] < 0 or positions[-1] >= n):
        raise ValueError(f"positions {positions!r} out of range for n={n}")


def subset_complement(n: int, positions: Sequence[int]) -> tuple[int, ...]:
    chosen = set(positions)
    return tuple(i for i in range(n) if i not in chosen)


def subset_signature(n: int, positions: Sequence[int]) -> int:
    """Sign of the permutation reordering ``0..n-1`` as complement || positions."""
    positions = tuple(positions)
    _check_positions(n, positions)
    # each chosen index jumps over the unchosen indices that follow it
    count = 0
    chosen = set(positions)
    after = 0
    for i in reversed(range(n)):
        if i in chosen:
            count += after
        else:
            after += 1
    return sign_power(count)


def enumerate_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All strictly increasing ``k``-subsets of ``range(n)``, in lex order."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"cannot choose {k} of {n}")
    return itertools.combinations(range(n), k)


class SubsetSelection(NamedTuple):
    """Positions of a subset of an ordered multiset and its signature ``s_K``."""

    positions: tuple
    signature: int


def selections(n: int, k: int) -> Iterator[SubsetSelection]:
    for positions in enumerate_subsets(n, k):
        yield SubsetSelection(positions, subset_signature(n, positions))
