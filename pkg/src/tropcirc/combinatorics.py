"""Partitions, skew shapes, permutations, tableaux and words.

Cells are 1-indexed ``(row, column)`` pairs in matrix orientation.  All
objects are immutable; every function here is pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

Word = tuple[int, ...]
Cell = tuple[int, int]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are accepted on input and dropped, so ``Partition((2, 1, 0))
    == Partition((2, 1)) == (2, 1)``.
    """

    def __new__(cls, parts: Sequence[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-indexed), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def contains(self, other: Sequence[int]) -> bool:
        other = Partition(other)
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def cells(self) -> list[Cell]:
        return [(i, j) for i, row in enumerate(self, 1) for j in range(1, row + 1)]

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1"`` (or the empty string) into a partition."""
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(t) for t in text.split(","))


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{tuple(self.inner)} is not contained in {tuple(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_bounds(self) -> list[tuple[int, int]]:
        """``(first_column, last_column)`` for each row of the outer shape."""
        return [(self.inner.part(i) + 1, self.outer[i - 1]) for i in range(1, len(self.outer) + 1)]

    def cells(self) -> list[Cell]:
        return [(i, j) for i, (lo, hi) in enumerate(self.row_bounds(), 1) for j in range(lo, hi + 1)]

    def column_lengths(self) -> list[int]:
        """Number of cells in each column ``1..outer[0]``."""
        outer_c, inner_c = conjugate(self.outer), conjugate(self.inner)
        return [outer_c.part(j) - inner_c.part(j) for j in range(1, len(outer_c) + 1)]

    def normalized(self) -> SkewShape:
        """Delete empty rows and empty columns.

        The result draws the same cells (up to translation) and is again a
        skew shape; the skew Schur polynomial is unchanged.
        """
        rows = [(lo, hi) for lo, hi in self.row_bounds() if lo <= hi]
        empty_cols = [j for j, h in enumerate(self.column_lengths(), 1) if h == 0]

        def shift(c: int) -> int:
            # number of surviving columns <= c
            return c - sum(1 for e in empty_cols if e <= c)

        return SkewShape(Partition(shift(hi) for _, hi in rows),
                         Partition(shift(lo - 1) for lo, _ in rows))

    def __str__(self) -> str:
        if not self.inner:
            return format_partition(self.outer)
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


class Permutation(tuple):
    """One-line notation ``(w(1), ..., w(m))`` of a permutation of ``[m]``."""

    def __new__(cls, oneline: Sequence[int]):
        oneline = tuple(int(v) for v in oneline)
        if sorted(oneline) != list(range(1, len(oneline) + 1)):
            raise ValueError(f"not a permutation of 1..{len(oneline)}: {oneline}")
        return super().__new__(cls, oneline)

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls(range(1, m + 1))

    @property
    def m(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        """Number of inversions."""
        return sum(1 for i in range(len(self)) for j in range(i + 1, len(self)) if self[i] > self[j])

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


def parse_permutation(text: str) -> Permutation:
    return Permutation(int(t) for t in text.split(","))


def conjugate(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= k) for k in range(1, lam[0] + 1))


def partitions_of(d: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``d`` in reverse lexicographic order."""
    if max_part is None:
        max_part = d
    if max_len is None:
        max_len = d

    def rec(rest: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for parts in rec(d, max_part, max_len):
        yield Partition(parts)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions fitting inside the ``rows x cols`` rectangle."""
    for d in range(rows * cols + 1):
        yield from partitions_of(d, cols, rows)


def subpartitions(lam: Sequence[int]) -> Iterator[Partition]:
    """All partitions contained in ``lam``."""
    lam = Partition(lam)

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == len(lam):
            yield ()
            return
        for p in range(min(cap, lam[i]), -1, -1):
            for tail in rec(i + 1, p):
                yield (p,) + tail

    for parts in rec(0, lam[0] if lam else 0):
        yield Partition(parts)


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Dominance order on partitions of the same size."""
    mu, lam = Partition(mu), Partition(lam)
    if mu.size != lam.size:
        raise ValueError(f"dominance compares partitions of equal size, got {mu.size} and {lam.size}")
    s_mu = s_lam = 0
    for k in range(max(len(mu), len(lam))):
        s_mu += mu.part(k + 1)
        s_lam += lam.part(k + 1)
        if s_mu > s_lam:
            return False
    return True


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew shape; ``rows[i]`` lists the entries of row ``i+1``
    from left to right (empty tuple for an empty row)."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        lo, _ = self.shape.row_bounds()[i - 1]
        return self.rows[i - 1][j - lo]

    def reading_word(self) -> Word:
        return tuple(v for row in self.rows for v in row)

    def weight(self, n: int) -> tuple[int, ...]:
        w = [0] * n
        for v in self.reading_word():
            w[v - 1] += 1
        return tuple(w)

    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for i, j in self.shape.cells():
            if (i + 1, j) in self._cellset and self.entry(i, j) >= self.entry(i + 1, j):
                return False
        return True

    @property
    def _cellset(self) -> set[Cell]:
        return set(self.shape.cells())


def ssyt_enumerate(shape: SkewShape, n: int) -> list[SkewTableau]:
    """All semistandard fillings of ``shape`` with entries in ``[n]``, sorted
    lexicographically by row reading word."""
    if n < 1:
        raise ValueError("n must be positive")
    bounds = shape.row_bounds()
    out: list[SkewTableau] = []

    def fill_row(i: int, rows: list[tuple[int, ...]]) -> None:
        if i == len(bounds):
            out.append(SkewTableau(shape, tuple(rows)))
            return
        lo, hi = bounds[i]
        above = rows[i - 1] if i else ()
        above_lo = bounds[i - 1][0] if i else 0

        def rec(j: int, prev: int, acc: tuple[int, ...]) -> None:
            if j > hi:
                fill_row(i + 1, rows + [acc])
                return
            floor = prev
            if i and above_lo <= j <= bounds[i - 1][1]:
                floor = max(floor, above[j - above_lo] + 1)
            for v in range(floor, n + 1):
                rec(j + 1, v, acc + (v,))

        rec(lo, 1, ())

    fill_row(0, [])
    out.sort(key=SkewTableau.reading_word)
    return out


def rothe_diagram(w: Permutation) -> set[Cell]:
    inv = w.inverse()
    m = len(w)
    return {(i, j) for i in range(1, m + 1) for j in range(1, m + 1) if j < w(i) and i < inv(j)}


def inverse_code(w: Permutation) -> tuple[int, ...]:
    """Column counts of the Rothe diagram, i.e. the code of ``w^-1``."""
    q = [0] * len(w)
    for _, j in rothe_diagram(w):
        q[j - 1] += 1
    return tuple(q)


def word_to_permutation(word: Sequence[int], m: int) -> Permutation:
    """The product ``s_{a_1} s_{a_2} ... s_{a_l}`` in ``S_m``, one-line form."""
    perm = list(range(1, m + 1))
    for a in word:
        if not 1 <= a < m:
            raise ValueError(f"letter {a} is not a simple transposition of S_{m}")
        perm[a - 1], perm[a] = perm[a], perm[a - 1]
    return Permutation(perm)


@lru_cache(maxsize=None)
def _reduced_words(w: tuple[int, ...]) -> tuple[Word, ...]:
    words: list[Word] = []
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            u = list(w)
            u[i - 1], u[i] = u[i], u[i - 1]
            words.extend(a + (i,) for a in _reduced_words(tuple(u)))
    if not words:
        return ((),)
    return tuple(sorted(words))


def reduced_words(w: Permutation) -> list[Word]:
    """All reduced words of ``w``, in lexicographic order."""
    return list(_reduced_words(tuple(w)))


def compatible_sequences(a: Sequence[int], n: int) -> list[Word]:
    """Weakly increasing ``b`` in ``[n]`` with ``b_i < b_{i+1}`` wherever
    ``a_i < a_{i+1}``."""
    out: list[Word] = []
    length = len(a)

    def rec(i: int, acc: tuple[int, ...]) -> None:
        if i == length:
            out.append(acc)
            return
        lo = 1
        if i:
            lo = acc[-1] + 1 if a[i - 1] < a[i] else acc[-1]
        for v in range(lo, n + 1):
            rec(i + 1, acc + (v,))

    rec(0, ())
    return out


def hook_length_count(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam``."""
    lam = Partition(lam)
    lam_c = conjugate(lam)
    hooks = prod(lam[i - 1] - j + lam_c[j - 1] - i + 1 for i, j in lam.cells())
    return factorial(lam.size) // hooks
