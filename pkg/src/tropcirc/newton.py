"""Newton polytopes as lattice-point sets, permutahedra and saturation."""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .combinatorics import Partition, conjugate
from .errors import DEFAULT_TERM_CAP, ResourceLimitError
from .feasibility import convex_combination
from .sympoly import ExactPolynomial, elementary

Point = tuple[int, ...]
RationalPoint = tuple[Fraction, ...]


class LatticePointSet:
    """A finite set of integer vectors of a common length ``dim``."""

    __slots__ = ("dim", "points")

    def __init__(self, dim: int, points: Iterable[Sequence[int]] = ()):
        if dim < 1:
            raise ValueError("dim must be positive")
        pts = frozenset(tuple(int(v) for v in p) for p in points)
        if any(len(p) != dim for p in pts):
            raise ValueError(f"all points must have length {dim}")
        self.dim = dim
        self.points = pts

    def __iter__(self) -> Iterator[Point]:
        return iter(sorted(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.points

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticePointSet):
            return NotImplemented
        return self.dim == other.dim and self.points == other.points

    def __hash__(self):
        return hash((self.dim, self.points))

    def __le__(self, other: LatticePointSet) -> bool:
        return self.dim == other.dim and self.points <= other.points

    def __repr__(self) -> str:
        return f"LatticePointSet({self.dim}, {sorted(self.points)})"


def rational_point(coords: Iterable) -> RationalPoint:
    return tuple(Fraction(c) for c in coords)


def support(f: ExactPolynomial) -> LatticePointSet:
    return LatticePointSet(f.nvars, f.terms.keys())


def rado_member(p: Sequence[int], lam: Sequence[int]) -> bool:
    """Whether the integer vector ``p`` lies in the permutahedron of ``lam``."""
    lam = Partition(lam)
    n = len(p)
    padded = lam.padded(n)
    if any(v < 0 for v in p) or sum(p) != lam.size:
        return False
    s_p = s_lam = 0
    for a, b in zip(sorted(p, reverse=True), padded):
        s_p += a
        s_lam += b
        if s_p > s_lam:
            return False
    return True


def _compositions(total: int, n: int, cap: int) -> Iterator[Point]:
    if n == 1:
        if total <= cap:
            yield (total,)
        return
    for first in range(min(total, cap), -1, -1):
        for rest in _compositions(total - first, n - 1, cap):
            yield (first,) + rest


def permutahedron_points(lam: Sequence[int], n: int) -> LatticePointSet:
    lam = Partition(lam)
    lam.padded(n)
    top = lam[0] if lam else 0
    return LatticePointSet(n, (p for p in _compositions(lam.size, n, top) if rado_member(p, lam)))


class HullOracle:
    """Membership in ``conv(points)`` with cached separating hyperplanes.

    Each infeasible query leaves behind a Farkas hyperplane; later queries
    check the cache before running the exact solver.
    """

    def __init__(self, points: LatticePointSet):
        if not len(points):
            raise ValueError("convex hull of an empty set")
        self.points = points
        self._pts = sorted(points.points)
        self._cuts: list[tuple[list[Fraction], Fraction]] = []

    def __contains__(self, p: Sequence) -> bool:
        if len(p) != self.points.dim:
            raise ValueError(f"point of length {len(p)} in dimension {self.points.dim}")
        if tuple(p) in self.points.points:
            return True
        for y, y0 in self._cuts:
            if sum(a * b for a, b in zip(y, p)) + y0 > 0:
                return False
        res = convex_combination(p, self._pts)
        if not res.feasible:
            *y, y0 = res.certificate
            self._cuts.append((y, y0))
        return res.feasible


def hull_membership(p: Sequence, S: LatticePointSet) -> bool:
    """Whether ``p`` (rational coordinates allowed) is a convex combination of ``S``."""
    return rational_point(p) in HullOracle(S)


def hull_lattice_points(S: LatticePointSet, cap: int = DEFAULT_TERM_CAP) -> LatticePointSet:
    """All integer points of ``conv(S)``, by filtering the bounding box."""
    oracle = HullOracle(S)
    pts = oracle._pts
    lo = [min(p[i] for p in pts) for i in range(S.dim)]
    hi = [max(p[i] for p in pts) for i in range(S.dim)]
    sums = {sum(p) for p in pts}
    level = sums.pop() if len(sums) == 1 else None

    def candidates() -> Iterator[Point]:
        if level is None:
            yield from product(*(range(a, b + 1) for a, b in zip(lo, hi)))
            return

        def rec(i: int, rest: int) -> Iterator[Point]:
            if i == S.dim - 1:
                if lo[i] <= rest <= hi[i]:
                    yield (rest,)
                return
            room = sum(hi[i + 1:])
            floor = sum(lo[i + 1:])
            for v in range(max(lo[i], rest - room), min(hi[i], rest - floor) + 1):
                for tail in rec(i + 1, rest - v):
                    yield (v,) + tail

        yield from rec(0, level)

    out = []
    for count, p in enumerate(candidates(), 1):
        if count > cap:
            raise ResourceLimitError(f"bounding box exceeds {cap} candidate points")
        if p in oracle:
            out.append(p)
    return LatticePointSet(S.dim, out)


def snp_check(f: ExactPolynomial, cap: int = DEFAULT_TERM_CAP) -> bool:
    """Saturated Newton polytope: every lattice point of the hull is in the support."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    supp = support(f)
    return hull_lattice_points(supp, cap) == supp


def minkowski_points(A: LatticePointSet, B: LatticePointSet) -> LatticePointSet:
    if A.dim != B.dim:
        raise ValueError(f"dimension mismatch: {A.dim} vs {B.dim}")
    return LatticePointSet(A.dim, (tuple(x + y for x, y in zip(a, b)) for a in A.points for b in B.points))


def elementary_minkowski_points(lam: Sequence[int], n: int) -> LatticePointSet:
    """Sum over the columns ``k`` of ``lam`` of the lattice points of ``Newton(e_{lam'_k})``."""
    acc = LatticePointSet(n, [(0,) * n])
    for col in conjugate(lam):
        acc = minkowski_points(acc, hull_lattice_points(support(elementary(col, n))))
    return acc
