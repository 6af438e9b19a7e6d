"""From skew shapes to permutations and back, and the drivers that check the
dominance argument end to end."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .combinatorics import (
    Cell,
    Partition,
    Permutation,
    SkewShape,
    Word,
    conjugate,
    dominance_leq,
    inverse_code,
    rothe_diagram,
    word_to_permutation,
)
from .sympoly import dominating_partition, schur, schur_expand, skew_schur, stanley_poly
from .tropical import tropicalize, trop_equal


def beta_max(w: Permutation) -> Partition:
    """Conjugate of the decreasing rearrangement of the code of ``w^-1``."""
    return conjugate(sorted(inverse_code(w), reverse=True))


def beta_by_column_push(shape: SkewShape) -> Partition:
    """Push every column of ``shape`` to the top, then left-justify the rows."""
    return conjugate(sorted((h for h in shape.column_lengths() if h), reverse=True))


def diagonal_filling(shape: SkewShape) -> dict[Cell, int]:
    """Constant along NW-SE diagonals, 1 on the north-east-most one.

    Diagonals are numbered by content, so a diagonal without boxes still
    uses up a label: cell ``(i, j)`` gets ``lam_1 - (j - i)``.
    """
    top = shape.outer.part(1)
    return {(i, j): top - (j - i) for i, j in shape.cells()}


def reading_word(filling: dict[Cell, int]) -> Word:
    """Rows top to bottom, each read left to right."""
    return tuple(filling[c] for c in sorted(filling))


def w_from_skew(shape: SkewShape) -> Permutation:
    word = reading_word(diagonal_filling(shape))
    m = max(word, default=0) + 1
    return word_to_permutation(word, m)


def skew_from_rothe(w: Permutation) -> SkewShape:
    """Compact the Rothe diagram (drop empty rows and columns), mirror it
    left-to-right and read it as a skew shape."""
    cells = rothe_diagram(w)
    rows = sorted({i for i, _ in cells})
    cols = sorted({j for _, j in cells})
    r_index = {r: k for k, r in enumerate(rows, 1)}
    c_index = {c: len(cols) - k for k, c in enumerate(cols)}
    grid: dict[int, list[int]] = {}
    for i, j in cells:
        grid.setdefault(r_index[i], []).append(c_index[j])
    outer, inner = [], []
    for r in range(1, len(rows) + 1):
        js = sorted(grid[r])
        if js != list(range(js[0], js[-1] + 1)):
            raise ValueError("not a skew (vexillary-type) diagram: row is not contiguous")
        outer.append(js[-1])
        inner.append(js[0] - 1)
    try:
        shape = SkewShape(Partition(outer), Partition(inner))
    except ValueError as exc:
        raise ValueError(f"not a skew (vexillary-type) diagram: {exc}") from None
    if set(shape.cells()) != {(r_index[i], c_index[j]) for i, j in cells}:
        raise ValueError("not a skew (vexillary-type) diagram")
    return shape


def verify_bjs(shape: SkewShape, n: int) -> bool:
    """``F_{w_{lam/mu}}(x_1..x_n) == s_{lam/mu}(x_1..x_n)``."""
    return stanley_poly(w_from_skew(shape), n) == skew_schur(shape, n)


def verify_stanley_dominance(w: Permutation, n: int) -> bool:
    """Schur-positivity of ``F_w``, everything below ``beta_max(w)``, and a
    nonzero coefficient on ``beta_max(w)`` itself."""
    beta = beta_max(w)
    expansion = schur_expand(stanley_poly(w, max(n, w.length(), 1)))
    if any(c < 0 for c in expansion.values()):
        return False
    if not all(dominance_leq(lam, beta) for lam in expansion):
        return False
    return expansion.get(beta, 0) != 0


@dataclass(frozen=True)
class TheoremReport:
    shape: str
    n: int
    beta: str
    beta1_equals_lambda1: bool
    trop_equal_axiomatic: bool
    dominating_partition_is_beta: bool
    # lambda_1 of the shape with empty rows and columns deleted
    beta1_equals_normalized_lambda1: bool

    @property
    def passed(self) -> bool:
        return self.beta1_equals_normalized_lambda1 and self.trop_equal_axiomatic and self.dominating_partition_is_beta

    def as_dict(self) -> dict:
        return asdict(self)


def verify_theorem_main(shape: SkewShape, n: int) -> TheoremReport:
    f = skew_schur(shape, n)
    if f.is_zero():
        raise ValueError(f"s_{shape} vanishes in {n} variables")
    beta = beta_max(w_from_skew(shape))
    return TheoremReport(
        shape=str(shape),
        n=n,
        beta=",".join(map(str, beta)),
        beta1_equals_lambda1=beta.part(1) == shape.outer.part(1),
        trop_equal_axiomatic=trop_equal(tropicalize(f), tropicalize(schur(beta, n)), "axiomatic"),
        dominating_partition_is_beta=dominating_partition(f) == beta,
        beta1_equals_normalized_lambda1=beta.part(1) == shape.normalized().outer.part(1),
    )
