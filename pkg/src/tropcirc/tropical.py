"""Max-plus polynomials: tropicalization, evaluation and equality.

Two equality notions are provided.  ``"axiomatic"`` compares term maps after
merging equal exponents (the semiring axioms plus ``a + a = a``);
``"functional"`` compares the piecewise-linear functions, i.e. the term maps
after dropping every term that never strictly attains the maximum.
"""
from __future__ import annotations

import random
from collections.abc import Mapping
from fractions import Fraction
from math import lcm
from typing import Iterable, Literal, Sequence

from .feasibility import solve_nonneg
from .sympoly import ExactPolynomial

Exponent = tuple[int, ...]
Mode = Literal["axiomatic", "functional"]
MODES = ("axiomatic", "functional")


class TropicalPolynomial:
    """``max_e (e . x + terms[e])`` with exact rational coefficients.

    Construction merges repeated exponents by keeping the larger coefficient.
    There is no tropical zero: the term map is never empty.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | Iterable[tuple[Sequence[int], object]]):
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[Exponent, Fraction] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            c = Fraction(c)
            if exp not in merged or merged[exp] < c:
                merged[exp] = c
        if not merged:
            raise ValueError("tropical polynomial needs at least one term")
        self.nvars = nvars
        self.terms = merged

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropicalPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"TropicalPolynomial({self.nvars}, {dict(self.sorted_terms())})"

    def __str__(self) -> str:
        forms = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            lin = " + ".join((f"{e}*x{i + 1}" if e > 1 else f"x{i + 1}") for i, e in enumerate(exp) if e)
            if c or not lin:
                lin = f"{lin} + {c}" if lin else str(c)
            forms.append(lin)
        return "max{" + ", ".join(forms) + "}"


def tropicalize(f: ExactPolynomial) -> TropicalPolynomial:
    if f.is_zero():
        raise ValueError("the zero polynomial has no tropicalization")
    return TropicalPolynomial(f.nvars, ((e, 0) for e in f.terms))


def trop_eval(T: TropicalPolynomial, x: Sequence) -> Fraction:
    if len(x) != T.nvars:
        raise ValueError(f"point has {len(x)} coordinates, polynomial has {T.nvars} variables")
    x = [Fraction(v) for v in x]
    # scale to integers once instead of summing Fractions per term
    scale = lcm(*(v.denominator for v in x), *(c.denominator for c in T.terms.values()))
    xs = [v.numerator * (scale // v.denominator) for v in x]
    best = max(
        sum(e * v for e, v in zip(exp, xs)) + c.numerator * (scale // c.denominator)
        for exp, c in T.terms.items()
    )
    return Fraction(best, scale)


def is_redundant(exp: Exponent, coeff: Fraction, others: Sequence[tuple[Exponent, Fraction]]) -> bool:
    """Whether ``exp . x + coeff <= max(others)`` for every real ``x``.

    Equivalent to some convex combination of the other exponents hitting
    ``exp`` with combined coefficient at least ``coeff``.
    """
    if not others:
        return False
    dim = len(exp)
    A = [[e[i] for e, _ in others] + [0] for i in range(dim)]
    A.append([1] * len(others) + [0])
    A.append([c for _, c in others] + [-1])
    return solve_nonneg(A, list(exp) + [1, coeff]).feasible


def _midpoint_redundant(exp: Exponent, c: Fraction, terms: dict[Exponent, Fraction]) -> bool:
    # exp = (a + b) / 2 with the averaged coefficient at least c
    for a, ca in terms.items():
        if a == exp:
            continue
        b = tuple(2 * p - q for p, q in zip(exp, a))
        cb = terms.get(b)
        if cb is not None and ca + cb >= 2 * c:
            return True
    return False


def _upper_envelope(terms: dict[Exponent, Fraction]) -> dict[Exponent, Fraction]:
    items = sorted(terms.items())
    if len(items) <= 1:
        return dict(items)
    # Terms maximising a generic linear functional are always kept; only the
    # rest need the exact test.
    rng = random.Random(0)
    sure: set[Exponent] = set()
    for _ in range(8 * len(items[0][0]) + 8):
        direction = [rng.randint(-1000, 1000) for _ in items[0][0]]
        scores = [(sum(a * b for a, b in zip(exp, direction)), exp) for exp, _ in items]
        best = max(scores)[0]
        winners = [exp for s, exp in scores if s == best]
        if len(winners) == 1:
            sure.add(winners[0])
    kept = dict(items)
    for exp, c in items:
        if exp in sure:
            continue
        if _midpoint_redundant(exp, c, kept):
            del kept[exp]
            continue
        others = [(e, k) for e, k in kept.items() if e != exp]
        if is_redundant(exp, c, others):
            del kept[exp]
    return kept


def canonicalize(T: TropicalPolynomial, mode: Mode = "axiomatic") -> TropicalPolynomial:
    if mode == "axiomatic":
        return TropicalPolynomial(T.nvars, T.terms)
    if mode == "functional":
        return TropicalPolynomial(T.nvars, _upper_envelope(T.terms))
    raise ValueError(f"unknown mode {mode!r}")


def trop_equal(T1: TropicalPolynomial, T2: TropicalPolynomial, mode: Mode = "axiomatic") -> bool:
    if T1.nvars != T2.nvars:
        raise ValueError(f"variable count mismatch: {T1.nvars} vs {T2.nvars}")
    return canonicalize(T1, mode) == canonicalize(T2, mode)


def random_rational_point(rng: random.Random, n: int, scale: int = 50, denom: int = 12) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-scale, scale), rng.randint(1, denom)) for _ in range(n))


def trop_equal_sampled(T1: TropicalPolynomial, T2: TropicalPolynomial, count: int = 100, seed: int = 0) -> bool:
    """Compare values at ``count`` seeded random rational points.

    ``False`` is a proof of inequality; ``True`` is only evidence.
    """
    if T1.nvars != T2.nvars:
        raise ValueError(f"variable count mismatch: {T1.nvars} vs {T2.nvars}")
    rng = random.Random(seed)
    for _ in range(count):
        x = random_rational_point(rng, T1.nvars)
        if trop_eval(T1, x) != trop_eval(T2, x):
            return False
    return True
