"""Exact sparse polynomials and the symmetric families built on them."""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations, permutations
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .combinatorics import (
    Partition,
    Permutation,
    SkewShape,
    compatible_sequences,
    dominance_leq,
    reduced_words,
    ssyt_enumerate,
)

Exponent = tuple[int, ...]


class NotSymmetricError(ValueError):
    pass


class NotHomogeneousError(ValueError):
    pass


class ExactPolynomial:
    """Polynomial in ``nvars`` variables with integer coefficients.

    ``terms`` maps exponent tuples to nonzero ints.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = defaultdict(int)
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {nvars} variables")
            acc[exp] += int(c)
        self.nvars = nvars
        self._terms = {e: c for e, c in acc.items() if c}

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> ExactPolynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> ExactPolynomial:
        """The variable ``x_i`` (1-indexed)."""
        return cls(nvars, {tuple(int(k == i - 1) for k in range(nvars)): 1})

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_symmetric(self) -> bool:
        for i in range(self.nvars - 1):
            for exp, c in self._terms.items():
                swapped = exp[:i] + (exp[i + 1], exp[i]) + exp[i + 2:]
                if self._terms.get(swapped) != c:
                    return False
        return True

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items())

    def _check(self, other: ExactPolynomial) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: ExactPolynomial) -> ExactPolynomial:
        self._check(other)
        return ExactPolynomial(self.nvars, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> ExactPolynomial:
        return ExactPolynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: ExactPolynomial) -> ExactPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ExactPolynomial(self.nvars, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        self._check(other)
        acc: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return ExactPolynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"ExactPolynomial({self.nvars}, {dict(self.sorted_terms())})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for exp, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e)
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")


# -- symmetric families ---------------------------------------------------


@lru_cache(maxsize=None)
def _skew_terms(outer: Partition, inner: Partition, n: int) -> tuple[tuple[Exponent, int], ...]:
    # Peel off the cells holding the largest entry n: a horizontal strip
    # outer/nu with inner <= nu.
    if n == 0:
        return (((), 1),) if outer == inner else ()
    acc: dict[Exponent, int] = defaultdict(int)
    bounds = [(max(outer.part(i + 1), inner.part(i)), outer.part(i)) for i in range(1, len(outer) + 1)]
    if any(lo > hi for lo, hi in bounds):
        return ()

    def rec(i: int, nu: list[int]) -> None:
        if i == len(bounds):
            sub = Partition(nu)
            k = outer.size - sub.size
            for exp, c in _skew_terms(sub, inner, n - 1):
                acc[exp + (k,)] += c
            return
        lo, hi = bounds[i]
        for v in range(lo, hi + 1):
            rec(i + 1, nu + [v])

    rec(0, [])
    return tuple((e, c) for e, c in acc.items() if c)


def skew_schur(shape: SkewShape, n: int) -> ExactPolynomial:
    """``s_{lambda/mu}(x_1, ..., x_n)``, via horizontal-strip recursion on the largest entry."""
    if n < 1:
        raise ValueError("n must be positive")
    return ExactPolynomial(n, dict(_skew_terms(shape.outer, shape.inner, n)))


def skew_schur_by_tableaux(shape: SkewShape, n: int) -> ExactPolynomial:
    """Same polynomial, summed directly over semistandard tableaux."""
    return ExactPolynomial(n, [(t.weight(n), 1) for t in ssyt_enumerate(shape, n)])


def schur(lam: Sequence[int], n: int) -> ExactPolynomial:
    return skew_schur(SkewShape(Partition(lam)), n)


def elementary(k: int, n: int) -> ExactPolynomial:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return ExactPolynomial(n, [(tuple(int(i in js) for i in range(n)), 1) for js in combinations(range(n), k)])


def monomial(lam: Sequence[int], n: int) -> ExactPolynomial:
    lam = Partition(lam)
    if len(lam) > n:
        return ExactPolynomial(n)
    return ExactPolynomial(n, {theta: 1 for theta in set(permutations(lam.padded(n)))})


@lru_cache(maxsize=None)
def _stanley_terms(u: tuple[int, ...], k: int, n: int) -> tuple[tuple[Exponent, int], ...]:
    # The letters of a reduced word carrying the same compatible-sequence
    # value k form a strictly decreasing run, so F_u factors into a left
    # decreasing factor (weight x_k^r) times the rest in x_{k+1}..x_n.
    if k > n:
        return (((), 1),) if all(v == i for i, v in enumerate(u, 1)) else ()
    acc: dict[Exponent, int] = defaultdict(int)
    pos = {v: i for i, v in enumerate(u)}

    def strip(cur: tuple[int, ...], where: dict[int, int], last: int, r: int) -> None:
        for exp, c in _stanley_terms(cur, k + 1, n):
            acc[(r,) + exp] += c
        for a in range(last - 1, 0, -1):
            # a is a left descent iff value a+1 precedes value a
            if where[a + 1] < where[a]:
                nxt = list(cur)
                i, j = where[a], where[a + 1]
                nxt[i], nxt[j] = a + 1, a
                moved = dict(where)
                moved[a], moved[a + 1] = j, i
                strip(tuple(nxt), moved, a, r + 1)

    strip(u, pos, len(u), 0)
    return tuple((e, c) for e, c in acc.items() if c)


def stanley_poly(w: Permutation, n: int) -> ExactPolynomial:
    """``F_w(x_1, ..., x_n)``: the sum of ``x_b`` over reduced words ``a`` of
    ``w`` and compatible sequences ``b`` with entries at most ``n``.

    Pairs ``(a, b)`` are grouped by the runs of equal ``b`` values and
    memoised on the remaining permutation.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return ExactPolynomial(n, dict(_stanley_terms(tuple(w), 1, n)))


def stanley_poly_by_words(w: Permutation, n: int) -> ExactPolynomial:
    """``F_w`` by literal double enumeration over reduced words and compatible sequences."""
    terms = []
    for a in reduced_words(w):
        for b in compatible_sequences(a, n):
            exp = [0] * n
            for v in b:
                exp[v - 1] += 1
            terms.append((tuple(exp), 1))
    return ExactPolynomial(n, terms)


# -- Schur expansion ------------------------------------------------------


class SchurExpansion(dict):
    """Mapping ``Partition -> int`` of nonzero Schur coefficients."""

    @property
    def degree(self) -> int | None:
        return next((p.size for p in self), None)

    def recombine(self, n: int) -> ExactPolynomial:
        total = ExactPolynomial(n)
        for mu, c in self.items():
            total = total + schur(mu, n) * c
        return total

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.items(), reverse=True)


def schur_expand(f: ExactPolynomial) -> SchurExpansion:
    """Coefficients ``c_mu`` with ``f = sum c_mu s_mu(x_1..x_n)``.

    Repeatedly strips the leading term: the lexicographically largest
    exponent of a symmetric polynomial is a partition, dominance-maximal in
    the support, and ``s_mu`` has leading monomial ``x^mu`` with coefficient 1.
    """
    if not f.is_homogeneous():
        raise NotHomogeneousError(f"not homogeneous: degrees {sorted(f.degrees())}")
    if not f.is_symmetric():
        raise NotSymmetricError("not symmetric")
    out = SchurExpansion()
    rest = dict(f.terms)
    n = f.nvars
    while rest:
        lead = max(rest)
        c = rest[lead]
        mu = Partition(lead)
        out[mu] = c
        for exp, k in schur(mu, n).terms.items():
            v = rest.get(exp, 0) - c * k
            if v:
                rest[exp] = v
            else:
                rest.pop(exp, None)
    return out


def dominating_partition(f: ExactPolynomial) -> Partition | None:
    """The ``lambda`` with ``f`` dominated by ``s_lambda``, or ``None``."""
    exp = schur_expand(f)
    if not exp or any(c < 0 for c in exp.values()):
        return None
    for lam in exp:
        if all(dominance_leq(mu, lam) for mu in exp):
            return lam
    return None


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], n: int) -> int:
    """Coefficient of ``s_nu`` in ``s_{lam/mu}`` (read off in ``n`` variables)."""
    nu = Partition(nu)
    if len(nu) > n:
        raise ValueError(f"{n} variables cannot see s_{tuple(nu)}; need at least {len(nu)}")
    shape = SkewShape(Partition(lam), Partition(mu))
    if nu.size != shape.size:
        return 0
    return schur_expand(skew_schur(shape, n)).get(nu, 0)
