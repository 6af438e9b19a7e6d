"""Tropical arithmetic circuits and the Schur/skew/Stanley constructions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

from .combinatorics import Partition, Permutation, SkewShape, conjugate
from .errors import DEFAULT_TERM_CAP, ResourceLimitError
from .sympoly import ExactPolynomial
from .tropical import Mode, TropicalPolynomial, _upper_envelope, tropicalize, trop_equal


@dataclass(frozen=True)
class Input:
    var: int  # 0-based


@dataclass(frozen=True)
class Const:
    val: Fraction


@dataclass(frozen=True)
class Oplus:
    left: int
    right: int


@dataclass(frozen=True)
class Odot:
    left: int
    right: int


Gate = Union[Input, Const, Oplus, Odot]


@dataclass(frozen=True)
class Circuit:
    """Topologically ordered gates; operation arguments precede the gate."""

    nvars: int
    gates: tuple[Gate, ...]
    output: int

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("nvars must be positive")
        for k, g in enumerate(self.gates):
            if isinstance(g, Input):
                if not 0 <= g.var < self.nvars:
                    raise ValueError(f"gate {k}: variable {g.var} out of range")
            elif isinstance(g, (Oplus, Odot)):
                if not (0 <= g.left < k and 0 <= g.right < k):
                    raise ValueError(f"gate {k}: arguments must precede the gate")
            elif not isinstance(g, Const):
                raise TypeError(f"gate {k}: unknown gate {g!r}")
        if not 0 <= self.output < len(self.gates):
            raise ValueError("output index out of range")

    def reachable(self) -> list[int]:
        seen = {self.output}
        for k in range(self.output, -1, -1):
            g = self.gates[k]
            if k in seen and isinstance(g, (Oplus, Odot)):
                seen.update((g.left, g.right))
        return sorted(seen)

    def pruned(self) -> Circuit:
        keep = self.reachable()
        index = {old: new for new, old in enumerate(keep)}
        gates = []
        for old in keep:
            g = self.gates[old]
            if isinstance(g, (Oplus, Odot)):
                g = type(g)(index[g.left], index[g.right])
            gates.append(g)
        return Circuit(self.nvars, tuple(gates), index[self.output])


class GateStats(NamedTuple):
    n_inputs: int
    n_consts: int
    n_oplus: int
    n_odot: int

    @property
    def total(self) -> int:
        return self.n_oplus + self.n_odot

    def as_dict(self) -> dict:
        return {**self._asdict(), "total": self.total}


class _Builder:
    def __init__(self, nvars: int):
        self.nvars = nvars
        self.gates: list[Gate] = []
        self._memo: dict[Gate, int] = {}

    def add(self, gate: Gate) -> int:
        if gate not in self._memo:
            self._memo[gate] = len(self.gates)
            self.gates.append(gate)
        return self._memo[gate]

    def x(self, i: int) -> int:
        return self.add(Input(i))

    def done(self, output: int) -> Circuit:
        return Circuit(self.nvars, tuple(self.gates), output).pruned()


def _bank(b: _Builder, n: int) -> dict[int, int]:
    # E[j][k] = E[j-1][k] (+) (x_j (.) E[j-1][k-1]); the diagonal is a product
    # chain and E[j][1] skips the multiplicative identity.
    E: dict[tuple[int, int], int] = {(1, 1): b.x(0)}
    for j in range(2, n + 1):
        xj = b.x(j - 1)
        E[j, j] = b.add(Odot(E[j - 1, j - 1], xj))
        E[j, 1] = b.add(Oplus(E[j - 1, 1], xj))
        for k in range(2, j):
            E[j, k] = b.add(Oplus(E[j - 1, k], b.add(Odot(xj, E[j - 1, k - 1]))))
    return {k: E[n, k] for k in range(1, n + 1)}


def build_elementary_bank(n: int) -> tuple[Circuit, dict[int, int]]:
    """Shared circuit for ``Trop(e_k(x_1..x_n))``, ``k = 1..n``.

    Returns the circuit (output = ``e_n``) and the gate index of each tap.
    """
    if n < 1:
        raise ValueError("n must be positive")
    b = _Builder(n)
    taps = _bank(b, n)
    return Circuit(n, tuple(b.gates), taps[n]), taps


def build_schur_circuit(lam: Sequence[int], n: int) -> Circuit:
    """``Trop(s_lam) = (.)_k Trop(e_{lam'_k})`` over the shared bank."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"s_{tuple(lam)} vanishes in {n} variables: zero polynomial has no tropicalization")
    b = _Builder(n)
    if not lam:
        return b.done(b.add(Const(Fraction(0))))
    taps = _bank(b, n)
    cols = conjugate(lam)
    out = taps[cols[0]]
    for c in cols[1:]:
        out = b.add(Odot(out, taps[c]))
    return b.done(out)


def build_skew_circuit(shape: SkewShape, n: int) -> Circuit:
    """Schur circuit for ``beta_max(w_{lam/mu})``; its first part is at most ``lam_1``."""
    from .bridge import beta_max, w_from_skew

    beta = beta_max(w_from_skew(shape))
    if len(beta) > n:
        raise ValueError(f"s_{shape} vanishes in {n} variables: zero polynomial has no tropicalization")
    return build_schur_circuit(beta, n)


def build_stanley_circuit(w: Permutation, n: int) -> Circuit:
    from .bridge import beta_max

    beta = beta_max(w)
    if len(beta) > n:
        raise ValueError(f"F_w vanishes in {n} variables: zero polynomial has no tropicalization")
    return build_schur_circuit(beta, n)


def circuit_eval(C: Circuit, x: Sequence) -> Fraction:
    if len(x) != C.nvars:
        raise ValueError(f"point has {len(x)} coordinates, circuit has {C.nvars} variables")
    x = [Fraction(v) for v in x]
    vals: list[Fraction] = []
    for g in C.gates:
        if isinstance(g, Input):
            vals.append(x[g.var])
        elif isinstance(g, Const):
            vals.append(Fraction(g.val))
        elif isinstance(g, Oplus):
            vals.append(max(vals[g.left], vals[g.right]))
        else:
            vals.append(vals[g.left] + vals[g.right])
    return vals[C.output]


def circuit_expand(C: Circuit, mode: Mode = "axiomatic", term_cap: int = DEFAULT_TERM_CAP) -> TropicalPolynomial:
    """The tropical polynomial ``res(C)``, canonical in ``mode``."""
    if mode not in ("axiomatic", "functional"):
        raise ValueError(f"unknown mode {mode!r}")
    n = C.nvars
    live = set(C.reachable())
    vals: dict[int, dict] = {}
    for k, g in enumerate(C.gates):
        if k not in live:
            continue
        if isinstance(g, Input):
            t = {tuple(int(i == g.var) for i in range(n)): Fraction(0)}
        elif isinstance(g, Const):
            t = {(0,) * n: Fraction(g.val)}
        elif isinstance(g, Oplus):
            t = dict(vals[g.left])
            for e, c in vals[g.right].items():
                if e not in t or t[e] < c:
                    t[e] = c
        else:
            t = {}
            for e1, c1 in vals[g.left].items():
                for e2, c2 in vals[g.right].items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    c = c1 + c2
                    if e not in t or t[e] < c:
                        t[e] = c
                if len(t) > term_cap:
                    break
        if len(t) > term_cap:
            raise ResourceLimitError(f"gate {k}: {len(t)} terms exceeds cap {term_cap}")
        if mode == "functional":
            t = _upper_envelope(t)
        vals[k] = t
    return TropicalPolynomial(n, vals[C.output])


def gate_count(C: Circuit) -> GateStats:
    counts = {Input: 0, Const: 0, Oplus: 0, Odot: 0}
    for k in C.reachable():
        counts[type(C.gates[k])] += 1
    return GateStats(counts[Input], counts[Const], counts[Oplus], counts[Odot])


def verify_evaluates(C: Circuit, f: ExactPolynomial, term_cap: int = DEFAULT_TERM_CAP) -> bool:
    """Whether ``res(C) = Trop(f)`` under the semiring axioms with idempotence."""
    if C.nvars != f.nvars:
        return False
    return trop_equal(circuit_expand(C, "axiomatic", term_cap), tropicalize(f), "axiomatic")
