"""JSON wire formats.

Every list is emitted in a canonical order so identical objects serialize to
identical bytes.  Readers validate and raise ``ValueError``; they never repair.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .circuits import Circuit, Const, Input, Odot, Oplus
from .combinatorics import format_partition, parse_partition
from .newton import LatticePointSet
from .sympoly import ExactPolynomial, SchurExpansion
from .tropical import TropicalPolynomial


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _require(data: Any, *keys: str) -> None:
    if not isinstance(data, dict) or any(k not in data for k in keys):
        raise ValueError(f"expected an object with keys {keys}")


def polynomial_to_json(f: ExactPolynomial) -> dict:
    return {"vars": f.nvars, "terms": [{"exp": list(e), "coeff": str(c)} for e, c in f.sorted_terms()]}


def polynomial_from_json(data: dict) -> ExactPolynomial:
    _require(data, "vars", "terms")
    terms = []
    for t in data["terms"]:
        _require(t, "exp", "coeff")
        terms.append((tuple(t["exp"]), int(str(t["coeff"]))))
    return ExactPolynomial(int(data["vars"]), terms)


def tropical_to_json(T: TropicalPolynomial) -> dict:
    return {"vars": T.nvars, "terms": [{"exp": list(e), "coeff": str(c)} for e, c in T.sorted_terms()]}


def tropical_from_json(data: dict) -> TropicalPolynomial:
    _require(data, "vars", "terms")
    terms = []
    for t in data["terms"]:
        _require(t, "exp", "coeff")
        terms.append((tuple(t["exp"]), Fraction(str(t["coeff"]))))
    return TropicalPolynomial(int(data["vars"]), terms)


def points_to_json(S: LatticePointSet) -> dict:
    return {"dim": S.dim, "points": [list(p) for p in S]}


def points_from_json(data: dict) -> LatticePointSet:
    _require(data, "dim", "points")
    return LatticePointSet(int(data["dim"]), data["points"])


def expansion_to_json(e: SchurExpansion) -> dict:
    return {
        "degree": e.degree,
        "terms": [{"partition": format_partition(p), "coeff": str(c)} for p, c in e.sorted_items()],
    }


def expansion_from_json(data: dict) -> SchurExpansion:
    _require(data, "terms")
    return SchurExpansion({parse_partition(t["partition"]): int(t["coeff"]) for t in data["terms"]})


def circuit_to_json(C: Circuit) -> dict:
    gates = []
    for g in C.gates:
        if isinstance(g, Input):
            gates.append({"op": "input", "var": g.var})
        elif isinstance(g, Const):
            gates.append({"op": "const", "val": str(Fraction(g.val))})
        elif isinstance(g, Oplus):
            gates.append({"op": "oplus", "args": [g.left, g.right]})
        else:
            gates.append({"op": "odot", "args": [g.left, g.right]})
    return {"vars": C.nvars, "gates": gates, "output": C.output}


def circuit_from_json(data: dict) -> Circuit:
    _require(data, "vars", "gates", "output")
    gates = []
    for k, g in enumerate(data["gates"]):
        _require(g, "op")
        op = g["op"]
        if op == "input":
            gates.append(Input(int(g["var"])))
        elif op == "const":
            gates.append(Const(Fraction(str(g["val"]))))
        elif op in ("oplus", "odot"):
            args = g.get("args")
            if not isinstance(args, list) or len(args) != 2:
                raise ValueError(f"gate {k}: {op} needs two arguments")
            cls = Oplus if op == "oplus" else Odot
            gates.append(cls(int(args[0]), int(args[1])))
        else:
            raise ValueError(f"gate {k}: unknown op {op!r}")
    return Circuit(int(data["vars"]), tuple(gates), int(data["output"]))
