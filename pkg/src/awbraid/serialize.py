"""Lossless JSON encodings for the wire- and file-level interfaces.

Rational functions are exponent/coefficient pair lists with ascending
exponents and string fractions, so every consumer can parse them without a
bignum library surprise.  All encoders sort deterministically: identical
values always produce identical JSON.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .cyclo import CycloElem
from .elements import BasisKey, Element
from .halfint import HalfInt
from .kpoly import KPoly
from .laurent import LaurentQ
from .paths import Path
from .ratq import RatQ
from .verify import CheckReport, StructureConstants


def laurent_to_json(f: LaurentQ) -> list[list[Any]]:
    return [[e, str(c)] for e, c in f.terms()]


def laurent_from_json(data: list[list[Any]]) -> LaurentQ:
    return LaurentQ({int(e): Fraction(c) for e, c in data})


def ratq_to_json(r: RatQ) -> dict[str, Any]:
    return {"num": laurent_to_json(r.num), "den": laurent_to_json(r.den)}


def ratq_from_json(data: dict[str, Any]) -> RatQ:
    return RatQ(laurent_from_json(data["num"]), laurent_from_json(data["den"]))


def kpoly_to_json(f: KPoly) -> dict[str, Any]:
    return {"coeffs": [ratq_to_json(c) for c in f.coeffs]}


def kpoly_from_json(data: dict[str, Any]) -> KPoly:
    return KPoly([ratq_from_json(c) for c in data["coeffs"]])


def cyclo_to_json(x: CycloElem) -> dict[str, Any]:
    return {"order": x.n, "coeffs": [str(c) for c in x.coeffs]}


def cyclo_from_json(data: dict[str, Any]) -> CycloElem:
    return CycloElem(int(data["order"]), [Fraction(c) for c in data["coeffs"]])


def element_to_json(x: Element) -> dict[str, Any]:
    return {
        "spin": x.spin.twice,
        "terms": [
            {"a": key.a, "c": key.c, "p": key.p, "coeff": ratq_to_json(v)}
            for key, v in x.terms()
        ],
    }


def element_from_json(data: dict[str, Any]) -> Element:
    spin = HalfInt(int(data["spin"]))
    coeffs = {
        BasisKey(int(t["a"]), int(t["c"]), int(t["p"])): ratq_from_json(t["coeff"])
        for t in data["terms"]
    }
    return Element(spin, coeffs)


def path_to_json(p: Path) -> list[int]:
    return list(p.levels)


def path_from_json(data: list[int]) -> Path:
    return Path.of(data)


def report_to_json(r: CheckReport) -> dict[str, Any]:
    return {
        "name": r.name,
        "spin": r.spin.twice,
        "status": r.status,
        "witness": r.witness,
        "elapsed": r.elapsed,
    }


def report_from_json(data: dict[str, Any]) -> CheckReport:
    return CheckReport(
        name=data["name"],
        spin=HalfInt(int(data["spin"])),
        status=data["status"],
        witness=data.get("witness"),
        elapsed=float(data.get("elapsed", 0.0)),
    )


def structure_to_json(sc: StructureConstants) -> dict[str, Any]:
    table = []
    for (i, j) in sorted(sc.table):
        entry = sc.table[(i, j)]
        table.append(
            {
                "i": i,
                "j": j,
                "coeffs": [
                    {"k": k, "coeff": ratq_to_json(entry[k])} for k in sorted(entry)
                ],
            }
        )
    return {
        "spin": sc.spin.twice,
        "method": sc.method,
        "specialization": None if sc.specialization is None else str(sc.specialization),
        "basis": [[key.a, key.c, key.p] for key in sc.basis],
        "table": table,
    }


def structure_from_json(data: dict[str, Any]) -> StructureConstants:
    spin = HalfInt(int(data["spin"]))
    basis = tuple(BasisKey(int(a), int(c), int(p)) for a, c, p in data["basis"])
    table: dict[tuple[int, int], dict[int, RatQ]] = {}
    for cell in data["table"]:
        table[(int(cell["i"]), int(cell["j"]))] = {
            int(t["k"]): ratq_from_json(t["coeff"]) for t in cell["coeffs"]
        }
    spec = data.get("specialization")
    return StructureConstants(
        spin=spin,
        basis=basis,
        table=table,
        method=data.get("method", "abstract"),
        specialization=None if spec is None else Fraction(spec),
    )
