"""Request handlers: the one place the service and the CLI both call into."""

from __future__ import annotations

from fractions import Fraction

from ..elements import (
    BasisKey,
    Element,
    path_basis,
    std_basis,
    word_normal_form,
)
from ..halfint import HalfInt
from ..reps import centralizer_dimension
from ..serialize import (
    cyclo_to_json,
    element_to_json,
    kpoly_to_json,
    report_to_json,
    structure_to_json,
)
from ..special import appendix_Q, appendix_limit_check, remark45_multiplicity
from ..verify import full_suite, named_checks, structure_constants
from . import schemas


class UsageError(ValueError):
    """Malformed request content (maps to exit code 2 / HTTP 400)."""


def _spin(req: schemas.SpinRequest) -> HalfInt:
    try:
        req.check_scale()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return HalfInt(req.spin)


def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    s = _spin(req)
    try:
        reports = full_suite(s) if req.check is None else named_checks(s, req.check)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    models = [schemas.ReportModel(**report_to_json(r)) for r in reports]
    return schemas.VerifyResponse(
        spin=req.spin, all_pass=all(r.status == "pass" for r in models), reports=models
    )


def dim(req: schemas.DimRequest) -> schemas.DimResponse:
    s = _spin(req)
    return schemas.DimResponse(spin=req.spin, dimension=centralizer_dimension(s))


def basis(req: schemas.BasisRequest) -> schemas.BasisResponse:
    s = _spin(req)
    if req.kind == "std":
        keys = [[k.a, k.c, k.p] for k in std_basis(s)]
        return schemas.BasisResponse(spin=req.spin, kind="std", keys=keys)
    paths = [list(p.levels) for p in path_basis(s)]
    return schemas.BasisResponse(spin=req.spin, kind="path", paths=paths)


def reduce_word(req: schemas.ReduceRequest) -> schemas.ElementResponse:
    s = _spin(req)
    try:
        element = word_normal_form(req.word, s)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = element_to_json(element)
    return schemas.ElementResponse(spin=data["spin"], terms=data["terms"])


def multiply_keys(req: schemas.MultiplyRequest) -> schemas.ElementResponse:
    s = _spin(req)
    try:
        x = Element.basis_element(s, BasisKey(*req.x))
        y = Element.basis_element(s, BasisKey(*req.y))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = element_to_json(x @ y)
    return schemas.ElementResponse(spin=data["spin"], terms=data["terms"])


def structure(req: schemas.StructureConstantsRequest) -> schemas.StructureConstantsResponse:
    s = _spin(req)
    q0 = None
    if req.specialization is not None:
        try:
            q0 = Fraction(req.specialization)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad specialization {req.specialization!r}") from exc
    try:
        sc = structure_constants(s, req.method, q0)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = structure_to_json(sc)
    return schemas.StructureConstantsResponse(**data)


def appendix(req: schemas.AppendixRequest) -> schemas.AppendixResponse:
    s = _spin(req)
    try:
        poly = appendix_Q(req.a, s)
        report = appendix_limit_check(req.a, s)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return schemas.AppendixResponse(
        spin=req.spin,
        a=req.a,
        order=report.order,
        q_poly=kpoly_to_json(poly),
        value_at_root=cyclo_to_json(report.limit),
        reference=cyclo_to_json(report.reference),
        equal=report.equal,
        nonzero=report.nonzero,
        num_valuation=report.num_valuation,
        den_valuation=report.den_valuation,
    )


def remark45(req: schemas.Remark45Request) -> schemas.Remark45Response:
    s = _spin(req)
    return schemas.Remark45Response(spin=req.spin, multiplicity=remark45_multiplicity(s))
