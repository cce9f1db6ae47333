"""Pydantic request/response models for the verification service.

The spin travels as a doubled integer everywhere (3 means spin 3/2), keeping
the wire format integer-only.  Algebraic payloads (elements, polynomials,
tables) use the canonical JSON encodings from the serialize module.
"""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, field_validator

DESK_SPINS = (1, 2, 3, 4)


class SpinRequest(BaseModel):
    spin: int = Field(description="doubled spin: 1, 2, 3 or 4 (i.e. s = 1/2 .. 2)")
    unsafe_large_spin: bool = Field(
        default=False, description="allow spins beyond the verified desk scale"
    )

    @field_validator("spin")
    @classmethod
    def _positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("the doubled spin must be at least 1")
        return v

    def check_scale(self) -> None:
        if self.spin not in DESK_SPINS and not self.unsafe_large_spin:
            raise ValueError(
                f"doubled spin {self.spin} is beyond the verified range {DESK_SPINS};"
                " pass unsafe_large_spin to proceed anyway"
            )


class VerifyRequest(SpinRequest):
    check: Optional[str] = Field(
        default=None, description="run one named check or check group instead of the suite"
    )


class ReportModel(BaseModel):
    name: str
    spin: int
    status: Literal["pass", "fail"]
    witness: Optional[str] = None
    elapsed: float = 0.0


class VerifyResponse(BaseModel):
    spin: int
    all_pass: bool
    reports: list[ReportModel]


class DimRequest(SpinRequest):
    pass


class DimResponse(BaseModel):
    spin: int
    dimension: int


class BasisRequest(SpinRequest):
    kind: Literal["std", "path"] = "std"


class BasisResponse(BaseModel):
    spin: int
    kind: Literal["std", "path"]
    keys: Optional[list[list[int]]] = None
    paths: Optional[list[list[int]]] = None


class ReduceRequest(SpinRequest):
    word: str = Field(description="whitespace-separated tokens s1, s2, s1^-1, s2^-1")


class ElementResponse(BaseModel):
    spin: int
    terms: list[dict[str, Any]]


class MultiplyRequest(SpinRequest):
    x: list[int] = Field(min_length=3, max_length=3, description="basis key a,c,p")
    y: list[int] = Field(min_length=3, max_length=3, description="basis key a,c,p")


class StructureConstantsRequest(SpinRequest):
    method: Literal["abstract", "matrix"] = "abstract"
    specialization: Optional[str] = Field(
        default=None, description="rational point like 3/5 (required for matrix at s >= 3/2)"
    )


class StructureConstantsResponse(BaseModel):
    spin: int
    method: str
    specialization: Optional[str]
    basis: list[list[int]]
    table: list[dict[str, Any]]


class AppendixRequest(SpinRequest):
    a: int = Field(description="level with s < a <= 2s")


class AppendixResponse(BaseModel):
    spin: int
    a: int
    order: int
    q_poly: dict[str, Any]
    value_at_root: dict[str, Any]
    reference: dict[str, Any]
    equal: bool
    nonzero: bool
    num_valuation: int
    den_valuation: int


class Remark45Request(SpinRequest):
    pass


class Remark45Response(BaseModel):
    spin: int
    multiplicity: int
