"""
Result shapes shared by the CLI and the HTTP API.

Big integers travel as decimal strings and rationals as "p/q" strings.
"""

from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, Field

from .partitions import Partition


def as_decimal(value: int) -> str:
    return str(int(value))


def as_rational(value: Fraction) -> str:
    """``"1/2"``, or just ``"2"`` when the denominator is 1."""
    return str(Fraction(value))


class CountResult(BaseModel):
    moduli: List[int] = Field(..., description="The sorted, deduplicated moduli")
    method: str = Field(..., description="oracle or lattice")
    count: str = Field(..., description="Number of simultaneous cores, as a decimal string")


class EnumerateResult(BaseModel):
    moduli: List[int] = Field(..., description="The sorted, deduplicated moduli")
    max_size: int = Field(..., description="Inclusive size bound used for the search")
    justification: str = Field(..., description="explicit or tripathi_bound")
    partitions: List[Partition] = Field(..., description="Cores ordered by size, then reverse-lexicographically")


class LargestResult(BaseModel):
    s: Optional[int] = Field(None, description="s for the (s, s+1, s+2) family")
    a: Optional[int] = Field(None, description="a for the (a, b) family")
    b: Optional[int] = Field(None, description="b for the (a, b) family")
    size: str = Field(..., description="Largest size, as a decimal string")
    partition: Optional[Partition] = Field(None, description="An explicit maximizer, when one is constructed")
    self_conjugate: Optional[bool] = Field(None, description="Whether the maximum is over self-conjugate cores only")


class AverageResult(BaseModel):
    a: int
    b: int
    mean: str = Field(..., description="Mean size from the closed form, as p/q")
    oracle_mean: Optional[str] = Field(None, description="Mean size over the enumerated cores, when checked")
    match: Optional[bool] = Field(None, description="Whether the two agree, when checked")


class BijectionRequest(BaseModel):
    a: int = Field(..., ge=2, description="Abacus modulus")
    partition: Optional[List[int]] = Field(None, description="An a-core, largest part first")
    c: Optional[List[int]] = Field(None, description="c-coordinates, used when no partition is given")
    b0: Optional[int] = Field(None, description="A modulus coprime to a; adds z-coordinates")


class BijectionResult(BaseModel):
    a: int
    partition: Partition
    c: List[int] = Field(..., description="c-coordinates")
    num2a: List[int] = Field(..., description="x-coordinates as numerators over 2a")
    size: str = Field(..., description="Size, as a decimal string")
    b0: Optional[int] = None
    z: Optional[List[int]] = Field(None, description="z-coordinates, when b0 is given")


class SequenceResult(BaseModel):
    sequence: str
    d: Optional[int] = None
    values: List[str] = Field(..., description="Terms for n = 1, 2, ..., as decimal strings")


class VerifyRow(BaseModel):
    theorem: str
    params: str = Field(..., description="Parameter tuple, e.g. (3,4)")
    formula: str = Field(..., description="Closed-form value")
    oracle: str = Field(..., description="Brute-force value")
    match: bool


class VerifyReport(BaseModel):
    rows: List[VerifyRow] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(row.match for row in self.rows)

    @property
    def first_mismatch(self) -> Optional[VerifyRow]:
        return next((row for row in self.rows if not row.match), None)
