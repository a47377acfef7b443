from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from bockstein.calculus.dimtype import DimensionType
from bockstein.calculus.primes import is_prime

ProblemKind = Literal["decomposition", "map"]
Relation = Literal["<=", "=", ">="]


class CheckRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    left: str
    relation: Relation
    right: str
    passed: bool

    def line(self) -> str:
        return f"{self.name} | {self.left} | {self.relation} | {self.right} | {'pass' if self.passed else 'FAIL'}"


class WitnessCertificate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    problem: ProblemKind
    n: int
    m: Optional[int] = None
    d1: DimensionType
    d2: DimensionType
    bound: DimensionType
    checks: List[CheckRecord]
    excess: Optional[int] = Field(default=None, description="n - dim of the product bound")

    @field_serializer("d1", "d2", "bound")
    def _ser_type(self, v: DimensionType) -> str:
        return v.literal()

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks)

    def header(self) -> str:
        where = f"n={self.n}" if self.m is None else f"n={self.n} m={self.m}"
        status = "valid" if self.valid else "invalid"
        return f"{self.problem}({where}) D1=[{self.d1.literal()}] D2=[{self.d2.literal()}] {status}"

    def to_text(self) -> str:
        lines = [self.header()]
        lines.extend(c.line() for c in self.checks)
        return "\n".join(lines)


class SearchBounds(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_value: int = Field(default=6, ge=1)
    # пусто = только однородные типы
    primes: List[int] = Field(default_factory=list)
    realizable_only: bool = True

    @field_validator("primes")
    @classmethod
    def _v_primes(cls: type["SearchBounds"], v: List[int]) -> List[int]:
        bad = [p for p in v if not is_prime(p)]
        if bad:
            raise ValueError(f"exception primes must be prime: {bad}")
        return sorted(set(v))


class SearchReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    problem: ProblemKind
    n: int
    m: Optional[int] = None
    bounds: SearchBounds
    candidates: int
    pairs_checked: int
    certificates: List[WitnessCertificate]

    def to_text(self) -> str:
        where = f"n={self.n}" if self.m is None else f"n={self.n} m={self.m}"
        lines = [
            f"search {self.problem} {where}: {len(self.certificates)} certificate(s), "
            f"{self.pairs_checked} pairs over {self.candidates} candidates"
        ]
        for c in self.certificates:
            lines.append("")
            lines.append(c.to_text())
        return "\n".join(lines)
