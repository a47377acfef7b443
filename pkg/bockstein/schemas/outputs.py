from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from bockstein.calculus.decorated import ExtNat, ext_text, is_finite

ExtOut = Union[int, str]
OutputFormat = Literal["text", "structured"]


def ext_out(v: ExtNat) -> ExtOut:
    return int(v) if is_finite(v) else ext_text(v)


class LedgerEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    section: str
    name: str
    left: str
    relation: str
    right: str
    passed: bool

    def line(self) -> str:
        return f"[{'pass' if self.passed else 'FAIL'}] {self.section} :: {self.name}: {self.left} {self.relation} {self.right}"


class LedgerReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: List[LedgerEntry]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> List[LedgerEntry]:
        return [e for e in self.entries if not e.passed]

    def to_text(self) -> str:
        lines = [e.line() for e in self.entries]
        lines.append(f"{len(self.entries) - len(self.failures)}/{len(self.entries)} entries pass")
        return "\n".join(lines)


class SigmaOut(BaseModel):
    group: str
    members: List[str]
    cofinite_localized: bool
    excluded: List[int]


class DimGOut(BaseModel):
    type: str
    group: str
    value: ExtOut
    degenerate: bool = Field(default=False, description="zero group: value 0 by convention")


class SlotOut(BaseModel):
    slot: str
    singularity: str
    values: Dict[str, ExtOut]


class ClassifyOut(BaseModel):
    type: str
    formal: bool
    realizable: bool
    violations: List[str]
    dim: Optional[ExtOut] = None
    kind: Optional[Literal["boltyanskii", "standard"]] = None
    critical_primes: Optional[str] = None
    field_gap: Optional[int] = None
    square_dim: Optional[ExtOut] = None
    slots: List[SlotOut] = Field(default_factory=list)


class OutputEnvelope(BaseModel):
    format: OutputFormat = "text"
    body: str
    exit_code: Literal[0, 1, 2] = 0
    data: Optional[Any] = None
