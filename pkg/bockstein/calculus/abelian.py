from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Tuple

from bockstein.calculus.primes import is_prime


class AtomKind(str, Enum):
    Z = "Z"
    Q = "Q"
    ZMOD_PK = "ZmodPk"
    ZP_INF = "ZpInf"
    Z_LOC = "ZLoc"
    Z_INV_P = "ZInvP"


_TORSION_FREE = (AtomKind.Z, AtomKind.Q, AtomKind.Z_LOC, AtomKind.Z_INV_P)


@dataclass(frozen=True, order=True)
class GroupAtom:
    kind: AtomKind
    prime: Optional[int] = None
    k: int = 1

    def __post_init__(self) -> None:
        if self.kind in (AtomKind.Z, AtomKind.Q):
            if self.prime is not None:
                raise ValueError(f"{self.kind.value} carries no prime")
            return
        if self.prime is None or not is_prime(self.prime):
            raise ValueError(f"{self.kind.value} needs a prime, got {self.prime!r}")
        if self.k < 1:
            raise ValueError(f"exponent must be >= 1, got {self.k}")

    @property
    def is_torsion_free(self) -> bool:
        return self.kind in _TORSION_FREE

    def divisible_by(self, p: int) -> bool:
        # только для атомов без кручения
        if self.kind is AtomKind.Z:
            return False
        if self.kind is AtomKind.Q:
            return True
        if self.kind is AtomKind.Z_LOC:
            return p != self.prime
        if self.kind is AtomKind.Z_INV_P:
            return p == self.prime
        raise ValueError(f"{self} is a torsion atom")

    def __str__(self) -> str:
        p = self.prime
        if self.kind is AtomKind.Z:
            return "Z"
        if self.kind is AtomKind.Q:
            return "Q"
        if self.kind is AtomKind.ZMOD_PK:
            return f"Z/{p}" if self.k == 1 else f"Z/{p}^{self.k}"
        if self.kind is AtomKind.ZP_INF:
            return f"Z({p}inf)"
        if self.kind is AtomKind.Z_LOC:
            return f"Z_({p})"
        return f"Z[1/{p}]"


@dataclass(frozen=True)
class GroupExpr:
    """Формальная конечная прямая сумма атомов; пустая сумма = нулевая группа."""

    atoms: Tuple[GroupAtom, ...] = ()

    @classmethod
    def of(cls: type["GroupExpr"], atoms: Iterable[GroupAtom]) -> "GroupExpr":
        return cls(tuple(sorted(atoms)))

    @property
    def is_zero(self) -> bool:
        return not self.atoms

    @property
    def torsion_free_atoms(self) -> Tuple[GroupAtom, ...]:
        return tuple(a for a in self.atoms if a.is_torsion_free)

    def p_torsion_atoms(self, p: int) -> Tuple[GroupAtom, ...]:
        return tuple(a for a in self.atoms if not a.is_torsion_free and a.prime == p)

    @property
    def torsion_primes(self) -> Tuple[int, ...]:
        return tuple(sorted({a.prime for a in self.atoms if not a.is_torsion_free and a.prime is not None}))

    def direct_sum(self, other: "GroupExpr") -> "GroupExpr":
        return GroupExpr.of(self.atoms + other.atoms)

    def __str__(self) -> str:
        if not self.atoms:
            return "0"
        return " + ".join(str(a) for a in self.atoms)
