from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable

from sympy import isprime


def is_prime(p: int) -> bool:
    return isinstance(p, int) and not isinstance(p, bool) and p >= 2 and bool(isprime(p))


def require_prime(p: int, what: str = "prime") -> int:
    if not is_prime(p):
        raise ValueError(f"{what} must be prime, got {p!r}")
    return p


@dataclass(frozen=True)
class PrimeSet:
    """
    Конечное множество простых или коконечное "все, кроме S".
    cofinite=False: primes = само множество
    cofinite=True:  primes = исключённые S
    """

    primes: FrozenSet[int] = frozenset()
    cofinite: bool = False

    @classmethod
    def finite(cls: type["PrimeSet"], primes: Iterable[int]) -> "PrimeSet":
        return cls(frozenset(primes), False)

    @classmethod
    def all_but(cls: type["PrimeSet"], excluded: Iterable[int] = ()) -> "PrimeSet":
        return cls(frozenset(excluded), True)

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.primes

    def __contains__(self, p: object) -> bool:
        if self.cofinite:
            return p not in self.primes
        return p in self.primes

    def union(self, other: "PrimeSet") -> "PrimeSet":
        if self.cofinite and other.cofinite:
            return PrimeSet.all_but(self.primes & other.primes)
        if self.cofinite:
            return PrimeSet.all_but(self.primes - other.primes)
        if other.cofinite:
            return PrimeSet.all_but(other.primes - self.primes)
        return PrimeSet.finite(self.primes | other.primes)

    def describe(self) -> str:
        listed = "{" + ", ".join(str(p) for p in sorted(self.primes)) + "}"
        if self.cofinite:
            return "all primes" if not self.primes else f"all primes not in {listed}"
        return listed
