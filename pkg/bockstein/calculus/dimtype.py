from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from bockstein.calculus import decorated
from bockstein.calculus.decorated import (
    INF,
    Decoration,
    DecoratedValue,
    ExtNat,
    ext_add,
    ext_text,
    is_finite,
)
from bockstein.calculus.primes import PrimeSet, is_prime


class GroupKind(str, Enum):
    Q = "Q"
    ZP = "Zp"
    ZP_INFINITY = "ZpInfinity"
    Z_LOCALIZED = "ZLocalized"


@dataclass(frozen=True, order=True)
class BocksteinGroup:
    kind: GroupKind
    prime: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is GroupKind.Q:
            if self.prime is not None:
                raise ValueError("Q carries no prime")
        elif self.prime is None or not is_prime(self.prime):
            raise ValueError(f"{self.kind.value} needs a prime, got {self.prime!r}")

    @property
    def is_field(self) -> bool:
        return self.kind in (GroupKind.Q, GroupKind.ZP)

    def __str__(self) -> str:
        p = self.prime
        if self.kind is GroupKind.Q:
            return "Q"
        if self.kind is GroupKind.ZP:
            return f"Z/{p}"
        if self.kind is GroupKind.ZP_INFINITY:
            return f"Z({p}inf)"
        return f"Z_({p})"


Q = BocksteinGroup(GroupKind.Q)


def Zp(p: int) -> BocksteinGroup:
    return BocksteinGroup(GroupKind.ZP, p)


def ZpInfinity(p: int) -> BocksteinGroup:
    return BocksteinGroup(GroupKind.ZP_INFINITY, p)


def ZLocalized(p: int) -> BocksteinGroup:
    return BocksteinGroup(GroupKind.Z_LOCALIZED, p)


class Singularity(str, Enum):
    REGULAR = "regular"
    PLUS_SINGULAR = "plusSingular"
    MINUS_SINGULAR = "minusSingular"


# --- Ошибки

@dataclass(frozen=True)
class Violation:
    location: str
    rule: str
    detail: str
    formal: bool = True


@dataclass(frozen=True)
class ValidityReport:
    formal: bool
    realizable: bool
    violations: Tuple[Violation, ...] = ()

    def summary(self) -> str:
        if not self.violations:
            return "ok"
        return "; ".join(f"{v.location}: {v.rule} ({v.detail})" for v in self.violations)


class FormalValidityError(ValueError):
    def __init__(self: "FormalValidityError", report: ValidityReport, literal: str = "") -> None:
        broken = [v for v in report.violations if v.formal]
        rule = broken[0].rule if broken else "unknown"
        super().__init__(f"formally invalid dimension type {literal!r}: {report.summary()}")
        self.report = report
        self.rule = rule


class DomainRangeError(ValueError):
    def __init__(self: "DomainRangeError", name: str, value: object, expected: str) -> None:
        super().__init__(f"{name}={value!r} out of range: expected {expected}")
        self.name = name
        self.value = value


# --- Тип размерности

@dataclass(frozen=True)
class DimensionType:
    """
    Конечный носитель над простыми:
    - q: значение на Q (D(0))
    - default: декорированное значение во всех простых, кроме исключений
    - exceptions: отсортированные пары (p, значение)
    Прямой конструктор не канонизирует и не проверяет; используйте make().
    """

    q: ExtNat
    default: DecoratedValue = field(default_factory=lambda: DecoratedValue(0))
    exceptions: Tuple[Tuple[int, DecoratedValue], ...] = ()

    @classmethod
    def make(
        cls: type["DimensionType"],
        q: ExtNat,
        default: Optional[DecoratedValue] = None,
        exceptions: Optional[Mapping[int, DecoratedValue]] = None,
    ) -> "DimensionType":
        """Канонический конструктор: пропущенный default = регулярное значение q."""
        d = default if default is not None else DecoratedValue(q)
        ex = {int(p): v for p, v in (exceptions or {}).items() if v != d}
        out = cls(q, d, tuple(sorted(ex.items())))
        report = validate(out)
        if not report.formal:
            raise FormalValidityError(report, out.literal())
        return out

    @classmethod
    def uniform(cls: type["DimensionType"], q: ExtNat, value: ExtNat, dec: Decoration = Decoration.NONE) -> "DimensionType":
        return cls.make(q, DecoratedValue(value, dec))

    @property
    def exception_map(self) -> Dict[int, DecoratedValue]:
        return dict(self.exceptions)

    @property
    def exception_primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.exceptions)

    def at(self, p: int) -> DecoratedValue:
        for ep, v in self.exceptions:
            if ep == p:
                return v
        return self.default

    def slots(self) -> Iterator[Tuple[Optional[int], DecoratedValue]]:
        """(None, default) затем (p, value) для каждого исключения."""
        yield None, self.default
        yield from self.exceptions

    def sort_key(self) -> tuple:
        return (self.q, self.default.code, tuple((p, v.code) for p, v in self.exceptions))

    def literal(self) -> str:
        parts = [f"q={ext_text(self.q)}"]
        if self.default != DecoratedValue(self.q):
            parts.append(f"all={self.default}")
        parts.extend(f"p{p}={v}" for p, v in self.exceptions)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.literal()


ZERO_TYPE = DimensionType(0)


def _is_zero_type(D: DimensionType) -> bool:
    return D.q == 0 and D.default == DecoratedValue(0) and not D.exceptions


def _derived(q: ExtNat, v: DecoratedValue) -> Dict[GroupKind, ExtNat]:
    # Неравенства Бокштейна: значения Zp, Z(p^inf), Z_(p) по (n, eps) и q
    n = v.value
    if v.dec is Decoration.MINUS:
        n_inf = n - 1 if is_finite(n) else INF
    else:
        n_inf = n
    if v.dec is Decoration.NONE:
        n_loc = q
    else:
        n_loc = max(q, ext_add(n_inf, 1))
    return {GroupKind.ZP: n, GroupKind.ZP_INFINITY: n_inf, GroupKind.Z_LOCALIZED: n_loc}


def validate(D: DimensionType) -> ValidityReport:
    violations: List[Violation] = []
    q = D.q
    if q != INF and (not float(q).is_integer() or q < 0):
        violations.append(Violation("q", "value-natural", f"q={q!r} is not a natural number"))
    for p, v in D.slots():
        where = "all" if p is None else f"p{p}"
        if p is not None and not is_prime(p):
            violations.append(Violation(where, "exception-prime", f"{p!r} is not prime"))
        for rule, detail in v.violations():
            violations.append(Violation(where, rule, detail))
        if v.dec is Decoration.NONE and v.value != q:
            violations.append(Violation(where, "regular-coupling", f"regular value {v} differs from q={ext_text(q)}"))
        if p is not None and v == D.default:
            violations.append(Violation(where, "canonical", f"exception {v} equals the default"))
    primes = D.exception_primes
    if list(primes) != sorted(set(primes)):
        violations.append(Violation("exceptions", "canonical", "exception primes not sorted or repeated"))

    formal = not violations
    if formal and not _is_zero_type(D):
        for G, value in _all_values(D):
            if value < 1:
                where = "Q" if G is None else f"{G}"
                violations.append(
                    Violation(where, "zero-rule", f"derived value {ext_text(value)} while the type is nonzero", formal=False)
                )
    realizable = formal and not violations
    return ValidityReport(formal=formal, realizable=realizable, violations=tuple(violations))


def _all_values(D: DimensionType) -> Iterator[Tuple[Optional[str], ExtNat]]:
    yield None, D.q
    for p, v in D.slots():
        label = "p" if p is None else str(p)
        for kind, value in _derived(D.q, v).items():
            yield f"{kind.value}({label})", value


def require_formal(D: DimensionType) -> DimensionType:
    report = validate(D)
    if not report.formal:
        raise FormalValidityError(report, D.literal())
    return D


# --- Вычисления

def evaluate(D: DimensionType, G: BocksteinGroup) -> ExtNat:
    require_formal(D)
    if G.kind is GroupKind.Q:
        return D.q
    assert G.prime is not None
    return _derived(D.q, D.at(G.prime))[G.kind]


def evaluate_slot(D: DimensionType, kind: GroupKind, p: Optional[int] = None) -> ExtNat:
    """Значение на группе вида kind в простом p; p=None означает "общее" простое (default)."""
    if kind is GroupKind.Q:
        return D.q
    v = D.default if p is None else D.at(p)
    return _derived(D.q, v)[kind]


def dim(D: DimensionType) -> ExtNat:
    require_formal(D)
    return max(value for _, value in _all_values(D))


def _require_finite_dim(D: DimensionType) -> int:
    n = dim(D)
    if not is_finite(n):
        raise DomainRangeError("dim", "inf", "finite dimension")
    return int(n)


def _union_primes(*types: DimensionType) -> List[int]:
    return sorted({p for D in types for p in D.exception_primes})


def leq(D1: DimensionType, D2: DimensionType) -> bool:
    require_formal(D1)
    require_formal(D2)
    if D1.q > D2.q:
        return False
    if D1.default > D2.default:
        return False
    return all(D1.at(p) <= D2.at(p) for p in _union_primes(D1, D2))


def _pointwise(
    D1: DimensionType,
    D2: DimensionType,
    q: ExtNat,
    op: Callable[[DecoratedValue, DecoratedValue], DecoratedValue],
) -> DimensionType:
    ex = {p: op(D1.at(p), D2.at(p)) for p in _union_primes(D1, D2)}
    return DimensionType.make(q, op(D1.default, D2.default), ex)


def star(D: DimensionType) -> DimensionType:
    require_formal(D)
    return DimensionType.make(
        D.q,
        decorated.dual(D.default),
        {p: decorated.dual(v) for p, v in D.exceptions},
    )


def boxplus(D1: DimensionType, D2: DimensionType) -> DimensionType:
    require_formal(D1)
    require_formal(D2)
    return _pointwise(D1, D2, ext_add(D1.q, D2.q), decorated.box_add)


def oplus(D1: DimensionType, D2: DimensionType) -> DimensionType:
    return star(boxplus(star(D1), star(D2)))


def add_const(D: DimensionType, k: int) -> DimensionType:
    require_formal(D)
    if k < 0:
        raise DomainRangeError("k", k, ">= 0")
    return DimensionType.make(
        ext_add(D.q, k),
        decorated.shift(D.default, k),
        {p: decorated.shift(v, k) for p, v in D.exceptions},
    )


def singularity(D: DimensionType, p: int) -> Singularity:
    require_formal(D)
    if not is_prime(p):
        raise DomainRangeError("p", p, "a prime")
    dec = D.at(p).dec
    if dec is Decoration.PLUS:
        return Singularity.PLUS_SINGULAR
    if dec is Decoration.MINUS:
        return Singularity.MINUS_SINGULAR
    return Singularity.REGULAR


def boltyanskii_type(n: int) -> DimensionType:
    if n < 2:
        raise DomainRangeError("n", n, ">= 2")
    return DimensionType.make(n - 1, DecoratedValue(n - 1, Decoration.PLUS))


def field_values(D: DimensionType) -> List[ExtNat]:
    """D(Q) и D(Z/p) по всем различным слотам."""
    require_formal(D)
    return [D.q] + [v.value for _, v in D.slots()]


def is_boltyanskii(D: DimensionType) -> bool:
    n = _require_finite_dim(D)
    if n < 1:
        return False
    return all(value < n for value in field_values(D))


def is_standard(D: DimensionType) -> bool:
    return not is_boltyanskii(D)


def critical_primes(D: DimensionType) -> PrimeSet:
    n = _require_finite_dim(D)
    if n < 1:
        raise DomainRangeError("dim", n, "1 <= dim < inf")

    def hits(v: DecoratedValue) -> bool:
        return _derived(D.q, v)[GroupKind.Z_LOCALIZED] == n

    if hits(D.default):
        return PrimeSet.all_but(p for p, v in D.exceptions if not hits(v))
    return PrimeSet.finite(p for p, v in D.exceptions if hits(v))


# --- Оценки из теории расширений

def union_bound(D1: DimensionType, D2: DimensionType) -> DimensionType:
    """X = A u B, d_A <= D1, d_B <= D2  =>  d_X <= D1 (+) D2 + 1."""
    return add_const(oplus(D1, D2), 1)


def map_domain_bound(D1: DimensionType, D2: DimensionType) -> DimensionType:
    """f: X -> Y, d_f <= D1, d_Y <= D2  =>  d_X <= D1 (+) D2."""
    return oplus(D1, D2)


def field_gap(D: DimensionType) -> int:
    n = _require_finite_dim(D)
    return n - int(max(field_values(D)))


def square_dim(D: DimensionType) -> ExtNat:
    return dim(boxplus(D, D))


def sigma_values(D: DimensionType, primes: Iterable[int]) -> Dict[BocksteinGroup, ExtNat]:
    """Все значения на sigma, ограниченные списком простых."""
    out: Dict[BocksteinGroup, ExtNat] = {Q: evaluate(D, Q)}
    for p in primes:
        for G in (Zp(p), ZpInfinity(p), ZLocalized(p)):
            out[G] = evaluate(D, G)
    return out
