from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import List, Tuple, Union

# Расширенные натуральные: int или math.inf (другие float не допускаются)
ExtNat = Union[int, float]
INF: float = math.inf


def is_finite(v: ExtNat) -> bool:
    return v != INF


def ext_text(v: ExtNat) -> str:
    return "inf" if v == INF else str(int(v))


def ext_add(a: ExtNat, b: ExtNat) -> ExtNat:
    if a == INF or b == INF:
        return INF
    return int(a) + int(b)


class Decoration(str, Enum):
    MINUS = "minus"
    NONE = "none"
    PLUS = "plus"

    @property
    def offset(self) -> int:
        return _OFFSETS[self]

    @property
    def suffix(self) -> str:
        return _SUFFIXES[self]

    def dual(self) -> "Decoration":
        if self is Decoration.PLUS:
            return Decoration.MINUS
        if self is Decoration.MINUS:
            return Decoration.PLUS
        return self


_OFFSETS: dict[Decoration, int] = {Decoration.MINUS: -1, Decoration.NONE: 0, Decoration.PLUS: 1}
_SUFFIXES: dict[Decoration, str] = {Decoration.MINUS: "-", Decoration.NONE: "", Decoration.PLUS: "+"}


class Ordering(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@total_ordering
@dataclass(frozen=True)
class DecoratedValue:
    """
    Значение n, n+ или n- при простом p.
    Порядок: n- < n < n+ < (n+1)-; inf больше любого конечного.
    Конструктор не проверяет инварианты: см. violations().
    """

    value: ExtNat
    dec: Decoration = Decoration.NONE

    @property
    def code(self) -> ExtNat:
        # 3n + offset(dec); стабильный ключ сортировки и сериализации
        if self.value == INF:
            return INF
        return 3 * int(self.value) + self.dec.offset

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, DecoratedValue):
            return NotImplemented
        return self.code < other.code

    def __str__(self) -> str:
        return ext_text(self.value) + self.dec.suffix

    def violations(self) -> List[Tuple[str, str]]:
        out: List[Tuple[str, str]] = []
        v = self.value
        if v != INF and (not float(v).is_integer() or v < 0):
            out.append(("value-natural", f"value {v!r} is not a natural number"))
            return out
        if v == INF and self.dec is not Decoration.NONE:
            out.append(("infinite-undecorated", f"{self} decorates inf"))
        if v != INF and v < 1 and self.dec is Decoration.MINUS:
            out.append(("minus-floor", f"{self} needs value >= 1"))
        if v != INF and v < 1 and self.dec is Decoration.PLUS:
            out.append(("plus-floor", f"{self} needs value >= 1"))
        return out

    @property
    def is_valid(self) -> bool:
        return not self.violations()


ZERO = DecoratedValue(0)


def compare(a: DecoratedValue, b: DecoratedValue) -> Ordering:
    if a.code < b.code:
        return Ordering.LESS
    if a.code > b.code:
        return Ordering.GREATER
    return Ordering.EQUAL


def sign_product(e1: Decoration, e2: Decoration) -> Decoration:
    """Правило произведения Бокштейна: none нейтрален, + * - = -."""
    if e1 is Decoration.NONE:
        return e2
    if e2 is Decoration.NONE:
        return e1
    if e1 is e2:
        return e1
    return Decoration.MINUS


def box_add(a: DecoratedValue, b: DecoratedValue) -> DecoratedValue:
    value = ext_add(a.value, b.value)
    if value == INF:
        return DecoratedValue(INF)
    return DecoratedValue(value, sign_product(a.dec, b.dec))


def dual(a: DecoratedValue) -> DecoratedValue:
    return DecoratedValue(a.value, a.dec.dual())


def shift(a: DecoratedValue, k: int) -> DecoratedValue:
    if k < 0:
        raise ValueError(f"shift must be >= 0, got {k}")
    if a.value == INF:
        return a
    return DecoratedValue(int(a.value) + k, a.dec)
