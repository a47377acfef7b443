from __future__ import annotations

import itertools
import logging
from typing import Iterable, List, Optional, Tuple

from bockstein.calculus import decorated
from bockstein.calculus.decorated import Decoration, DecoratedValue, ExtNat, ext_text
from bockstein.calculus.dimtype import (
    DimensionType,
    GroupKind,
    Q,
    Zp,
    ZpInfinity,
    add_const,
    boltyanskii_type,
    boxplus,
    dim,
    evaluate,
    evaluate_slot,
    is_boltyanskii,
    leq,
    oplus,
    square_dim,
    validate,
)
from bockstein.schemas.certificate import SearchBounds
from bockstein.schemas.outputs import LedgerEntry, LedgerReport
from bockstein.services.exotic import (
    decomposition_feasible,
    hurewicz_bound_checks,
    map_feasible,
    paper_witness_decomposition,
    paper_witness_map,
)
from bockstein.services.search import search_decomposition

log = logging.getLogger("bockstein.ledger")


class _Ledger:
    def __init__(self: "_Ledger") -> None:
        self.entries: List[LedgerEntry] = []

    def add(self, section: str, name: str, left: object, relation: str, right: object, passed: bool) -> None:
        e = LedgerEntry(section=section, name=name, left=str(left), relation=relation, right=str(right), passed=bool(passed))
        self.entries.append(e)
        if passed:
            log.debug("%s", e.line())
        else:
            log.warning("%s", e.line())

    def eq(self, section: str, name: str, left: object, right: object) -> None:
        self.add(section, name, left, "=", right, left == right)

    def ext_eq(self, section: str, name: str, left: ExtNat, right: int) -> None:
        self.add(section, name, ext_text(left), "=", right, left == right)

    def law(self, section: str, name: str, cases: Iterable[Tuple[str, bool]]) -> None:
        count = 0
        first_bad: Optional[str] = None
        for label, ok in cases:
            count += 1
            if not ok and first_bad is None:
                first_bad = label
        right = "all pass" if first_bad is None else f"fails at {first_bad}"
        self.add(section, name, f"{count} cases", "->", right, first_bad is None)


def _plus(v: int) -> DecoratedValue:
    return DecoratedValue(v, Decoration.PLUS)


def _minus(v: int) -> DecoratedValue:
    return DecoratedValue(v, Decoration.MINUS)


def _boltyanskii_facts(led: _Ledger, max_n: int) -> None:
    for n in range(2, max_n + 1):
        sec = f"B_{n}"
        B = boltyanskii_type(n)
        led.ext_eq(sec, "B_n(Z_(p)) = n", evaluate_slot(B, GroupKind.Z_LOCALIZED), n)
        for G in (Q, Zp(2), ZpInfinity(2)):
            led.ext_eq(sec, f"B_n({G}) = n-1", evaluate(B, G), n - 1)
        led.ext_eq(sec, "dim B_n = n", dim(B), n)
        led.eq(sec, "B_n is Boltyanskii", is_boltyanskii(B), True)
        led.ext_eq(sec, "dim(B_n [+] B_n) = 2n-1", square_dim(B), 2 * n - 1)
        led.ext_eq(sec, "dim(S [+] S) = 2n for regular S = (n, n)", square_dim(DimensionType.make(n)), 2 * n)
        if n >= 3:
            prev = add_const(boltyanskii_type(n - 1), 1)
            led.eq(sec, "B_n = B_{n-1} + 1", B.literal(), prev.literal())


def _decomposition_chain(led: _Ledger, max_n: int) -> None:
    for n in range(5, max_n + 1):
        sec = f"decomposition n={n}"
        D1, D2 = paper_witness_decomposition(n)
        middle = decorated.box_add(decorated.dual(D1.default), decorated.dual(D2.default))
        led.eq(sec, "2+ [+] (n-4)- = (n-2)-", str(middle), str(_minus(n - 2)))
        s = oplus(D1, D2)
        led.eq(sec, "(D1 (+) D2)(p) = ((n-2)-)* = (n-2)+", str(s.default), str(decorated.dual(middle)))
        led.eq(sec, "(n-2)+ by the chain", str(decorated.dual(middle)), str(_plus(n - 2)))
        led.ext_eq(sec, "(D1 (+) D2)(Q) = n-2", s.q, n - 2)
        led.eq(sec, "D1 (+) D2 = B_{n-1}", s.literal(), boltyanskii_type(n - 1).literal())

        b = boxplus(D1, D2)
        led.eq(sec, "(D1 [+] D2)(p) = (n-2)-", str(b.default), str(_minus(n - 2)))
        led.ext_eq(sec, "(D1 [+] D2)(Q) = n-2", b.q, n - 2)
        led.ext_eq(sec, "(D1 [+] D2)(Z_(p)) = n-2", evaluate_slot(b, GroupKind.Z_LOCALIZED), n - 2)
        led.add(sec, "dim(D1 [+] D2) <= n-2", ext_text(dim(b)), "<=", n - 2, dim(b) <= n - 2)
        led.eq(sec, "B_n = B_{n-1} + 1 = D1 (+) D2 + 1", boltyanskii_type(n).literal(), add_const(s, 1).literal())

        cert = decomposition_feasible(n, D1, D2, realizable_only=True)
        led.eq(sec, "certificate valid", cert.valid, True)
        led.eq(sec, "dim X = dim(A x B) + 2", cert.excess, 2)


def _map_chain(led: _Ledger, max_n: int) -> None:
    for n in range(5, max_n + 1):
        for m in range(2, n - 2):
            sec = f"map n={n} m={m}"
            D, D1, D2 = paper_witness_map(n, m)
            led.eq(sec, "(D1 (+) D2)(p) = (n-2)+", str(oplus(D1, D2).default), str(_plus(n - 2)))
            led.eq(sec, "(D1 [+] D2)(p) = (n-2)-", str(boxplus(D1, D2).default), str(_minus(n - 2)))
            bound = add_const(oplus(D1, D2), 1)
            led.add(sec, "D <= D1 (+) D2 + 1", D.literal(), "<=", bound.literal(), leq(D, bound))
            led.ext_eq(sec, "dim(D1 [+] (D2+1)) = n-1", dim(boxplus(D1, add_const(D2, 1))), n - 1)
            cert = map_feasible(n, m, D1, D2, realizable_only=True)
            led.eq(sec, "certificate valid", cert.valid, True)
            led.eq(sec, "dim X = sup dim(Y x fibre) + 1", cert.excess, 1)


def _four_dimensional_slice(led: _Ledger) -> None:
    sec = "map n=4 (slice of n=5, m=2)"
    _, D1, D2 = paper_witness_map(5, 2)
    led.ext_eq(sec, "dim D1 = 2", dim(D1), 2)
    led.ext_eq(sec, "dim D2 = 2", dim(D2), 2)
    led.ext_eq(sec, "dim(D1 [+] D2) = 3", dim(boxplus(D1, D2)), 3)


def law_range(max_value: int) -> List[DimensionType]:
    """Однородные формально корректные типы с q, значением <= max_value."""
    out: List[DimensionType] = []
    for q in range(0, max_value + 1):
        out.append(DimensionType.make(q))
        for v in range(1, max_value + 1):
            out.append(DimensionType.make(q, _minus(v)))
            out.append(DimensionType.make(q, _plus(v)))
    return out


def _pairs(types: List[DimensionType]) -> Iterable[Tuple[DimensionType, DimensionType]]:
    return itertools.product(types, repeat=2)


def _label(*types: DimensionType) -> str:
    return " ; ".join(f"[{D.literal()}]" for D in types)


def _laws(led: _Ledger, max_value: int) -> None:
    sec = f"laws (uniform, values <= {max_value})"
    types = law_range(max_value)
    fields = [Q, Zp(2), Zp(3)]

    led.law(
        sec,
        "D1 [+] D2 <= (D1* [+] D2*)*",
        ((_label(a, b), leq(boxplus(a, b), oplus(a, b))) for a, b in _pairs(types)),
    )
    led.law(
        sec,
        "(D1 [+] D2)(F) = (D1 (+) D2)(F) = D1(F) + D2(F)",
        (
            (
                _label(a, b) + f" at {F}",
                evaluate(boxplus(a, b), F) == evaluate(oplus(a, b), F) == evaluate(a, F) + evaluate(b, F),
            )
            for a, b in _pairs(types)
            for F in fields
        ),
    )

    comparable = [(a, b) for a, b in _pairs(types) if leq(a, b)]

    def monotone() -> Iterable[Tuple[str, bool]]:
        for (a, a2), (b, b2) in itertools.product(comparable, repeat=2):
            ok = leq(boxplus(a, b), boxplus(a2, b2)) and leq(oplus(a, b), oplus(a2, b2))
            yield _label(a, a2, b, b2), ok

    led.law(sec, "D1 <= D1', D2 <= D2' => monotone [+] and (+)", monotone())
    led.law(
        sec,
        "d_X <= D1 (+) D2 for maps (Hurewicz form)",
        ((_label(a, b), all(c.passed for c in hurewicz_bound_checks(a, b))) for a, b in _pairs(types)),
    )

    realizable = [D for D in types if validate(D).realizable and dim(D) >= 1]
    led.law(
        sec,
        "dim(D [+] E) >= dim D + 1 when dim E >= 1 (no exotic map below 4)",
        ((_label(a, b), dim(boxplus(a, b)) >= dim(a) + 1) for a, b in _pairs(realizable)),
    )


def _decomposition_boundary(led: _Ledger) -> None:
    sec = "no exotic decomposition in dim <= 4"
    for n in (2, 3, 4):
        report = search_decomposition(n, SearchBounds(max_value=n + 2))
        led.add(sec, f"realizable uniform witnesses at n={n}", len(report.certificates), "=", 0, not report.certificates)


def verify_paper(max_n: int = 12, law_max_value: int = 2) -> LedgerReport:
    led = _Ledger()
    _boltyanskii_facts(led, max_n)
    _decomposition_chain(led, max_n)
    _map_chain(led, max_n)
    _four_dimensional_slice(led)
    _laws(led, law_max_value)
    _decomposition_boundary(led)

    report = LedgerReport(entries=led.entries)
    log.info("ledger: %d entries, %d failed", len(report.entries), len(report.failures))
    return report
