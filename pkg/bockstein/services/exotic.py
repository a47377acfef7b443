from __future__ import annotations

from typing import List, Tuple

from bockstein.calculus.decorated import Decoration, DecoratedValue, ExtNat, ext_add, ext_text, is_finite
from bockstein.calculus.dimtype import (
    DimensionType,
    DomainRangeError,
    add_const,
    boltyanskii_type,
    boxplus,
    dim,
    leq,
    map_domain_bound,
    require_formal,
    union_bound,
    validate,
)
from bockstein.schemas.certificate import CheckRecord, WitnessCertificate


def _require_inputs(D1: DimensionType, D2: DimensionType, realizable_only: bool) -> None:
    for D in (D1, D2):
        require_formal(D)
        if realizable_only and not validate(D).realizable:
            raise DomainRangeError("D", D.literal(), "a realizable dimension type")


def _leq_check(name: str, left: DimensionType, right: DimensionType) -> CheckRecord:
    return CheckRecord(name=name, left=left.literal(), relation="<=", right=right.literal(), passed=leq(left, right))


def _int_check(name: str, left: ExtNat, relation: str, right: ExtNat) -> CheckRecord:
    if relation == "<=":
        ok = left <= right
    elif relation == "=":
        ok = left == right
    else:
        ok = left >= right
    return CheckRecord(name=name, left=ext_text(left), relation=relation, right=ext_text(right), passed=ok)


def decomposition_feasible(
    n: int,
    D1: DimensionType,
    D2: DimensionType,
    *,
    realizable_only: bool = False,
) -> WitnessCertificate:
    """
    (a) B_n <= D1 (+) D2 + 1   -> X = A u B, d_A <= D1, d_B <= D2
    (b) dim(D1 [+] D2) <= n-2  -> dim(A x B) + 2 <= dim X
    """
    if n < 2:
        raise DomainRangeError("n", n, ">= 2")
    _require_inputs(D1, D2, realizable_only)

    bound = boltyanskii_type(n)
    product_dim = dim(boxplus(D1, D2))
    checks = [
        _leq_check("B_n <= D1 (+) D2 + 1", bound, union_bound(D1, D2)),
        _int_check("dim(D1 [+] D2) <= n-2", product_dim, "<=", n - 2),
    ]
    return WitnessCertificate(
        problem="decomposition",
        n=n,
        d1=D1,
        d2=D2,
        bound=bound,
        checks=checks,
        excess=n - int(product_dim) if is_finite(product_dim) else None,
    )


def map_target_type(n: int, m: int) -> DimensionType:
    """D(Q) = m-1, D(p) = (n-1)+ при всех p."""
    return DimensionType.make(m - 1, DecoratedValue(n - 1, Decoration.PLUS))


def check_map_range(n: int, m: int, *, min_n: int, max_m_gap: int) -> None:
    if n < min_n:
        raise DomainRangeError("n", n, f">= {min_n}")
    if not 2 <= m <= n - max_m_gap:
        raise DomainRangeError("m", m, f"2 <= m <= n-{max_m_gap} = {n - max_m_gap}")


def map_feasible(
    n: int,
    m: int,
    D1: DimensionType,
    D2: DimensionType,
    *,
    realizable_only: bool = False,
) -> WitnessCertificate:
    """
    (a) D <= D1 (+) D2 + 1
    (b) dim D1 = m
    (c) dim(D1 [+] (D2 + 1)) <= n-1
    """
    check_map_range(n, m, min_n=4, max_m_gap=2)
    _require_inputs(D1, D2, realizable_only)

    D = map_target_type(n, m)
    fibre_product_dim = dim(boxplus(D1, add_const(D2, 1)))
    checks = [
        _leq_check("D <= D1 (+) D2 + 1", D, union_bound(D1, D2)),
        _int_check("dim D1 = m", dim(D1), "=", m),
        _int_check("dim(D1 [+] (D2+1)) <= n-1", fibre_product_dim, "<=", n - 1),
    ]
    return WitnessCertificate(
        problem="map",
        n=n,
        m=m,
        d1=D1,
        d2=D2,
        bound=D,
        checks=checks,
        excess=n - int(fibre_product_dim) if is_finite(fibre_product_dim) else None,
    )


def paper_witness_decomposition(n: int) -> Tuple[DimensionType, DimensionType]:
    """D1(p) = 2-, D1(Q) = 1;  D2(p) = (n-4)+, D2(Q) = n-3."""
    if n < 5:
        raise DomainRangeError("n", n, ">= 5")
    D1 = DimensionType.make(1, DecoratedValue(2, Decoration.MINUS))
    D2 = DimensionType.make(n - 3, DecoratedValue(n - 4, Decoration.PLUS))
    return D1, D2


def paper_witness_map(n: int, m: int) -> Tuple[DimensionType, DimensionType, DimensionType]:
    """D(Q) = D1(Q) = m-1, D2(Q) = n-m-1;  D(p) = (n-1)+, D1(p) = m-, D2(p) = (n-m-2)+."""
    check_map_range(n, m, min_n=5, max_m_gap=3)
    D = map_target_type(n, m)
    D1 = DimensionType.make(m - 1, DecoratedValue(m, Decoration.MINUS))
    D2 = DimensionType.make(n - m - 1, DecoratedValue(n - m - 2, Decoration.PLUS))
    return D, D1, D2


def hurewicz_bound_checks(D1: DimensionType, D2: DimensionType) -> List[CheckRecord]:
    """Для отображения с d_f <= D1 и d_Y <= D2: d_X <= D1 (+) D2 (не хуже оценки Гуревича)."""
    bound = map_domain_bound(D1, D2)
    return [
        _leq_check("D1 [+] D2 <= D1 (+) D2", boxplus(D1, D2), bound),
        _int_check("dim(D1 (+) D2) <= dim D1 + dim D2", dim(bound), "<=", ext_add(dim(D1), dim(D2))),
    ]
