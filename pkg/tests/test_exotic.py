import pytest

from bockstein.calculus.decorated import Decoration, DecoratedValue
from bockstein.calculus.dimtype import (
    ZERO_TYPE,
    DimensionType,
    DomainRangeError,
    FormalValidityError,
    boltyanskii_type,
    dim,
)
from bockstein.services.exotic import (
    decomposition_feasible,
    hurewicz_bound_checks,
    map_feasible,
    map_target_type,
    paper_witness_decomposition,
    paper_witness_map,
)


def T(q, value=None, dec=Decoration.NONE):
    return DimensionType.make(q, None if value is None else DecoratedValue(value, dec))


M, P = Decoration.MINUS, Decoration.PLUS


# --- decomposition

def test_decomposition_witness_n5_is_valid():
    cert = decomposition_feasible(5, T(1, 2, M), T(2, 1, P))
    assert cert.valid
    assert [c.passed for c in cert.checks] == [True, True]
    assert cert.checks[1].left == "3"
    assert cert.excess == 2
    assert cert.bound == boltyanskii_type(5)


def test_decomposition_product_too_big():
    cert = decomposition_feasible(5, T(1, 2, M), T(3, 2, P))
    assert not cert.valid
    assert cert.checks[0].passed
    assert not cert.checks[1].passed
    assert cert.checks[1].left == "4"


def test_decomposition_zero_types_fail_bound():
    cert = decomposition_feasible(2, ZERO_TYPE, ZERO_TYPE)
    assert not cert.valid
    assert not cert.checks[0].passed


def test_decomposition_rejects_bad_input():
    with pytest.raises(DomainRangeError):
        decomposition_feasible(1, ZERO_TYPE, ZERO_TYPE)
    with pytest.raises(FormalValidityError):
        decomposition_feasible(5, DimensionType(1, DecoratedValue(2)), ZERO_TYPE)
    # 1- даёт нулевое Z(p^inf)-значение
    with pytest.raises(DomainRangeError):
        decomposition_feasible(4, T(1, 1, M), T(1, 1, P), realizable_only=True)


def test_decomposition_formal_near_witness_at_n4():
    cert = decomposition_feasible(4, T(1, 1, M), T(1, 1, P))
    assert cert.valid


# --- maps

def test_map_witness_n5_m2_is_valid():
    cert = map_feasible(5, 2, T(1, 2, M), T(2, 1, P))
    assert cert.valid
    assert cert.bound == T(1, 4, P)
    assert cert.excess == 1


def test_map_witness_n6_m2():
    cert = map_feasible(6, 2, T(1, 2, M), T(3, 2, P))
    assert cert.valid
    assert cert.checks[2].left == "5"


def test_map_regular_fibre_fails_product_check():
    # проверка (a) проходит, ломается оценка произведения
    cert = map_feasible(5, 2, T(2), T(2, 1, P))
    assert not cert.valid
    assert [c.passed for c in cert.checks] == [True, True, False]
    assert cert.checks[2].left == "5"


def test_map_formal_witness_at_n4():
    cert = map_feasible(4, 2, T(2, 1, M), T(0, 1, P))
    assert cert.valid


def test_map_range_errors():
    with pytest.raises(DomainRangeError):
        map_feasible(3, 2, T(1, 2, M), T(2, 1, P))
    with pytest.raises(DomainRangeError):
        map_feasible(5, 4, T(1, 2, M), T(2, 1, P))
    with pytest.raises(DomainRangeError):
        map_feasible(5, 1, T(1, 2, M), T(2, 1, P))


def test_map_target_type():
    assert map_target_type(7, 3) == T(2, 6, P)


# --- witness families

def test_witness_decomposition_family():
    assert paper_witness_decomposition(5) == (T(1, 2, M), T(2, 1, P))
    assert paper_witness_decomposition(6) == (T(1, 2, M), T(3, 2, P))
    with pytest.raises(DomainRangeError):
        paper_witness_decomposition(4)
    for n in range(5, 21):
        D1, D2 = paper_witness_decomposition(n)
        cert = decomposition_feasible(n, D1, D2, realizable_only=True)
        assert cert.valid and cert.excess == 2


def test_witness_map_family():
    assert paper_witness_map(5, 2) == (T(1, 4, P), T(1, 2, M), T(2, 1, P))
    assert paper_witness_map(7, 3) == (T(2, 6, P), T(2, 3, M), T(3, 2, P))
    with pytest.raises(DomainRangeError):
        paper_witness_map(5, 3)
    with pytest.raises(DomainRangeError):
        paper_witness_map(4, 2)
    for n in range(5, 16):
        for m in range(2, n - 2):
            _, D1, D2 = paper_witness_map(n, m)
            assert dim(D1) == m
            cert = map_feasible(n, m, D1, D2, realizable_only=True)
            assert cert.valid and cert.excess == 1


def test_hurewicz_bound_checks():
    for n in range(5, 10):
        D1, D2 = paper_witness_decomposition(n)
        assert all(c.passed for c in hurewicz_bound_checks(D1, D2))
