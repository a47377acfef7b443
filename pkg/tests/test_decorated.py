import itertools

import pytest

from bockstein.calculus.decorated import (
    INF,
    ZERO,
    Decoration,
    DecoratedValue,
    Ordering,
    box_add,
    compare,
    dual,
    shift,
    sign_product,
)
from bockstein.text.literals import parse_decorated, print_decorated
from tests.conftest import decorated_values

M, N, P = Decoration.MINUS, Decoration.NONE, Decoration.PLUS


def dv(v, dec=N):
    return DecoratedValue(v, dec)


def test_compare_examples():
    assert compare(dv(5, M), dv(5)) is Ordering.LESS
    assert compare(dv(5, P), dv(6, M)) is Ordering.LESS
    assert compare(dv(7), dv(INF)) is Ordering.LESS
    assert compare(dv(3, P), dv(3, P)) is Ordering.EQUAL
    assert compare(dv(4), dv(3, P)) is Ordering.GREATER


def test_order_is_n_minus_n_n_plus_chain():
    # 0 < 1- < 1 < 1+ < 2- < ... < 8+
    chain = decorated_values(8)
    for lo, hi in zip(chain, chain[1:]):
        assert lo < hi
    for a, b in itertools.product(chain, repeat=2):
        assert (a < b) == (chain.index(a) < chain.index(b))
        assert (a == b) == (chain.index(a) == chain.index(b))


def test_infinity_is_top():
    for a in decorated_values(8):
        assert a < dv(INF)


def test_sign_product_table():
    assert sign_product(P, M) is M
    assert sign_product(M, P) is M
    assert sign_product(N, P) is P
    assert sign_product(M, M) is M
    assert sign_product(P, P) is P
    for e in Decoration:
        assert sign_product(e, N) is e


def test_box_add_examples():
    assert box_add(dv(2, M), dv(1, P)) == dv(3, M)
    assert box_add(dv(3, P), dv(4, P)) == dv(7, P)
    for a in decorated_values(6):
        assert box_add(a, ZERO) == a
    assert box_add(dv(INF), dv(2)) == dv(INF)


def test_box_add_laws():
    values = decorated_values(6)
    for a, b in itertools.product(values, repeat=2):
        assert box_add(a, b) == box_add(b, a)
    for a, b, c in itertools.product(values, repeat=3):
        assert box_add(box_add(a, b), c) == box_add(a, box_add(b, c))


def test_box_add_is_monotone():
    values = decorated_values(6)
    pairs = [(a, a2) for a, a2 in itertools.product(values, repeat=2) if a <= a2]
    for (a, a2), (b, b2) in itertools.product(pairs, repeat=2):
        assert box_add(a, b) <= box_add(a2, b2)


def test_dual():
    assert dual(dv(5, P)) == dv(5, M)
    assert dual(dv(5)) == dv(5)
    assert dual(ZERO) == ZERO
    for a in decorated_values(6):
        assert dual(dual(a)) == a


def test_shift():
    assert shift(dv(2, M), 1) == dv(3, M)
    assert shift(dv(4, P), 0) == dv(4, P)
    assert shift(dv(INF), 5) == dv(INF)
    with pytest.raises(ValueError):
        shift(dv(1), -1)


def test_shift_is_monotone_and_commutes_with_dual():
    values = decorated_values(6) + [dv(INF)]
    shifts = range(0, 4)
    for a in values:
        for k in shifts:
            assert dual(shift(a, k)) == shift(dual(a), k)
    for a, a2 in itertools.product(values, repeat=2):
        if a > a2:
            continue
        for k, k2 in itertools.product(shifts, repeat=2):
            if k <= k2:
                assert shift(a, k) <= shift(a2, k2), (a, a2, k, k2)


def test_text_form_round_trip():
    for a in decorated_values(6) + [dv(INF), dv(40, P), dv(40, M)]:
        text = print_decorated(a)
        assert text == str(a)
        assert parse_decorated(text) == a


def test_violations():
    assert [r for r, _ in dv(0, M).violations()] == ["minus-floor"]
    assert [r for r, _ in dv(0, P).violations()] == ["plus-floor"]
    assert [r for r, _ in dv(INF, P).violations()] == ["infinite-undecorated"]
    assert [r for r, _ in dv(-1).violations()] == ["value-natural"]
    assert all(a.is_valid for a in decorated_values(6))


def test_text():
    assert str(dv(5, P)) == "5+"
    assert str(dv(2, M)) == "2-"
    assert str(dv(INF)) == "inf"
