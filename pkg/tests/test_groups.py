import itertools

import pytest
from hypothesis import given, settings

from bockstein.calculus.abelian import AtomKind, GroupAtom
from bockstein.calculus.decorated import Decoration, DecoratedValue
from bockstein.calculus.dimtype import (
    DimensionType,
    GroupKind,
    Q,
    ZLocalized,
    Zp,
    ZpInfinity,
    boltyanskii_type,
    dim,
    evaluate,
    evaluate_slot,
)
from bockstein.services.groups import SigmaSet, dim_g, localized_primes, sigma
from bockstein.text.group_syntax import basis_group_as_expr, parse_basis_group, parse_group, print_group
from bockstein.text.literals import LiteralSyntaxError
from tests.conftest import dimension_types, uniform_types


def S(text):
    return sigma(parse_group(text))


# --- parse / print

def test_parse_group_examples():
    assert parse_group("Z").atoms == (GroupAtom(AtomKind.Z),)
    G = parse_group("Z/2^2 + Z/3")
    assert set(G.atoms) == {GroupAtom(AtomKind.ZMOD_PK, 2, 2), GroupAtom(AtomKind.ZMOD_PK, 3, 1)}
    assert parse_group("0").is_zero
    assert parse_group("Z(2inf) + Z_(3) + Z[1/5]").atoms == parse_group("Z[1/5] + Z_(3) + Z(2inf)").atoms


@pytest.mark.parametrize("text", ["Z", "Z/2^2 + Z/3", "Q + Z(2inf)", "Z_(7) + Z[1/2] + Z/5", "0"])
def test_print_parse_round_trip(text):
    G = parse_group(text)
    assert parse_group(print_group(G)) == G


def test_parse_group_errors():
    with pytest.raises(LiteralSyntaxError) as exc:
        parse_group("Z/6^1")
    assert "6 is not prime" in str(exc.value)
    with pytest.raises(LiteralSyntaxError):
        parse_group("Z Q")
    with pytest.raises(LiteralSyntaxError):
        parse_group("Z + W")
    with pytest.raises(LiteralSyntaxError):
        parse_group("")
    with pytest.raises(LiteralSyntaxError) as exc:
        parse_group("Z(٣inf)")
    assert exc.value.token == "(٣inf)"


def test_parse_group_keeps_positions_of_the_input():
    with pytest.raises(LiteralSyntaxError) as exc:
        parse_group("Z +\tQ  +  W")
    assert exc.value.position == 10
    assert exc.value.token == "W"
    assert parse_group("Z +\tQ") == parse_group("Z + Q")


def test_parse_basis_group():
    assert parse_basis_group("Q") == Q
    assert parse_basis_group("Z/3") == Zp(3)
    assert parse_basis_group("Z(5inf)") == ZpInfinity(5)
    assert parse_basis_group("Z_(2)") == ZLocalized(2)
    with pytest.raises(LiteralSyntaxError):
        parse_basis_group("Z")
    with pytest.raises(LiteralSyntaxError):
        parse_basis_group("Z/2^2")


# --- sigma

def test_sigma_of_integers_is_cofinite_family():
    s = S("Z")
    assert not s.members
    assert s.cofinite_localized and not s.excluded
    assert ZLocalized(2) in s and ZLocalized(101) in s
    assert str(s) == "Z_(p) for all p"


def test_sigma_basis_groups():
    assert S("Q").members == frozenset({Q})
    assert S("Z/2").members == frozenset({Zp(2)})
    assert S("Z/3^4").members == frozenset({Zp(3)})
    assert S("Z(2inf)").members == frozenset({ZpInfinity(2)})
    assert S("Z_(3)").members == frozenset({ZLocalized(3)})
    assert not S("Z_(3)").cofinite_localized


def test_sigma_examples():
    assert S("Z/2^2 + Z/3").members == frozenset({Zp(2), Zp(3)})
    assert S("Q + Z(2inf)").members == frozenset({Q, ZpInfinity(2)})
    # p-кручение не только из Z(p^inf) -> Z/p
    assert S("Z(2inf) + Z/2").members == frozenset({Zp(2)})


def test_sigma_inverted_prime():
    s = S("Z[1/2]")
    assert s.cofinite_localized and s.excluded == frozenset({2})
    assert ZLocalized(2) not in s and ZLocalized(3) in s
    assert Q not in s
    assert str(s) == "Z_(p) for all p not in {2}"


def test_sigma_q_needs_all_torsion_free_divisible():
    assert Q not in S("Q + Z")
    assert Q not in S("Q + Z_(5)")
    assert Q in S("Q + Q + Z/2")


def test_sigma_zero_group():
    assert S("0").is_empty
    assert str(S("0")) == "(empty)"


def test_localized_primes():
    lp = localized_primes(parse_group("Z_(3) + Z_(5)"))
    assert not lp.cofinite and lp.primes == frozenset({3, 5})
    assert localized_primes(parse_group("Z[1/2] + Z_(2)")).describe() == "all primes"


# --- dim_G

def test_dim_g_examples():
    B5 = boltyanskii_type(5)
    assert dim_g(B5, parse_group("Z")).value == 5
    D1 = DimensionType.make(1, DecoratedValue(2, Decoration.MINUS))
    assert dim_g(D1, parse_group("Z/2^2 + Z/3")).value == 2
    for n in range(2, 9):
        assert dim_g(boltyanskii_type(n), parse_group("Q")).value == n - 1


def test_dim_g_cofinite_family_sees_exceptions():
    D = DimensionType.make(2, DecoratedValue(2), {3: DecoratedValue(3, Decoration.PLUS)})
    assert dim_g(D, parse_group("Z")).value == 4
    # 3 исключено семейством Z[1/3]
    assert dim_g(D, parse_group("Z[1/3]")).value == 2


def test_dim_g_of_zero_group_is_degenerate():
    res = dim_g(boltyanskii_type(5), parse_group("0"))
    assert res.value == 0 and res.degenerate


# --- инварианты по атомам над {2, 3}

SMALL_PRIMES = (2, 3)
ATOMS = [parse_group("Z"), parse_group("Q")] + [
    parse_group(t.format(p=p))
    for p in SMALL_PRIMES
    for t in ("Z/{p}", "Z/{p}^2", "Z({p}inf)", "Z_({p})", "Z[1/{p}]")
]
BASIS = [Q] + [H for p in SMALL_PRIMES for H in (Zp(p), ZpInfinity(p), ZLocalized(p))]
TYPES = uniform_types(6)


def _attained_at_localized(D):
    n = dim(D)
    if evaluate_slot(D, GroupKind.Z_LOCALIZED) == n:
        return True
    return any(evaluate(D, ZLocalized(p)) == n for p in D.exception_primes)


def _check_dim_g_bounds(D):
    n = dim(D)
    for G in ATOMS:
        assert dim_g(D, G).value <= n, (D, G)
    if _attained_at_localized(D):
        assert dim_g(D, parse_group("Z")).value == n, D


def test_dim_g_bounded_by_dim():
    for D in TYPES:
        _check_dim_g_bounds(D)


@settings(max_examples=300, deadline=None)
@given(dimension_types(primes=SMALL_PRIMES))
def test_dim_g_bounded_by_dim_with_exceptions(D):
    _check_dim_g_bounds(D)


def test_basis_member_is_its_own_sigma():
    for H in BASIS:
        G = basis_group_as_expr(H)
        assert sigma(G) == SigmaSet(members=frozenset({H}))
        assert parse_basis_group(print_group(G)) == H
        for D in TYPES:
            assert dim_g(D, G).value == evaluate(D, H), (D, H)


def test_sigma_of_direct_sum_uses_all_summands():
    for G1, G2 in itertools.product(ATOMS + [parse_group("0")], repeat=2):
        G = G1.direct_sum(G2)
        assert G == G2.direct_sum(G1)
        assert G == parse_group(f"{G1} + {G2}")
        assert sigma(G.direct_sum(G)) == sigma(G)
    # Z(2inf) + Z/2: смешанное 2-кручение даёт Z/2, а не Z(2inf)
    mixed = parse_group("Z(2inf)").direct_sum(parse_group("Z/2"))
    assert sigma(mixed) == SigmaSet(members=frozenset({Zp(2)}))
    # Q + Z: Q пропадает, семейство Z_(p) остаётся
    assert sigma(parse_group("Q").direct_sum(parse_group("Z"))) == SigmaSet(cofinite_localized=True)
