"""Unit tests for exact arithmetic in E = Q(sqrt(-3)) and L = Q(zeta_9)."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ramanujan_bigraphs.numberfield import (
    CubicExtElem,
    CycloElem,
    QuadElem,
    ZETA3_E,
    cubic_norm,
    cubic_rho,
    cubic_trace,
    embed_E_in_L,
    galois_rho,
    galois_tau,
    hensel_sqrt_minus3,
    is_in_E,
    is_prime,
    local_norm_obstruction,
    norm_L_over_E,
    norm_trace_L_over_E,
    project_to_E,
    quad_from_sqrt3_basis,
    splitting_data,
    trace_L_over_E,
)

small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=5
)


def random_cyclo(rng, span=4):
    return CycloElem([Fraction(rng.randrange(-span, span + 1),
                               rng.randrange(1, 4)) for _ in range(6)])


# ---------------------------------------------------------------------------
# Field arithmetic
# ---------------------------------------------------------------------------

def test_zeta9_reduction():
    z = CycloElem.zeta9(1)
    assert z * CycloElem.zeta9(5) == -CycloElem.zeta9(3) - CycloElem([1])


def test_inverse_roundtrip():
    x = CycloElem([3, 2])   # 3 + 2 zeta_9
    assert x * x.inverse() == CycloElem([1])


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        CycloElem([]).inverse()


def test_example_product_in_E():
    a = quad_from_sqrt3_basis(2, 1)
    b = quad_from_sqrt3_basis(2, -1)
    assert a * b == QuadElem(7)


@given(small_fractions, small_fractions, small_fractions, small_fractions)
def test_quad_field_axioms(x1, y1, x2, y2):
    a, b = QuadElem(x1, y1), QuadElem(x2, y2)
    assert a * b == b * a
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a * b).norm() == a.norm() * b.norm()
    if a:
        assert a * a.inverse() == QuadElem(1)


# ---------------------------------------------------------------------------
# Galois actions
# ---------------------------------------------------------------------------

def test_rho_tau_on_generators():
    z = CycloElem.zeta9(1)
    assert galois_rho(z) == CycloElem.zeta9(4)
    assert galois_tau(z) == CycloElem.zeta9(8)
    sqrt_m3 = embed_E_in_L(quad_from_sqrt3_basis(0, 1))
    assert galois_tau(sqrt_m3) == -sqrt_m3
    assert galois_rho(sqrt_m3) == sqrt_m3


def test_action_orders_and_commutation():
    rng = random.Random(1)
    for _ in range(100):
        x = random_cyclo(rng)
        assert galois_rho(galois_rho(galois_rho(x))) == x
        assert galois_tau(galois_tau(x)) == x
        assert galois_tau(galois_rho(x)) == galois_rho(galois_tau(x))


def test_rho_fixes_E():
    rng = random.Random(2)
    for _ in range(50):
        e = QuadElem(Fraction(rng.randrange(-9, 10)), Fraction(rng.randrange(-9, 10)))
        le = embed_E_in_L(e)
        assert galois_rho(le) == le
        assert project_to_E(le) == e


# ---------------------------------------------------------------------------
# Relative norm and trace
# ---------------------------------------------------------------------------

def test_norm_trace_values():
    one = CycloElem([1])
    n, t = norm_trace_L_over_E(one)
    assert n == QuadElem(1) and t == QuadElem(3)
    assert embed_E_in_L(norm_L_over_E(CycloElem.zeta9(1))) == CycloElem.zeta9(3)


def test_norm_lands_in_E_and_multiplicative():
    rng = random.Random(3)
    for _ in range(50):
        x, y = random_cyclo(rng), random_cyclo(rng)
        assert is_in_E(embed_E_in_L(norm_L_over_E(x)))
        assert norm_L_over_E(x * y) == norm_L_over_E(x) * norm_L_over_E(y)
        assert trace_L_over_E(x + y) == trace_L_over_E(x) + trace_L_over_E(y)


# ---------------------------------------------------------------------------
# Cubic extension E(theta)
# ---------------------------------------------------------------------------

def test_cubic_reduction_and_norm():
    b = QuadElem(2) * ZETA3_E
    theta = CubicExtElem(QuadElem(0), QuadElem(1), QuadElem(0), b=b)
    assert theta * theta * theta == CubicExtElem.scalar(b, b)
    assert cubic_norm(theta) == b
    assert cubic_trace(theta) == QuadElem(0)
    assert cubic_rho(cubic_rho(cubic_rho(theta))) == theta


# ---------------------------------------------------------------------------
# Splitting and the local obstruction
# ---------------------------------------------------------------------------

def test_splitting_examples():
    assert splitting_data(3) == ("ramified", None)
    assert splitting_data(7) == ("split", 3)
    assert splitting_data(5) == ("inert", 6)
    with pytest.raises(ValueError):
        splitting_data(6)


def test_hensel_lift():
    for p in (7, 13, 19):
        for prec in (2, 5, 8):
            r = hensel_sqrt_minus3(p, prec)
            assert (r * r + 3) % p ** prec == 0


def test_obstruction_example():
    a = quad_from_sqrt3_basis(2, 1) / quad_from_sqrt3_basis(2, -1)
    rep = local_norm_obstruction(a, 7)
    assert set(rep.valuations) == {1, -1}
    assert rep.valuations_mod_3 == frozenset({1, 2})
    assert rep.obstructed
    rep2 = local_norm_obstruction(a * a, 7)
    assert set(rep2.valuations) == {2, -2}
    assert rep2.valuations_mod_3 == frozenset({1, 2})
    assert rep2.obstructed
    assert not local_norm_obstruction(QuadElem(1), 7).obstructed


def test_obstruction_inapplicable_prime():
    with pytest.raises(ValueError):
        local_norm_obstruction(QuadElem(1), 5)   # inert, not split


def test_is_prime():
    assert [p for p in range(2, 30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
