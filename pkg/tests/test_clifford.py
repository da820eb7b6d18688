import pytest
from hypothesis import given, strategies as st

from uqdirac.clifford import (CliffordElement, alpha, alpha_h, alpha_k, c_e, c_f, cl_commutator,
                              s_minus, s_plus, spin_act)
from uqdirac.scalars import GENERIC
from uqdirac.uq import UqKElement, casimir_k

from conftest import ALL_MODES
from strategies import modes, scalars

q = GENERIC.q


def test_basic_relations():
    e, f = c_e(), c_f()
    assert e * e == 0 and f * f == 0
    assert e * f + f * e == 1
    ef = e * f
    assert ef * ef == ef
    assert ef * e == e and f * ef == f
    assert str(f * e) == "(1) + (-1)*cEcF"


@pytest.mark.parametrize("mode", ALL_MODES, ids=lambda m: m.tag)
def test_alpha_conjugation(mode):
    a, ainv = alpha_k(mode), alpha_k(mode, -1)
    qq = mode.q
    assert a * ainv == 1
    assert a * c_e(mode) * ainv == c_e(mode) * (qq * qq)
    assert a * c_f(mode) * ainv == c_f(mode) / (qq * qq)


def test_alpha_h_brackets():
    h = alpha_h()
    assert cl_commutator(h, c_e()) == c_e() * 2
    assert cl_commutator(h, c_f()) == c_f() * -2


def test_alpha_is_multiplicative_on_k_powers():
    for j in range(-3, 4):
        x = UqKElement({j: 1}, GENERIC)
        assert alpha(x) == alpha_k(GENERIC, 1) ** j if j >= 0 else alpha(x) == alpha_k(GENERIC, -1) ** -j


def test_alpha_of_k_casimir():
    # alpha(K) has eigenvalues q^-1 and q on the spin module
    value = alpha(casimir_k())
    assert spin_act(value, s_minus()) == s_minus() * casimir_k().evaluate(1 / q)
    assert spin_act(value, s_plus()) == s_plus() * casimir_k().evaluate(q)


def test_spin_module():
    assert spin_act(c_e(), s_minus()) == s_plus()
    assert spin_act(c_f(), s_plus()) == s_minus()
    assert spin_act(c_e(), s_plus()) == s_minus() * 0
    assert spin_act(alpha_k(), s_minus()) == s_minus() * (1 / q)
    assert spin_act(alpha_k(), s_plus()) == s_plus() * q


@st.composite
def clifford_elements(draw, mode):
    return CliffordElement(tuple(draw(scalars(mode, max_len=2)) for _ in range(4)), mode)


@given(st.data())
def test_clifford_associativity_and_spin_action(data):
    mode = data.draw(modes)
    x, y, z = (data.draw(clifford_elements(mode)) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    for v in (s_minus(mode), s_plus(mode)):
        assert spin_act(x * y, v) == spin_act(x, spin_act(y, v))


@given(st.data())
def test_conjugation_relations_random_powers(data):
    mode = data.draw(modes)
    j = data.draw(st.integers(-4, 4))
    a, ainv = alpha_k(mode, j), alpha_k(mode, -j)
    assert a * ainv == 1
    assert a * c_e(mode) * ainv == c_e(mode) * mode.q_power(2 * j)
    assert a * c_f(mode) * ainv == c_f(mode) * mode.q_power(-2 * j)
