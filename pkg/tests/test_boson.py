"""Heisenberg module actions and truncated vertex operators."""

from fractions import Fraction

import pytest

from bfcorr.boson import (
    BOSON_VACUUM_A,
    BOSON_VACUUM_B,
    BosonStateA,
    BosonStateB,
    boson_state_text,
    energy2_boson_A,
    heis_apply_A,
    heis_apply_B,
    vertex_A,
    vertex_B,
)
from bfcorr.fock import FockVector

ONE_A = FockVector.basis(BOSON_VACUUM_A)
ONE_B = FockVector.basis(BOSON_VACUUM_B)


def test_commutator_on_highest_weight_vector():
    assert heis_apply_A(1, heis_apply_A(-1, ONE_A)) == ONE_A


def test_derivative_kills_missing_variable():
    x1 = heis_apply_A(-1, ONE_A)
    assert heis_apply_A(2, x1).is_zero()


def test_multiplication_convention():
    got = heis_apply_A(-3, ONE_A)
    assert got == FockVector.basis(BosonStateA(0, ((3, 1),))).scale(3)


def test_h0_not_represented():
    with pytest.raises(ValueError):
        heis_apply_A(0, ONE_A)
    with pytest.raises(ValueError):
        heis_apply_B(2, ONE_B)


def test_twisted_commutator_half():
    got = heis_apply_B(1, heis_apply_B(-1, ONE_B))
    assert got == ONE_B.scale(Fraction(1, 2))


def test_twisted_multiplication_convention():
    assert heis_apply_B(-3, ONE_B) == FockVector.basis(
        BosonStateB(0, ((3, 1),))).scale(Fraction(3, 2))
    assert heis_apply_B(5, heis_apply_B(-3, ONE_B)).is_zero()


def _monomials(max_weight, odd=False):
    out = [()]
    step = 2 if odd else 1
    start = 1
    def rec(prefix, rest, minvar):
        for v in range(minvar, rest + 1, step):
            for e in range(1, rest // v + 1):
                m = prefix + ((v, e),)
                out.append(m)
                rec(m, rest - v * e, v + step)
    rec((), max_weight, start)
    return out


def test_heisenberg_relations_on_monomials():
    # [h_m, h_n] = m delta_{m+n,0} exactly, energy2 <= 12
    states = [BosonStateA(0, m) for m in _monomials(6)]
    for m in range(-5, 6):
        for n in range(-5, 6):
            if m == 0 or n == 0:
                continue
            expected = Fraction(m) if m + n == 0 else Fraction(0)
            for s in states:
                if energy2_boson_A(s) > 12:
                    continue
                v = FockVector.basis(s)
                got = heis_apply_A(m, heis_apply_A(n, v)) - heis_apply_A(n, heis_apply_A(m, v))
                assert got == v.scale(expected)


def test_twisted_heisenberg_relations_on_monomials():
    states = [BosonStateB(0, m) for m in _monomials(7, odd=True)]
    for m in range(-7, 8, 2):
        for n in range(-7, 8, 2):
            expected = Fraction(m, 2) if m + n == 0 else Fraction(0)
            for s in states:
                v = FockVector.basis(s)
                got = heis_apply_B(m, heis_apply_B(n, v)) - heis_apply_B(n, heis_apply_B(m, v))
                assert got == v.scale(expected)


def test_positive_modes_annihilate_highest_weight_states():
    for n in range(1, 6):
        assert heis_apply_A(n, FockVector.basis(BosonStateA(3, ()))).is_zero()
    for n in range(1, 6, 2):
        assert heis_apply_B(n, FockVector.basis(BosonStateB(1, ()))).is_zero()


# -- vertex operators ---------------------------------------------------------


def test_vertex_A_lowest_coefficients():
    # exp(sum x_n z^n) on the shifted vacuum: z^0 -> e^a, z^1 -> x1 e^a
    out = vertex_A(1, ONE_A, 5)
    assert out[0] == FockVector.basis(BosonStateA(1, ()))
    assert out[1] == FockVector.basis(BosonStateA(1, ((1, 1),)))
    # z^2 -> (x1^2/2 + x2) e^a from the exponential expansion
    assert out[2] == (FockVector.basis(BosonStateA(1, ((1, 2),))).scale(Fraction(1, 2))
                      + FockVector.basis(BosonStateA(1, ((2, 1),))))


def test_vertex_A_charge_factor():
    # on a charge-k state the z^{d_alpha} factor shifts exponents by k
    ek = FockVector.basis(BosonStateA(2, ()))
    out = vertex_A(1, ek, 5)
    assert min(out) == 2 and out[2] == FockVector.basis(BosonStateA(3, ()))


def test_vertex_B_lowest_coefficients():
    # derived by expanding exp(sum_k h_{-2k-1} z^{2k+1}/(k+1/2)): the z^1
    # coefficient is x1 e^a with the (n/2) x_n convention
    out = vertex_B(1, ONE_B, 5)
    assert out[0] == FockVector.basis(BosonStateB(1, ()))
    assert out[1] == FockVector.basis(BosonStateB(1, ((1, 1),)))
    assert out[2] == FockVector.basis(BosonStateB(1, ((1, 2),))).scale(Fraction(1, 2))
    assert out[3] == (FockVector.basis(BosonStateB(1, ((1, 3),))).scale(Fraction(1, 6))
                      + FockVector.basis(BosonStateB(1, ((3, 1),))))


def test_vertex_B_parity_flip():
    out = vertex_B(1, ONE_B, 4)
    assert all(s.parity == 1 for fv in out.values() for s in fv.terms)
    again = {k: vertex_B(1, fv, 4) for k, fv in out.items()}
    assert all(s.parity == 0 for d in again.values() for fv in d.values() for s in fv.terms)


def test_vertex_B_argument_sign_is_z_negation():
    plus = vertex_B(1, ONE_B, 6)
    minus = vertex_B(-1, ONE_B, 6)
    assert set(plus) == set(minus)
    for k, fv in plus.items():
        assert minus[k] == fv.scale((-1) ** k)


@pytest.mark.parametrize("sign", [1, -1])
def test_vertex_truncation_commutes(sign):
    x3 = heis_apply_A(-3, ONE_A)
    full = vertex_A(sign, x3, 7)
    small = vertex_A(sign, x3, 3)
    assert small == {k: fv for k, fv in full.items() if -3 <= k <= 3}
    fullb = vertex_B(sign, heis_apply_B(-3, ONE_B), 7)
    smallb = vertex_B(sign, heis_apply_B(-3, ONE_B), 3)
    assert smallb == {k: fv for k, fv in fullb.items() if -3 <= k <= 3}


def test_vertex_annihilation_part():
    # e^{-alpha}(z) on x1 e^{alpha}: z^{-d_alpha} gives z^{-1}, and the
    # annihilation exponential +h_1 z^{-1} turns x1 into 1, so the vacuum
    # appears at z^{-2} with coefficient +1
    x1_ea = FockVector.basis(BosonStateA(1, ((1, 1),)))
    out = vertex_A(-1, x1_ea, 4)
    assert out[-2].coefficient(BOSON_VACUUM_A) == Fraction(1)
    # with no lowering the whole creation exponential rides on top:
    # z^0 needs raising weight 2 on x1 (giving x1^2/2 + x2 with sign -1 each
    # power) minus the j=1 path after lowering; frozen from the expansion
    assert out[0] == (
        FockVector.basis(BosonStateA(0, ((1, 2),))).scale(Fraction(-1, 2))
        + FockVector.basis(BosonStateA(0, ((2, 1),))).scale(-1)
    )


def test_boson_state_text():
    assert boson_state_text(BosonStateA(2, ((1, 3), (5, 1)))) == "e^2a * x1^3 x5^1"
    assert boson_state_text(BosonStateB(1, ())) == "e^1a"
