"""Hopf generator actions, quadratic normal ordering, mode brackets."""

from fractions import Fraction

import pytest

from bfcorr.fields import (
    HopfAction,
    act_hopf,
    heisenberg_field_A,
    mode_commutator,
    normal_ordered_quadratic,
    phi_A,
    phi_B,
    psi_A,
    twisted_heisenberg_field_B,
)
from bfcorr.fock import (
    VACUUM_A,
    VACUUM_B,
    FockVector,
    states_A,
    states_B,
    vacuum_component,
)

VAC_A = FockVector.basis(VACUUM_A)
VAC_B = FockVector.basis(VACUUM_B)


def test_hopf_action_canonical_form():
    assert HopfAction.word("TT") == HopfAction(1, 0, 0)
    # canonical order puts T leftmost, so the product D*T picks up a sign
    assert HopfAction.word("DT") == HopfAction(-1, 1, 1)
    assert HopfAction.word("TD") == HopfAction(1, 1, 1)
    assert HopfAction.word("DDT") == HopfAction(1, 1, 2)


def test_t_squared_is_identity_on_modes():
    for base in (phi_A(), psi_A(), phi_B()):
        tt = act_hopf("TT", base)
        basis = states_A(6) if base.space == "A" else states_B(6)
        for k in range(-5, 6):
            for s in basis[:10]:
                v = FockVector.basis(s)
                assert tt.coeff(k)(v) == base.coeff(k)(v)


def test_dt_anticommutes_with_td():
    for base in (phi_A(), phi_B()):
        dt = act_hopf("DT", base)
        td = act_hopf("TD", base)
        basis = states_A(6) if base.space == "A" else states_B(6)
        for k in range(-5, 6):
            for s in basis[:10]:
                v = FockVector.basis(s)
                assert dt.coeff(k)(v) + td.coeff(k)(v) == FockVector()


def test_derivative_mode_rule():
    # D phi at z^n is (n+1) phi_{n+1}
    dphi = act_hopf("D", phi_A())
    for n in range(-3, 4):
        got = dphi.coeff(n)(VAC_A)
        want = phi_A().coeff(n + 1)(VAC_A).scale(n + 1)
        assert got == want


def test_t_negates_odd_modes():
    tphi = act_hopf("T", phi_B())
    for n in range(0, 5):
        got = tphi.coeff(n)(VAC_B)
        assert got == phi_B().coeff(n)(VAC_B).scale((-1) ** n)


def test_convention_round_trip():
    f = phi_A()
    back = f.with_convention("standard").with_convention("positive")
    for n in range(-4, 5):
        assert back.mode(n)(VAC_A) == f.mode(n)(VAC_A)
    std = f.with_convention("standard")
    for n in range(-4, 5):
        assert std.mode(n)(VAC_A) == f.coeff(-n - 1)(VAC_A)


def test_field_property_window():
    # standard modes a_(n) vanish for n large on any fixed graded vector:
    # for phi_A, a_(n) = phi_{-n-1} needs a psi partner of index <= grade
    f = phi_A().with_convention("standard")
    for s in states_A(8):
        v = FockVector.basis(s)
        top = max(s.psis, default=-1)
        for n in range(top + 1, top + 6):
            assert f.mode(n)(v).is_zero()


def test_normal_ordering_kills_vacuum_pairing():
    # <0| :phi_j psi_k: |0> = 0 for every bidegree
    from bfcorr.fock import apply_mode_A

    for j in range(-5, 6):
        for k in range(-5, 6):
            raw = vacuum_component(apply_mode_A("phi", j, apply_mode_A("psi", k, VAC_A)))
            pair = Fraction(1) if (k >= 0 and j + k == -1) else Fraction(0)
            assert raw - pair == 0


def test_heisenberg_field_A_basic_brackets():
    h = heisenberg_field_A()
    assert mode_commutator(h, h, 1, -1, 8, Fraction(1)) == []
    assert mode_commutator(h, h, 2, -2, 8, Fraction(2)) == []
    assert mode_commutator(h, h, 2, -1, 8, Fraction(0)) == []
    assert mode_commutator(h, h, 1, -1, 8, Fraction(5)) != []


def test_heisenberg_annihilates_vacuum():
    h = heisenberg_field_A()
    for n in range(0, 5):
        assert h.mode(n)(VAC_A).is_zero()


def test_twisted_heisenberg_brackets():
    h = twisted_heisenberg_field_B()
    assert mode_commutator(h, h, 3, -3, 8, Fraction(3, 2)) == []
    assert mode_commutator(h, h, 1, -1, 8, Fraction(1, 2)) == []
    assert mode_commutator(h, h, 3, -1, 8, Fraction(0)) == []


def test_twisted_heisenberg_even_modes_vanish():
    h = twisted_heisenberg_field_B()
    for m in (-4, -2, 0, 2, 4):
        op = h.mode(m)
        for s in states_B(8):
            assert op(FockVector.basis(s)).is_zero()


def test_clifford_anticommutator_through_mode_commutator():
    # [phi_1, phi_-1]_+ = -2 on F_B (odd fields use the anticommutator)
    phi = phi_B()
    assert mode_commutator(phi, phi, 1, -1, 6, Fraction(-2)) == []
    assert mode_commutator(phi, phi, 2, -2, 6, Fraction(2)) == []


def test_quadratic_rejects_unsupported_pairs():
    with pytest.raises(ValueError):
        normal_ordered_quadratic(phi_A(), phi_B())
    with pytest.raises(ValueError):
        normal_ordered_quadratic(heisenberg_field_A(), phi_A())


def test_heisenberg_mode_grading():
    # h_{-1} raises energy2 by 2; h built from :phi psi: in standard form
    h = heisenberg_field_A()
    out = h.mode(-1)(VAC_A)
    from bfcorr.fock import energy2_A

    assert all(energy2_A(s) == 2 for s in out.terms)
