"""Clifford mode actions on the fermionic Fock spaces and characters."""

import random
from fractions import Fraction

import pytest

from bfcorr.fock import (
    VACUUM_A,
    VACUUM_B,
    FermionStateA,
    FermionStateB,
    FockVector,
    apply_mode_A,
    apply_mode_B,
    character_A,
    character_B,
    degree_B,
    energy2_A,
    state_text,
    states_A,
    states_B,
    vacuum_component,
)
from bfcorr.partitions import odd_partition_count, partition_count

VAC_A = FockVector.basis(VACUUM_A)
VAC_B = FockVector.basis(VACUUM_B)


def test_creation_on_vacuum():
    got = apply_mode_A("phi", 2, VAC_A)
    assert got == FockVector.basis(FermionStateA((2,), ()))


def test_contraction_one_step():
    # phi_{-1} psi_0 |0> = |0> by the pairing delta_{m+n,-1}
    got = apply_mode_A("phi", -1, apply_mode_A("psi", 0, VAC_A))
    assert got == VAC_A


def test_negative_modes_annihilate_vacuum():
    assert apply_mode_A("psi", -3, VAC_A).is_zero()
    assert apply_mode_A("phi", -1, VAC_A).is_zero()
    assert apply_mode_B(-5, VAC_B).is_zero()


def test_phi0_squares_to_one_type_B():
    assert apply_mode_B(0, apply_mode_B(0, VAC_B)) == VAC_B


def test_type_B_contraction_sign():
    got = apply_mode_B(-1, apply_mode_B(1, VAC_B))
    assert got == VAC_B.scale(-2)


def test_vacuum_component_reads_coefficient():
    v = VAC_A.scale(3) + apply_mode_A("phi", 2, VAC_A)
    assert vacuum_component(v) == 3
    assert vacuum_component(apply_mode_A("phi", -1, apply_mode_A("psi", 0, VAC_A))) == 1
    assert vacuum_component(apply_mode_B(0, apply_mode_B(0, VAC_B))) == 1
    assert vacuum_component(FockVector()) == 0


def _anticommutator_A(kind1, m, kind2, n, v):
    return apply_mode_A(kind1, m, apply_mode_A(kind2, n, v)) + apply_mode_A(
        kind2, n, apply_mode_A(kind1, m, v))


def test_clifford_relations_type_A():
    basis = states_A(12)
    for m in range(-4, 5):
        for n in range(-4, 5):
            expected = Fraction(1) if m + n == -1 else Fraction(0)
            for s in random.Random(m * 100 + n).sample(basis, 12):
                v = FockVector.basis(s)
                assert _anticommutator_A("phi", m, "psi", n, v) == v.scale(expected)
                assert _anticommutator_A("phi", m, "phi", n, v).is_zero()
                assert _anticommutator_A("psi", m, "psi", n, v).is_zero()


def test_clifford_relations_type_B():
    for m in range(-4, 5):
        for n in range(-4, 5):
            expected = 2 * (-1) ** m if m + n == 0 else 0
            for s in states_B(8):
                v = FockVector.basis(s)
                got = apply_mode_B(m, apply_mode_B(n, v)) + apply_mode_B(n, apply_mode_B(m, v))
                assert got == v.scale(expected)


def test_mode_application_is_degree_homogeneous():
    for s in states_B(8):
        d = degree_B(s)
        for n in range(-4, 5):
            out = apply_mode_B(n, FockVector.basis(s))
            for s2 in out.terms:
                assert degree_B(s2) == d + n


def test_reduction_is_confluent_under_adjacent_swaps():
    # x_m x_n = [x_m, x_n]_+ - x_n x_m: applying a random word directly
    # must agree with applying it with one adjacent pair swapped plus the
    # anticommutator correction term
    rng = random.Random(4242)
    for _ in range(60):
        word = [rng.choice(["phi", "psi"]) for _ in range(rng.randint(2, 5))]
        modes = [rng.randint(-3, 3) for _ in word]
        i = rng.randrange(len(word) - 1)
        start = rng.choice(states_A(6))
        v = FockVector.basis(start)

        def run(wd, ms, vec):
            for kind, m in zip(reversed(wd), reversed(ms)):
                vec = apply_mode_A(kind, m, vec)
            return vec

        direct = run(word, modes, v)
        swapped_word = list(word)
        swapped_modes = list(modes)
        swapped_word[i], swapped_word[i + 1] = swapped_word[i + 1], swapped_word[i]
        swapped_modes[i], swapped_modes[i + 1] = swapped_modes[i + 1], swapped_modes[i]
        swapped = run(swapped_word, swapped_modes, v).scale(-1)
        pair = {word[i], word[i + 1]}
        if pair == {"phi", "psi"} and modes[i] + modes[i + 1] == -1:
            swapped = swapped + run(word[:i] + word[i + 2:], modes[:i] + modes[i + 2:], v)
        assert direct == swapped


def test_character_A_charge_zero_counts_partitions():
    table = dict(character_A(0, 10))
    assert [table.get(2 * d, 0) for d in range(6)] == [1, 1, 2, 3, 5, 7]
    assert [table.get(2 * d, 0) for d in range(6)] == [partition_count(d) for d in range(6)]


def test_character_A_charge_one_ground_state():
    assert character_A(1, 1) == [(1, 1)]


def test_character_B_degrees():
    assert character_B(5) == [(0, 2), (1, 2), (2, 2), (3, 4), (4, 4), (5, 6)]
    table = dict(character_B(12))
    for d in range(13):
        assert table[d] == 2 * odd_partition_count(d)


def test_character_B_degree_three_listing():
    got = sorted(s.indices for s in states_B(3) if degree_B(s) == 3)
    assert got == [(2, 1), (2, 1, 0), (3,), (3, 0)]


def test_state_text():
    assert state_text(FermionStateA((4, 1), (2,))) == "phi[4,1] psi[2] |0>"
    assert state_text(FermionStateB((3, 0))) == "phi[3,0] |0>"
    assert state_text(VACUUM_A) == "|0>"


def test_energy_grading():
    assert energy2_A(FermionStateA((2, 0), (1,))) == 5 + 1 + 3
