"""Fermionic Fock spaces for the type A and type B Clifford algebras.

Basis vectors are canonical Clifford monomials applied to the vacuum:
type A states are phi_{m_1}..phi_{m_k} psi_{n_1}..psi_{n_l} |0> with each
index list strictly decreasing (all phi's first, then all psi's); type B
states are phi_{n_1}..phi_{n_k}|0> with strictly decreasing indices >= 0.
Negative-index modes annihilate the vacuum.  Mode application
re-canonicalizes exactly via the Clifford relations

    [phi_m, psi_n]+ = delta_{m+n,-1}     (type A)
    [phi_m, phi_n]+ = 2(-1)^m delta_{m,-n}   (type B)
"""

from __future__ import annotations

from typing import Dict, Iterable, List, NamedTuple, Tuple

from .poly import Rat


class FermionStateA(NamedTuple):
    phis: Tuple[int, ...]
    psis: Tuple[int, ...]


class FermionStateB(NamedTuple):
    indices: Tuple[int, ...]


VACUUM_A = FermionStateA((), ())
VACUUM_B = FermionStateB(())


def charge_A(s: FermionStateA) -> int:
    return len(s.phis) - len(s.psis)


def energy2_A(s: FermionStateA) -> int:
    """Doubled energy: deg phi_n = deg psi_n = n + 1/2."""
    return sum(2 * m + 1 for m in s.phis) + sum(2 * n + 1 for n in s.psis)


def degree_B(s: FermionStateB) -> int:
    return sum(s.indices)


class FockVector:
    """Sparse linear combination of basis states with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: Dict = {}
        if terms:
            for s, c in (terms.items() if isinstance(terms, dict) else terms):
                c = Rat(c)
                if c:
                    self.terms[s] = self.terms.get(s, Rat(0)) + c
                    if not self.terms[s]:
                        del self.terms[s]

    @classmethod
    def basis(cls, state, coeff=1) -> "FockVector":
        return cls({state: Rat(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for s, c in other.terms.items():
            v = out.get(s, Rat(0)) + c
            if v:
                out[s] = v
            else:
                out.pop(s, None)
        v = FockVector()
        v.terms = out
        return v

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, c) -> "FockVector":
        c = Rat(c)
        v = FockVector()
        if c:
            v.terms = {s: c * x for s, x in self.terms.items()}
        return v

    def add_term(self, state, coeff):
        coeff = Rat(coeff)
        if not coeff:
            return
        v = self.terms.get(state, Rat(0)) + coeff
        if v:
            self.terms[state] = v
        else:
            del self.terms[state]

    def items(self):
        return self.terms.items()

    def coefficient(self, state) -> Rat:
        return self.terms.get(state, Rat(0))

    def __repr__(self):
        if not self.terms:
            return "FockVector(0)"
        bits = [f"{c}*{state_text(s)}" for s, c in sorted(self.terms.items(), key=lambda kv: repr(kv[0]))]
        return "FockVector(" + " + ".join(bits) + ")"


ZERO = FockVector()


def state_text(s) -> str:
    """Debug form, e.g. ``phi[4,1] psi[2] |0>`` or ``phi[3,0] |0>``."""
    if isinstance(s, FermionStateA):
        parts = []
        if s.phis:
            parts.append("phi[" + ",".join(map(str, s.phis)) + "]")
        if s.psis:
            parts.append("psi[" + ",".join(map(str, s.psis)) + "]")
        parts.append("|0>")
        return " ".join(parts)
    if isinstance(s, FermionStateB):
        parts = []
        if s.indices:
            parts.append("phi[" + ",".join(map(str, s.indices)) + "]")
        parts.append("|0>")
        return " ".join(parts)
    return repr(s)


# -- single-mode actions on basis states ------------------------------------


def _apply_phi_A(m: int, s: FermionStateA) -> List[Tuple[FermionStateA, int]]:
    if m >= 0:
        if m in s.phis:
            return []
        pos = sum(1 for p in s.phis if p > m)
        phis = s.phis[:pos] + (m,) + s.phis[pos:]
        return [(FermionStateA(phis, s.psis), (-1) ** pos)]
    # m < 0: passes the phi block, contracts psi_{-1-m} if present
    partner = -1 - m
    sign = (-1) ** len(s.phis)
    for i, q in enumerate(s.psis):
        if q == partner:
            psis = s.psis[:i] + s.psis[i + 1:]
            return [(FermionStateA(s.phis, psis), sign * (-1) ** i)]
    return []


def _apply_psi_A(m: int, s: FermionStateA) -> List[Tuple[FermionStateA, int]]:
    if m >= 0:
        if m in s.psis:
            return []
        sign = (-1) ** len(s.phis)
        pos = sum(1 for q in s.psis if q > m)
        psis = s.psis[:pos] + (m,) + s.psis[pos:]
        return [(FermionStateA(s.phis, psis), sign * (-1) ** pos)]
    partner = -1 - m
    for i, p in enumerate(s.phis):
        if p == partner:
            phis = s.phis[:i] + s.phis[i + 1:]
            return [(FermionStateA(phis, s.psis), (-1) ** i)]
    return []


def _apply_phi_B(m: int, s: FermionStateB) -> List[Tuple[FermionStateB, int]]:
    out = []
    sign = 1
    idx = s.indices
    for i, n in enumerate(idx):
        if m > n:
            return out + [(FermionStateB(idx[:i] + (m,) + idx[i:]), sign)]
        if m == n:
            if m == 0:
                out.append((FermionStateB(idx[:i] + idx[i + 1:]), sign))
            return out  # phi_m^2 = delta_{m,0}
        if n == -m:
            out.append((FermionStateB(idx[:i] + idx[i + 1:]), sign * 2 * (-1) ** m))
        sign = -sign
    if m >= 0:
        out.append((FermionStateB(idx + (m,)), sign))
    return out


def apply_mode_A(kind: str, n: int, v: FockVector) -> FockVector:
    """Apply phi_n or psi_n (kind in {'phi', 'psi'}) to a type A vector."""
    if kind == "phi":
        act = _apply_phi_A
    elif kind == "psi":
        act = _apply_psi_A
    else:
        raise ValueError("kind must be 'phi' or 'psi'")
    out = FockVector()
    for s, c in v.items():
        for s2, sgn in act(n, s):
            out.add_term(s2, c * sgn)
    return out


def apply_mode_B(n: int, v: FockVector) -> FockVector:
    out = FockVector()
    for s, c in v.items():
        for s2, sgn in _apply_phi_B(n, s):
            out.add_term(s2, c * sgn)
    return out


def vacuum_component(v: FockVector) -> Rat:
    """Coefficient of the vacuum state: this is <0| v |0> = the VEV pairing."""
    for s in v.terms:
        if isinstance(s, FermionStateA):
            return v.coefficient(VACUUM_A)
        if isinstance(s, FermionStateB):
            return v.coefficient(VACUUM_B)
        break
    from .boson import BOSON_VACUUM_A, BOSON_VACUUM_B, BosonStateA, BosonStateB

    for s in v.terms:
        if isinstance(s, BosonStateA):
            return v.coefficient(BOSON_VACUUM_A)
        if isinstance(s, BosonStateB):
            return v.coefficient(BOSON_VACUUM_B)
    return Rat(0)


# -- basis enumeration and characters ----------------------------------------


def _strict_lists(budget: int, top: int) -> List[Tuple[int, ...]]:
    """Strictly decreasing tuples of ints in [0, top] with sum(2m+1) <= budget."""
    out = [()]
    for first in range(min(top, (budget - 1) // 2), -1, -1):
        for rest in _strict_lists(budget - (2 * first + 1), first - 1):
            out.append((first,) + rest)
    return out


def states_A(max_energy2: int, charge=None) -> List[FermionStateA]:
    """All type A basis states with energy2 <= max_energy2 (optionally fixed charge)."""
    if max_energy2 < 0:
        return []
    top = (max_energy2 - 1) // 2 if max_energy2 >= 1 else -1
    parts = _strict_lists(max_energy2, top)
    out = []
    for phis in parts:
        e1 = sum(2 * m + 1 for m in phis)
        for psis in _strict_lists(max_energy2 - e1, top):
            s = FermionStateA(phis, psis)
            if charge is None or charge_A(s) == charge:
                out.append(s)
    return out


def _strict_sum_lists(budget: int, top: int) -> List[Tuple[int, ...]]:
    """Strictly decreasing tuples of ints in [0, top] with plain sum <= budget."""
    out = [()]
    for first in range(min(top, budget), -1, -1):
        for rest in _strict_sum_lists(budget - first, first - 1):
            out.append((first,) + rest)
    return out


def states_B(max_degree: int) -> List[FermionStateB]:
    if max_degree < 0:
        return []
    return [FermionStateB(t) for t in _strict_sum_lists(max_degree, max_degree)]


def character_A(charge: int, max_energy2: int) -> List[Tuple[int, int]]:
    """Graded dimensions (energy2, dim) of the fixed-charge sector of F_A."""
    counts: Dict[int, int] = {}
    for s in states_A(max_energy2, charge):
        counts[energy2_A(s)] = counts.get(energy2_A(s), 0) + 1
    return sorted(counts.items())


def character_B(max_degree: int) -> List[Tuple[int, int]]:
    """Graded dimensions (degree, dim) of F_B."""
    counts: Dict[int, int] = {d: 0 for d in range(max_degree + 1)}
    for s in states_B(max_degree):
        counts[degree_B(s)] += 1
    return sorted(counts.items())
