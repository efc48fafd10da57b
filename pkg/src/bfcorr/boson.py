"""Bosonic Fock spaces, Heisenberg mode actions, and vertex operators.

Type A states live in C[e^a, e^-a] (x) C[x_1, x_2, ...]; type B states in
the two glued twisted-Heisenberg modules C[e^a]/(e^2a = 1) (x)
C[x_1, x_3, x_5, ...].  Realization conventions (validated by the
commutator suite): type A h_{-n} acts as multiplication by n*x_n and h_n
as d/dx_n; type B h_{-n} as (n/2)*x_n and h_n as d/dx_n, n odd.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, List, NamedTuple, Tuple

from .fock import FockVector
from .poly import Rat

Monomial = Tuple[Tuple[int, int], ...]  # ((variable index, exponent), ...) ascending


class BosonStateA(NamedTuple):
    charge: int
    mon: Monomial


class BosonStateB(NamedTuple):
    parity: int
    mon: Monomial


BOSON_VACUUM_A = BosonStateA(0, ())
BOSON_VACUUM_B = BosonStateB(0, ())


def mon_weight(mon: Monomial) -> int:
    return sum(v * e for v, e in mon)


def energy2_boson_A(s: BosonStateA) -> int:
    """Doubled energy: 2*monomial weight plus the lattice term charge^2."""
    return 2 * mon_weight(s.mon) + s.charge * s.charge


def degree_boson_B(s: BosonStateB) -> int:
    return mon_weight(s.mon)


def mon_get(mon: Monomial, v: int) -> int:
    for var, e in mon:
        if var == v:
            return e
    return 0


def mon_set(mon: Monomial, v: int, e: int) -> Monomial:
    items = [(var, x) for var, x in mon if var != v]
    if e:
        items.append((v, e))
    items.sort()
    return tuple(items)


def boson_state_text(s) -> str:
    """Debug form, e.g. ``e^2a * x1^3 x5^1``."""
    head = f"e^{s.charge}a" if isinstance(s, BosonStateA) else f"e^{s.parity}a"
    if not s.mon:
        return head
    tail = " ".join(f"x{v}^{e}" for v, e in s.mon)
    return f"{head} * {tail}"


# -- Heisenberg actions -------------------------------------------------------


def heis_apply_A(n: int, v: FockVector) -> FockVector:
    """h_n on B_A: d/dx_n for n > 0, multiplication by |n|*x_|n| for n < 0."""
    if n == 0:
        raise ValueError("h_0 is not represented")
    out = FockVector()
    for s, c in v.items():
        if n > 0:
            e = mon_get(s.mon, n)
            if e:
                out.add_term(BosonStateA(s.charge, mon_set(s.mon, n, e - 1)), c * e)
        else:
            m = -n
            e = mon_get(s.mon, m)
            out.add_term(BosonStateA(s.charge, mon_set(s.mon, m, e + 1)), c * m)
    return out


def heis_apply_B(n: int, v: FockVector) -> FockVector:
    """Twisted h_n: d/dx_n for n > 0, multiplication by (|n|/2)*x_|n| for n < 0."""
    if n % 2 == 0:
        raise ValueError("twisted Heisenberg modes are odd")
    out = FockVector()
    for s, c in v.items():
        if n > 0:
            e = mon_get(s.mon, n)
            if e:
                out.add_term(BosonStateB(s.parity, mon_set(s.mon, n, e - 1)), c * e)
        else:
            m = -n
            e = mon_get(s.mon, m)
            out.add_term(BosonStateB(s.parity, mon_set(s.mon, m, e + 1)), c * Fraction(m, 2))
    return out


# -- exponential enumeration helpers -----------------------------------------


def _weighted_compositions(weight: int, parts: List[int]):
    """All exponent dicts over ``parts`` with sum(part*mult) == weight."""
    if weight == 0:
        yield {}
        return
    if not parts:
        return
    p, rest = parts[0], parts[1:]
    for mult in range(weight // p, -1, -1):
        for tail in _weighted_compositions(weight - p * mult, rest):
            if mult:
                d = dict(tail)
                d[p] = mult
                yield d
            else:
                yield tail


def _lowerings(mon: Monomial):
    """All ways to apply derivative multisets l <= mon, with falling factorials."""
    items = list(mon)

    def rec(k):
        if k == len(items):
            yield {}, Rat(1)
            return
        v, e = items[k]
        for rest, ff in rec(k + 1):
            fall = 1
            for l in range(e + 1):
                if l:
                    fall *= e - l + 1
                if l:
                    d = dict(rest)
                    d[v] = l
                    yield d, ff * fall
                else:
                    yield rest, ff

    return rec(0)


# -- vertex operators ---------------------------------------------------------


def vertex_A(sign: int, v: FockVector, cutoff: int, wmax: int | None = None) -> Dict[int, FockVector]:
    """e^{sign*alpha}(z) applied to v, per z-exponent, truncated to [-D, D].

    Right-to-left factors: z^{sign*d_alpha} contributes z^(sign*original
    charge), e^{sign*alpha} shifts the charge, then the annihilation
    exponential exp(-sign*sum h_n/n z^-n) and the creation exponential
    exp(sign*sum h_{-n}/n z^n) = exp(sign*sum x_n z^n).  ``wmax`` caps the
    output monomial weight (used to drop states no later operator can
    bring back to the vacuum).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    out: Dict[int, FockVector] = {}
    for s, c in v.items():
        base = sign * s.charge
        q2 = s.charge + sign
        w0 = mon_weight(s.mon)
        for low, fall in _lowerings(s.mon):
            zl = -sum(n * l for n, l in low.items())
            if base + zl > cutoff:
                continue
            w1 = w0 + zl
            coeff_l = Rat(fall)
            mon1 = s.mon
            for n, l in low.items():
                coeff_l *= Fraction((-sign) ** l, n ** l * factorial(l))
                mon1 = mon_set(mon1, n, mon_get(mon1, n) - l)
            top = cutoff - base - zl
            if wmax is not None:
                top = min(top, wmax - w1)
            for j in range(max(0, -cutoff - base - zl), top + 1):
                for raise_ in _weighted_compositions(j, list(range(1, j + 1))):
                    coeff = c * coeff_l
                    mon2 = mon1
                    for n, mult in raise_.items():
                        coeff *= Fraction(sign ** mult, factorial(mult))
                        mon2 = mon_set(mon2, n, mon_get(mon2, n) + mult)
                    ze = base + zl + j
                    out.setdefault(ze, FockVector()).add_term(BosonStateA(q2, mon2), coeff)
    return {k: fv for k, fv in out.items() if not fv.is_zero()}


def vertex_B(arg_sign: int, v: FockVector, cutoff: int, wmax: int | None = None) -> Dict[int, FockVector]:
    """e^alpha(z) (arg_sign=+1) or e^alpha(-z) = e^-alpha(z) (arg_sign=-1).

    Right-to-left: e^alpha flips the parity (e^{2alpha} = 1), then the
    annihilation exponential exp(-sum_k h_{2k+1}/(k+1/2) z^{-2k-1}) acting
    as exp(-sum_m (2/m) d/dx_m z^-m), then the creation exponential
    exp(sum_m x_m z^m), odd m throughout.
    """
    if arg_sign not in (1, -1):
        raise ValueError("arg_sign must be +1 or -1")
    out: Dict[int, FockVector] = {}
    for s, c in v.items():
        p2 = 1 - s.parity
        w0 = mon_weight(s.mon)
        for low, fall in _lowerings(s.mon):
            zl = -sum(n * l for n, l in low.items())
            if zl > cutoff:
                continue
            w1 = w0 + zl
            coeff_l = Rat(fall)
            mon1 = s.mon
            for n, l in low.items():
                coeff_l *= Fraction((-2) ** l, n ** l * factorial(l))
                mon1 = mon_set(mon1, n, mon_get(mon1, n) - l)
            top = cutoff - zl
            if wmax is not None:
                top = min(top, wmax - w1)
            for j in range(max(0, -cutoff - zl), top + 1):
                odd_parts = list(range(1, j + 1, 2))
                for raise_ in _weighted_compositions(j, odd_parts):
                    coeff = c * coeff_l
                    mon2 = mon1
                    for n, mult in raise_.items():
                        coeff *= Fraction(1, factorial(mult))
                        mon2 = mon_set(mon2, n, mon_get(mon2, n) + mult)
                    ze = zl + j
                    if arg_sign < 0 and ze % 2:
                        coeff = -coeff
                    out.setdefault(ze, FockVector()).add_term(BosonStateB(p2, mon2), coeff)
    return {k: fv for k, fv in out.items() if not fv.is_zero()}
