"""Field objects: mode families with a series convention, the Hopf
generator actions D = d/dz and T_{-1}: z -> -z, quadratic normal ordered
products, and the Heisenberg fields built from fermions.

A Field exposes its operators by z-power (``coeff``) and by mode label
(``mode``), where the label-to-power map is fixed by the convention:
PositivePower a(z) = sum a_n z^n, StandardVA a(z) = sum a_(n) z^{-n-1}.
Quadratic normal ordering is defined by vacuum subtraction
:a_j b_k: = a_j b_k - <0|a_j b_k|0>, which for free fields agrees with
the annihilation-right convention and keeps every mode a finite sum on
graded vectors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .fock import (
    FermionStateA,
    FermionStateB,
    FockVector,
    apply_mode_A,
    apply_mode_B,
    states_A,
    states_B,
)
from .poly import Rat

Operator = Callable[[FockVector], FockVector]

POSITIVE = "positive"   # a(z) = sum_n a_n z^n
STANDARD = "standard"   # a(z) = sum_n a_(n) z^{-n-1}


class CliffordAtom:
    """Unary Clifford content of a field: coeff(k) = scalar(k) * X_{k+shift}."""

    __slots__ = ("family", "shift", "scalar")

    def __init__(self, family: str, shift: int = 0, scalar: Callable[[int], Rat] | None = None):
        self.family = family  # 'phiA' | 'psiA' | 'phiB'
        self.shift = shift
        self.scalar = scalar or (lambda k: Rat(1))


def _apply_underlying(family: str, idx: int, v: FockVector) -> FockVector:
    if family == "phiA":
        return apply_mode_A("phi", idx, v)
    if family == "psiA":
        return apply_mode_A("psi", idx, v)
    if family == "phiB":
        return apply_mode_B(idx, v)
    raise ValueError(f"unknown family {family}")


class Field:
    """Immutable descriptor of an operator-valued formal series."""

    def __init__(
        self,
        name: str,
        space: str,
        parity: int,
        convention: str,
        coeff_fn: Callable[[int], Operator],
        atom: Optional[CliffordAtom] = None,
        mode_zpow: Optional[Callable[[int], int]] = None,
    ):
        self.name = name
        self.space = space
        self.parity = parity
        self.convention = convention
        self._coeff_fn = coeff_fn
        self.atom = atom
        self._mode_zpow = mode_zpow

    def coeff(self, k: int) -> Operator:
        """Operator coefficient of z^k (convention independent)."""
        return self._coeff_fn(k)

    def mode_zpow(self, n: int) -> int:
        if self._mode_zpow is not None:
            return self._mode_zpow(n)
        return n if self.convention == POSITIVE else -n - 1

    def mode(self, n: int) -> Operator:
        """Operator for mode label n in this field's convention."""
        return self.coeff(self.mode_zpow(n))

    def with_convention(self, convention: str) -> "Field":
        if convention not in (POSITIVE, STANDARD):
            raise ValueError("unknown convention")
        return Field(self.name, self.space, self.parity, convention,
                     self._coeff_fn, self.atom)

    def scaled(self, c) -> "Field":
        c = Rat(c)
        fn = self._coeff_fn
        atom = None
        if self.atom is not None:
            a = self.atom
            atom = CliffordAtom(a.family, a.shift, lambda k, a=a: c * a.scalar(k))
        return Field(self.name, self.space, self.parity, self.convention,
                     lambda k: (lambda v, k=k: fn(k)(v).scale(c)), atom, self._mode_zpow)


def phi_A() -> Field:
    return Field("phi", "A", 1, POSITIVE,
                 lambda k: (lambda v, k=k: apply_mode_A("phi", k, v)),
                 CliffordAtom("phiA"))


def psi_A() -> Field:
    return Field("psi", "A", 1, POSITIVE,
                 lambda k: (lambda v, k=k: apply_mode_A("psi", k, v)),
                 CliffordAtom("psiA"))


def phi_B() -> Field:
    return Field("phi", "B", 1, POSITIVE,
                 lambda k: (lambda v, k=k: apply_mode_B(k, v)),
                 CliffordAtom("phiB"))


# -- Hopf algebra action ------------------------------------------------------


class HopfAction:
    """Canonical form sign * T^eps * D^k of a word in {D, T}."""

    __slots__ = ("sign", "eps", "k")

    def __init__(self, sign: int = 1, eps: int = 0, k: int = 0):
        if sign not in (1, -1) or eps not in (0, 1) or k < 0:
            raise ValueError("bad Hopf action data")
        self.sign = sign
        self.eps = eps
        self.k = k

    @classmethod
    def word(cls, letters: str) -> "HopfAction":
        """Compose from a word like "DT" (rightmost letter acts first)."""
        h = cls()
        for ch in letters:
            if ch == "D":
                h = h * cls(1, 0, 1)
            elif ch == "T":
                h = h * cls(1, 1, 0)
            else:
                raise ValueError(f"unknown generator {ch!r}")
        return h

    def __mul__(self, other: "HopfAction") -> "HopfAction":
        # T^e1 D^k1 T^e2 D^k2 = (-1)^(k1*e2) T^(e1+e2) D^(k1+k2)
        sign = self.sign * other.sign * ((-1) ** (self.k * other.eps))
        return HopfAction(sign, (self.eps + other.eps) % 2, self.k + other.k)

    def __eq__(self, other):
        return (isinstance(other, HopfAction)
                and (self.sign, self.eps, self.k) == (other.sign, other.eps, other.k))

    def __repr__(self):
        return f"HopfAction(sign={self.sign}, eps={self.eps}, k={self.k})"


def _apply_D(a: Field) -> Field:
    fn = a._coeff_fn
    atom = None
    if a.atom is not None:
        at = a.atom
        atom = CliffordAtom(at.family, at.shift + 1,
                            lambda k, at=at: (k + 1) * at.scalar(k + 1))
    return Field(f"D({a.name})", a.space, a.parity, a.convention,
                 lambda k: (lambda v, k=k: fn(k + 1)(v).scale(k + 1)), atom)


def _apply_T(a: Field) -> Field:
    fn = a._coeff_fn
    atom = None
    if a.atom is not None:
        at = a.atom
        atom = CliffordAtom(at.family, at.shift,
                            lambda k, at=at: ((-1) ** k) * at.scalar(k))
    return Field(f"T({a.name})", a.space, a.parity, a.convention,
                 lambda k: (lambda v, k=k: fn(k)(v).scale((-1) ** k)), atom)


def act_hopf(h, a: Field) -> Field:
    """Apply a Hopf word to a field; composite words apply the left factor last."""
    if isinstance(h, str):
        h = HopfAction.word(h)
    out = a
    for _ in range(h.k):
        out = _apply_D(out)
    if h.eps:
        out = _apply_T(out)
    if h.sign < 0:
        out = out.scaled(-1)
    return out


# -- quadratic normal ordering ------------------------------------------------


def _vev_pair(families: Tuple[str, str], alpha: int, beta: int) -> Rat:
    """<0| X_alpha Y_beta |0> for the underlying Clifford modes."""
    fa, fb = families
    if (fa, fb) in (("phiA", "psiA"), ("psiA", "phiA")):
        return Rat(1) if (beta >= 0 and alpha + beta == -1) else Rat(0)
    if (fa, fb) == ("phiB", "phiB"):
        if alpha == -beta and beta > 0:
            return Rat(2 * (-1) ** beta)
        if alpha == beta == 0:
            return Rat(1)
        return Rat(0)
    raise ValueError(f"unsupported quadratic pair {families}")


def _candidates(families: Tuple[str, str], ksum: int, s) -> List[int]:
    """Underlying b-indices beta for which :a_(ksum-beta) b_beta: can act."""
    fa, fb = families
    cand = set(range(0, max(ksum, -1) + 1 if fa != "phiB" else max(ksum, 0) + 1))
    if fa == "phiB":
        for n in s.indices:
            if ksum + n >= 0:
                cand.add(ksum + n)
            cand.add(-n)
    else:
        phis, psis = s.phis, s.psis
        if fb == "phiA":
            phis, psis = psis, phis  # mirror roles for :psi phi:
        for q in psis:
            if ksum + 1 + q >= 0:
                cand.add(ksum + 1 + q)
        for p in phis:
            cand.add(-1 - p)
    return sorted(cand)


def normal_ordered_quadratic(a: Field, b: Field) -> Field:
    """The field with z-power coefficients sum_{j+k=K} :a_j b_k:."""
    if a.space != b.space:
        raise ValueError("fields act on different spaces")
    if a.atom is None or b.atom is None:
        raise ValueError("quadratic normal ordering needs unary Clifford fields")
    families = (a.atom.family, b.atom.family)
    if families not in (("phiA", "psiA"), ("psiA", "phiA"), ("phiB", "phiB")):
        raise ValueError(f"unsupported quadratic pair {families}")
    at_a, at_b = a.atom, b.atom
    cache: Dict = {}

    def apply_coeff(K: int, v: FockVector) -> FockVector:
        total = FockVector()
        ksum = K + at_a.shift + at_b.shift
        for s, c in v.items():
            key = (K, s)
            got = cache.get(key)
            if got is None:
                got = FockVector()
                unit = FockVector.basis(s)
                for beta in _candidates(families, ksum, s):
                    alpha = ksum - beta
                    scal = at_a.scalar(alpha - at_a.shift) * at_b.scalar(beta - at_b.shift)
                    if not scal:
                        continue
                    w = _apply_underlying(at_b.family, beta, unit)
                    if not w.is_zero():
                        w = _apply_underlying(at_a.family, alpha, w)
                    pair = _vev_pair(families, alpha, beta)
                    if pair:
                        w = w - unit.scale(pair)
                    if not w.is_zero():
                        got = got + w.scale(scal)
                cache[key] = got
            total = total + got.scale(c)
        return total

    return Field(f":{a.name}{b.name}:", a.space, (a.parity + b.parity) % 2,
                 STANDARD, lambda K: (lambda v, K=K: apply_coeff(K, v)))


def heisenberg_field_A() -> Field:
    """h(z) = :phi(z)psi(z): on F_A, modes h_n at z^{-n-1}."""
    return normal_ordered_quadratic(phi_A(), psi_A())


def twisted_heisenberg_field_B() -> Field:
    """h(z) = (1/4):phi(z)phi(-z): on F_B, odd modes h_m at z^{-m}."""
    phi = phi_B()
    h = normal_ordered_quadratic(phi, act_hopf("T", phi)).scaled(Fraction(1, 4))
    return Field("h_B", h.space, 0, STANDARD, h._coeff_fn, None,
                 mode_zpow=lambda m: -m)


def mode_commutator(a: Field, b: Field, m: int, n: int, grade_bound: int,
                    expected: Rat = Rat(0)) -> List[Tuple[object, FockVector]]:
    """Residual of (a_m b_n -/+ b_n a_m) - expected*Id on the graded subspace.

    Uses the anticommutator for odd*odd and the commutator otherwise;
    returns the nonzero residuals (empty list = identity holds).
    """
    if a.space != b.space:
        raise ValueError("fields act on different spaces")
    sign = 1 if (a.parity and b.parity) else -1
    am, bn = a.mode(m), b.mode(n)
    basis = states_A(grade_bound) if a.space == "A" else states_B(grade_bound)
    bad = []
    for s in basis:
        v = FockVector.basis(s)
        r = am(bn(v)) + bn(am(v)).scale(sign) - v.scale(expected)
        if not r.is_zero():
            bad.append((s, r))
    return bad
