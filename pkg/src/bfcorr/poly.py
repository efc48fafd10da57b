"""Sparse multivariate polynomials over exact rationals.

A polynomial carries a fixed, ordered variable alphabet (e.g.
``("z1", "z2", "w1", "w2")``) and a sparse map from exponent tuples to
``Fraction`` coefficients.  Everything downstream (rational functions,
Laurent expansions, vacuum expectation values) is built on this type, so
no floating point enters the system anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple

Rat = Fraction

Expo = Tuple[int, ...]


class MultiPoly:
    """Sparse polynomial: dict from exponent tuples to nonzero Fractions."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Tuple[str, ...], terms: Mapping[Expo, Rat] | None = None):
        self.alphabet = tuple(alphabet)
        clean = {}
        if terms:
            n = len(self.alphabet)
            for e, c in terms.items():
                c = Rat(c)
                if c == 0:
                    continue
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not match alphabet of size {n}")
                clean[tuple(e)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, alphabet):
        return cls(alphabet, {})

    @classmethod
    def const(cls, alphabet, c):
        alphabet = tuple(alphabet)
        return cls(alphabet, {(0,) * len(alphabet): Rat(c)})

    @classmethod
    def var(cls, alphabet, name_or_index, power: int = 1):
        alphabet = tuple(alphabet)
        i = name_or_index if isinstance(name_or_index, int) else alphabet.index(name_or_index)
        e = [0] * len(alphabet)
        e[i] = power
        return cls(alphabet, {tuple(e): Rat(1)})

    @classmethod
    def linear(cls, alphabet, i: int, j: int, sign: int):
        """The linear form z_i + sign*z_j."""
        alphabet = tuple(alphabet)
        ei = [0] * len(alphabet)
        ei[i] = 1
        ej = [0] * len(alphabet)
        ej[j] = 1
        return cls(alphabet, {tuple(ei): Rat(1), tuple(ej): Rat(sign)})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        z = (0,) * len(self.alphabet)
        return all(e == z for e in self.terms)

    def constant_value(self) -> Rat:
        z = (0,) * len(self.alphabet)
        return self.terms.get(z, Rat(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Rat(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.alphabet, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.alphabet, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Rat(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.alphabet, out)

    def scale(self, c) -> "MultiPoly":
        c = Rat(c)
        if c == 0:
            return MultiPoly.zero(self.alphabet)
        return MultiPoly(self.alphabet, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(self.alphabet, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure ---------------------------------------------------------

    def max_exponent(self, i: int) -> int:
        """Largest exponent of variable i (0 for the zero polynomial)."""
        return max((e[i] for e in self.terms), default=0)

    def total_degrees(self) -> Tuple[int, int]:
        """(min, max) total degree over all terms; (0, 0) if zero."""
        if not self.terms:
            return (0, 0)
        degs = [sum(e) for e in self.terms]
        return (min(degs), max(degs))

    def diff(self, i: int) -> "MultiPoly":
        out: dict = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            e2 = tuple(e2)
            s = out.get(e2, Rat(0)) + c * e[i]
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        return MultiPoly(self.alphabet, out)

    def substitute(self, i: int, j: int, sign: int) -> "MultiPoly":
        """Substitute z_i := sign*z_j (moves the exponent of i onto j)."""
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = list(e)
            e2[i] = 0
            e2[j] += k
            e2 = tuple(e2)
            v = c * (sign ** k)
            s = out.get(e2, Rat(0)) + v
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        return MultiPoly(self.alphabet, out)

    def shift_var(self, i: int, k: int) -> "MultiPoly":
        """Multiply by z_i^k; requires the result to stay polynomial."""
        out = {}
        for e, c in self.terms.items():
            if e[i] + k < 0:
                raise ValueError("negative exponent after shift")
            e2 = list(e)
            e2[i] += k
            out[tuple(e2)] = c
        return MultiPoly(self.alphabet, out)

    def divmod_linear(self, i: int, j: int, sign: int):
        """Divide by the linear form z_i + sign*z_j via synthetic division.

        Returns (quotient, remainder) with remainder free of z_i
        (remainder = self evaluated at z_i = -sign*z_j).
        """
        # coefficients of z_i^k, each a polynomial in the other variables
        by_deg: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = list(e)
            e2[i] = 0
            by_deg.setdefault(k, {})[tuple(e2)] = c
        if not by_deg:
            return MultiPoly.zero(self.alphabet), MultiPoly.zero(self.alphabet)
        d = max(by_deg)
        s = -sign  # root is at z_i = -sign*z_j

        def shifted(term_map):
            # multiply by s*z_j
            out = {}
            for e, c in term_map.items():
                e2 = list(e)
                e2[j] += 1
                out[tuple(e2)] = c * s
            return out

        def added(a, b):
            out = dict(a)
            for e, c in b.items():
                v = out.get(e, Rat(0)) + c
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
            return out

        quot: dict = {}
        carry: dict = {}
        for k in range(d, 0, -1):
            b = added(by_deg.get(k, {}), shifted(carry))
            for e, c in b.items():
                if c:
                    e2 = list(e)
                    e2[i] = k - 1
                    quot[tuple(e2)] = c
            carry = b
        rem = added(by_deg.get(0, {}), shifted(carry))
        return MultiPoly(self.alphabet, quot), MultiPoly(self.alphabet, rem)

    def divisible_by_var(self, i: int) -> bool:
        return bool(self.terms) and all(e[i] >= 1 for e in self.terms)

    def div_var(self, i: int) -> "MultiPoly":
        return self.shift_var(i, -1)

    def evaluate(self, point: Iterable[Rat]) -> Rat:
        point = list(point)
        total = Rat(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    # -- display -----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    def __str__(self):
        from .textio import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({self.alphabet}, {self.terms!r})"
