"""Vacuum expectation values on all four sides of the correspondences,
closed-form determinant/Pfaffian/product expressions, and the named
identity checks.

The fermionic engines apply mode sums right to left with symbolic
variable powers, pruning states that can no longer return to the vacuum
inside the cutoff box; the bosonic engines compose truncated vertex
operators.  Closed forms are exact rational functions; series forms of
the determinant and Pfaffian are assembled from entrywise expansions
(region expansion is a ring homomorphism, and each permutation or
matching touches disjoint variable pairs, so entry truncation at the box
bound is exact).
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .boson import BOSON_VACUUM_A, BOSON_VACUUM_B, BosonStateA, BosonStateB, mon_weight, vertex_A, vertex_B
from .fields import act_hopf, heisenberg_field_A, mode_commutator, phi_A, phi_B, psi_A, twisted_heisenberg_field_B
from .fock import (
    VACUUM_A,
    VACUUM_B,
    FermionStateA,
    FermionStateB,
    FockVector,
    apply_mode_A,
    apply_mode_B,
    character_A,
    character_B,
    states_B,
    vacuum_component,
)
from .matrices import determinant, pfaffian
from .partitions import odd_partition_count, partition_count
from .poly import MultiPoly, Rat
from .ratfun import RationalFn, diff_factor, residue_at, rf_equal, sum_factor
from .series import LaurentSeries, expand, raw_mul
from .textio import format_rational, format_series


@dataclass(frozen=True)
class VevSpec:
    """A vacuum expectation value request: an ordered word of fields."""

    model: str                      # 'A' | 'B'
    side: str                       # 'fermion' | 'boson'
    word: Tuple[Tuple[str, str], ...]  # (symbol, variable) pairs, left to right
    cutoff: int

    @classmethod
    def standard_A(cls, side: str, n: int, cutoff: int) -> "VevSpec":
        """phi(z_1)..phi(z_n) psi(w_1)..psi(w_n), or the e^{+-alpha} images."""
        plus, minus = ("phi", "psi") if side == "fermion" else ("+", "-")
        word = tuple((plus, f"z{i + 1}") for i in range(n))
        word += tuple((minus, f"w{i + 1}") for i in range(n))
        return cls("A", side, word, cutoff)

    @classmethod
    def standard_B(cls, side: str, points: int, cutoff: int) -> "VevSpec":
        """phi(z_1)..phi(z_points), or the e^alpha images."""
        sym = "phi" if side == "fermion" else "+"
        return cls("B", side, tuple((sym, f"z{i + 1}") for i in range(points)), cutoff)


def _series_from_prefixes(entries, vacuum, ordering, cutoff) -> LaurentSeries:
    terms = {}
    for prefix, smap in entries.items():
        c = smap.get(vacuum)
        if c:
            terms[tuple(reversed(prefix))] = c
    return LaurentSeries(ordering, cutoff, terms)


def _propagate(entries, action, pos, cutoff):
    """One right-to-left word step on prefix -> {state: coeff} tables.

    ``action(state)`` lists (exponent, new state, coefficient); exponents
    that cannot complete to a box monomial with ``pos`` fields remaining
    are dropped.
    """
    new: Dict[Tuple[int, ...], Dict] = {}
    slack = (pos + 1) * cutoff
    for prefix, smap in entries.items():
        partial = sum(prefix)
        lo, hi = -slack - partial, slack - partial
        for s, c in smap.items():
            for ze, s2, c2 in action(s):
                if ze < lo or ze > hi:
                    continue
                key = prefix + (ze,)
                d = new.get(key)
                if d is None:
                    d = {}
                    new[key] = d
                v = d.get(s2)
                v = c * c2 if v is None else v + c * c2
                if v:
                    d[s2] = v
                elif s2 in d:
                    del d[s2]
    return {k: d for k, d in new.items() if d}


def _fermion_actions_A(sym: str, psis_left: int, phis_left: int, cutoff: int):
    """Mode sweep of one type A field on a basis state, pruned to states
    the remaining fields can still annihilate."""
    top = cutoff - 1

    def action(s: FermionStateA):
        out = []
        phis, psis = s.phis, s.psis
        if sym == "phi":
            if len(phis) < psis_left:
                lim = min(top, cutoff)
                for m in range(lim, -1, -1):
                    if m in phis:
                        continue
                    pos = sum(1 for p in phis if p > m)
                    out.append((m, FermionStateA(phis[:pos] + (m,) + phis[pos:], psis),
                                (-1) ** pos))
            sign = (-1) ** len(phis)
            for i, q in enumerate(psis):
                m = -1 - q
                if m >= -cutoff:
                    out.append((m, FermionStateA(phis, psis[:i] + psis[i + 1:]),
                                sign * (-1) ** i))
        else:
            if len(psis) < phis_left:
                sign = (-1) ** len(phis)
                for m in range(min(top, cutoff), -1, -1):
                    if m in psis:
                        continue
                    pos = sum(1 for q in psis if q > m)
                    out.append((m, FermionStateA(phis, psis[:pos] + (m,) + psis[pos:]),
                                sign * (-1) ** pos))
            for i, p in enumerate(phis):
                m = -1 - p
                if m >= -cutoff:
                    out.append((m, FermionStateA(phis[:i] + phis[i + 1:], psis), (-1) ** i))
        return out

    return action


def _fermion_action_B(parts_left: int, cutoff: int):
    def action(s: FermionStateB):
        out = []
        idx = s.indices
        if len(idx) < parts_left:
            for m in range(cutoff, -1, -1):
                if m in idx:
                    continue
                pos = sum(1 for n in idx if n > m)
                out.append((m, FermionStateB(idx[:pos] + (m,) + idx[pos:]), (-1) ** pos))
        for i, n in enumerate(idx):
            if n == 0:
                out.append((0, FermionStateB(idx[:i] + idx[i + 1:]), (-1) ** i))
            elif n <= cutoff:
                out.append((-n, FermionStateB(idx[:i] + idx[i + 1:]),
                            2 * (-1) ** n * (-1) ** i))
        return out

    return action


def vev_fermion(spec: VevSpec) -> LaurentSeries:
    """<0| word |0> as a Laurent series in the word-order expansion region."""
    if spec.side != "fermion":
        raise ValueError("spec.side must be 'fermion'")
    D = spec.cutoff
    word = list(spec.word)
    ordering = tuple(v for _, v in word)
    if len(set(ordering)) != len(ordering):
        raise ValueError("variables must be distinct")
    vacuum = VACUUM_A if spec.model == "A" else VACUUM_B
    entries = {(): {vacuum: Rat(1)}}
    for pos in range(len(word) - 1, -1, -1):
        sym, _ = word[pos]
        if spec.model == "A":
            phis_left = sum(1 for t, _ in word[:pos] if t == "phi")
            base = _fermion_actions_A(sym, pos - phis_left, phis_left, D)
        else:
            base = _fermion_action_B(pos, D)
        cache: Dict = {}

        def action(s, base=base, cache=cache):
            got = cache.get(s)
            if got is None:
                got = base(s)
                cache[s] = got
            return got

        entries = _propagate(entries, action, pos, D)
    return _series_from_prefixes(entries, vacuum, ordering, D)


def vev_boson(spec: VevSpec) -> LaurentSeries:
    """Composite vertex-operator VEV, truncated term by term."""
    if spec.side != "boson":
        raise ValueError("spec.side must be 'boson'")
    D = spec.cutoff
    word = list(spec.word)
    ordering = tuple(v for _, v in word)
    if len(set(ordering)) != len(ordering):
        raise ValueError("variables must be distinct")
    vacuum = BOSON_VACUUM_A if spec.model == "A" else BOSON_VACUUM_B
    entries = {(): {vacuum: Rat(1)}}
    vertex = vertex_A if spec.model == "A" else vertex_B
    # net weight one operator can absorb: its exponent is >= -D and the
    # charge factor shifts it by at most the running charge
    charges = []
    q = 0
    for sym, _ in reversed(word):
        charges.append(abs(q))
        q += 1 if sym == "+" else -1
    absorbs = [D + c for c in charges]  # indexed right to left
    for pos in range(len(word) - 1, -1, -1):
        sym, _ = word[pos]
        sign = 1 if sym == "+" else -1
        wmax = sum(absorbs[len(word) - pos:]) if spec.model == "A" else pos * D
        cache: Dict = {}

        def action(s, sign=sign, wmax=wmax, cache=cache):
            got = cache.get(s)
            if got is None:
                res = vertex(sign, FockVector.basis(s), D, wmax)
                got = [(ze, s2, c2) for ze, out in res.items() for s2, c2 in out.items()]
                cache[s] = got
            return got

        entries = _propagate(entries, action, pos, D)
    return _series_from_prefixes(entries, vacuum, ordering, D)


def vev(spec: VevSpec) -> LaurentSeries:
    return vev_fermion(spec) if spec.side == "fermion" else vev_boson(spec)


# -- closed forms --------------------------------------------------------------


def _alphabet_A(n: int):
    return tuple(f"z{i + 1}" for i in range(n)) + tuple(f"w{i + 1}" for i in range(n))


def _alphabet_B(points: int):
    return tuple(f"z{i + 1}" for i in range(points))


def closed_form(model: str, kind: str, n: int) -> RationalFn:
    """Exact closed forms: det/product (type A, n pairs), pfaffian/product
    (type B, 2n points)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if model == "A":
        alpha = _alphabet_A(n)
        if kind == "determinant":
            mat = []
            for i in range(n):
                row = []
                for j in range(n):
                    atom, s = diff_factor(i, n + j)
                    row.append(RationalFn(MultiPoly.const(alpha, s), {atom: 1}))
                mat.append(row)
            sign = (-1) ** (n * (n - 1) // 2)
            return determinant(mat).scale(sign)
        if kind == "product":
            num = MultiPoly.const(alpha, 1)
            for i in range(n):
                for j in range(i + 1, n):
                    num = num * MultiPoly.linear(alpha, i, j, -1)
                    num = num * MultiPoly.linear(alpha, n + i, n + j, -1)
            den = {}
            sign = 1
            for i in range(n):
                for j in range(n):
                    atom, s = diff_factor(i, n + j)
                    den[atom] = den.get(atom, 0) + 1
                    sign *= s
            return RationalFn(num.scale(sign), den)
        raise ValueError(f"unknown type A closed form {kind!r}")
    if model == "B":
        points = 2 * n
        alpha = _alphabet_B(points)
        if kind == "pfaffian":
            mat = [[RationalFn.zero(alpha) for _ in range(points)] for _ in range(points)]
            for i in range(points):
                for j in range(i + 1, points):
                    v = RationalFn(MultiPoly.linear(alpha, i, j, -1), {sum_factor(i, j): 1})
                    mat[i][j] = v
                    mat[j][i] = -v
            return pfaffian(mat)
        if kind == "product":
            num = MultiPoly.const(alpha, 1)
            den = {}
            for i in range(points):
                for j in range(i + 1, points):
                    num = num * MultiPoly.linear(alpha, i, j, -1)
                    den[sum_factor(i, j)] = 1
            return RationalFn(num, den)
        raise ValueError(f"unknown type B closed form {kind!r}")
    raise ValueError(f"unknown model {model!r}")


def det_series(n: int, cutoff: int) -> LaurentSeries:
    """Expansion of (-1)^{n(n-1)/2} det(1/(z_i - w_j)) on the cutoff box."""
    alpha = _alphabet_A(n)
    ordering = alpha
    entries = {}
    for i in range(n):
        for j in range(n):
            atom, s = diff_factor(i, n + j)
            rf = RationalFn(MultiPoly.const(alpha, s), {atom: 1})
            entries[(i, j)] = expand(rf, ordering, cutoff).terms

    from itertools import permutations

    total: Dict = {}
    for perm in permutations(range(n)):
        inv = 0
        for a in range(n):
            for b in range(a + 1, n):
                if perm[a] > perm[b]:
                    inv += 1
        prod = {(0,) * len(ordering): Rat(1)}
        for i in range(n):
            prod = raw_mul(prod, entries[(i, perm[i])])
        sgn = (-1) ** inv
        for e, c in prod.items():
            v = total.get(e, Rat(0)) + sgn * c
            if v:
                total[e] = v
            else:
                total.pop(e, None)
    sign = (-1) ** (n * (n - 1) // 2)
    return LaurentSeries(ordering, cutoff, {e: sign * c for e, c in total.items()})


def pf_series(points: int, cutoff: int) -> LaurentSeries:
    """Expansion of Pf((z_i - z_j)/(z_i + z_j)) on the cutoff box."""
    if points % 2:
        raise ValueError("points must be even")
    alpha = _alphabet_B(points)
    entries = {}
    for i in range(points):
        for j in range(i + 1, points):
            rf = RationalFn(MultiPoly.linear(alpha, i, j, -1), {sum_factor(i, j): 1})
            entries[(i, j)] = expand(rf, alpha, cutoff).terms

    def pf(rows: Tuple[int, ...]) -> Dict:
        if not rows:
            return {(0,) * points: Rat(1)}
        first, rest = rows[0], rows[1:]
        total: Dict = {}
        for pos, r in enumerate(rest):
            sub = tuple(x for x in rest if x != r)
            prod = raw_mul(entries[(first, r)], pf(sub))
            sgn = (-1) ** pos
            for e, c in prod.items():
                v = total.get(e, Rat(0)) + sgn * c
                if v:
                    total[e] = v
                else:
                    total.pop(e, None)
        return total

    return LaurentSeries(alpha, cutoff, pf(tuple(range(points))))


def analytic_continuation_check(series: LaurentSeries, candidate: RationalFn) -> bool:
    """True iff the series is the region expansion of the candidate at its cutoff."""
    return expand(candidate, series.ordering, series.cutoff) == series


# -- identity checks ------------------------------------------------------------


@dataclass
class IdentityReport:
    name: str
    params: Dict
    status: str
    witnesses: Dict[str, str] = dataclass_field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> Dict:
        return {
            "check": self.name,
            "params": {
                "model": self.params.get("model"),
                "n": self.params.get("n"),
                "cutoff": self.params.get("cutoff"),
                "seed": self.params.get("seed", 0),
            },
            "status": self.status,
            "witnesses": self.witnesses,
            "elapsed_ms": self.elapsed_ms,
        }


def _clip(text: str, limit: int = 4000) -> str:
    if len(text) <= limit:
        return text
    digest = hashlib.sha256(text.encode()).hexdigest()[:16]
    return f"{text[:limit]} ... [{len(text)} chars, sha256:{digest}]"


def _series_witness(s: LaurentSeries) -> str:
    return _clip(format_series(s))


def _rational_witness(f: RationalFn) -> str:
    return _clip(format_rational(f))


def _monomial_text(ordering, e) -> str:
    parts = [f"{v}^{k}" for v, k in zip(ordering, e) if k]
    return "*".join(parts) if parts else "1"


def _compare_series(report: IdentityReport, pairs: List[Tuple[str, str, LaurentSeries, LaurentSeries]]):
    for label_l, label_r, lhs, rhs in pairs:
        report.witnesses[label_l] = _series_witness(lhs)
        report.witnesses[label_r] = _series_witness(rhs)
        if lhs != rhs:
            e = lhs.first_difference(rhs)
            report.status = "fail"
            report.witnesses["first_difference"] = (
                f"{label_l} vs {label_r} at {_monomial_text(lhs.ordering, e)}: "
                f"{lhs.terms.get(e, Rat(0))} vs {rhs.terms.get(e, Rat(0))}"
            )
            return


def check_identity(name: str, params: Optional[Dict] = None, cutoff: Optional[int] = None) -> IdentityReport:
    """Run one named check and report pass/fail with witnesses."""
    params = dict(params or {})
    if cutoff is not None:
        params.setdefault("cutoff", cutoff)
    handler = _CHECKS.get(name)
    if handler is None:
        raise ValueError(f"unknown check name {name!r}")
    t0 = time.perf_counter()
    report = handler(params)
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _check_cauchy(params) -> IdentityReport:
    n = params.get("n", 3)
    rep = IdentityReport("cauchy", {"model": "A", "n": n, **params}, "pass")
    det_form = closed_form("A", "determinant", n)
    prod_form = closed_form("A", "product", n)
    rep.witnesses["determinant_form"] = _rational_witness(det_form)
    rep.witnesses["product_form"] = _rational_witness(prod_form)
    rep.witnesses["comparison"] = "cross-multiplied polynomial equality"
    if not rf_equal(det_form, prod_form):
        rep.status = "fail"
        rep.witnesses["first_difference"] = "closed forms differ as rational functions"
    return rep


def _check_schur(params) -> IdentityReport:
    points = params.get("n", 4)
    if points % 2:
        raise ValueError("type B checks need an even number of points")
    rep = IdentityReport("schur-pfaffian", {"model": "B", "n": points, **params}, "pass")
    pf_form = closed_form("B", "pfaffian", points // 2)
    prod_form = closed_form("B", "product", points // 2)
    rep.witnesses["pfaffian_form"] = _rational_witness(pf_form)
    rep.witnesses["product_form"] = _rational_witness(prod_form)
    rep.witnesses["comparison"] = "cross-multiplied polynomial equality"
    if not rf_equal(pf_form, prod_form):
        rep.status = "fail"
        rep.witnesses["first_difference"] = "closed forms differ as rational functions"
    return rep


def _check_det_formula(params) -> IdentityReport:
    n = params.get("n", 2)
    D = params.get("cutoff", 8)
    rep = IdentityReport("det-formula-A", {"model": "A", "n": n, "cutoff": D, **params}, "pass")
    lhs = vev_fermion(VevSpec.standard_A("fermion", n, D))
    rhs = det_series(n, D)
    _compare_series(rep, [("mode_series", "determinant_series", lhs, rhs)])
    return rep


def _check_product_formula_A(params) -> IdentityReport:
    n = params.get("n", 2)
    D = params.get("cutoff", 8)
    rep = IdentityReport("product-formula-A", {"model": "A", "n": n, "cutoff": D, **params}, "pass")
    lhs = vev_boson(VevSpec.standard_A("boson", n, D))
    rhs = expand(closed_form("A", "product", n), _alphabet_A(n), D)
    _compare_series(rep, [("vertex_series", "product_series", lhs, rhs)])
    return rep


def _check_pf_formula(params) -> IdentityReport:
    points = params.get("n", 4)
    D = params.get("cutoff", 8)
    rep = IdentityReport("pf-formula-B", {"model": "B", "n": points, "cutoff": D, **params}, "pass")
    lhs = vev_fermion(VevSpec.standard_B("fermion", points, D))
    rhs = pf_series(points, D)
    _compare_series(rep, [("mode_series", "pfaffian_series", lhs, rhs)])
    return rep


def _check_product_formula_B(params) -> IdentityReport:
    points = params.get("n", 2)
    D = params.get("cutoff", 8)
    rep = IdentityReport("product-formula-B", {"model": "B", "n": points, "cutoff": D, **params}, "pass")
    lhs = vev_boson(VevSpec.standard_B("boson", points, D))
    rhs = expand(closed_form("B", "product", points // 2), _alphabet_B(points), D)
    _compare_series(rep, [("vertex_series", "product_series", lhs, rhs)])
    return rep


def _check_vev_match_A(params) -> IdentityReport:
    n = params.get("n", 2)
    D = params.get("cutoff", 8)
    rep = IdentityReport("vev-match-A", {"model": "A", "n": n, "cutoff": D, **params}, "pass")
    fer = vev_fermion(VevSpec.standard_A("fermion", n, D))
    bos = vev_boson(VevSpec.standard_A("boson", n, D))
    _compare_series(rep, [("fermion_series", "boson_series", fer, bos)])
    return rep


def _check_vev_match_B(params) -> IdentityReport:
    points = params.get("n", 4)
    D = params.get("cutoff", 8)
    rep = IdentityReport("vev-match-B", {"model": "B", "n": points, "cutoff": D, **params}, "pass")
    fer = vev_fermion(VevSpec.standard_B("fermion", points, D))
    bos = vev_boson(VevSpec.standard_B("boson", points, D))
    pfs = pf_series(points, D)
    _compare_series(rep, [
        ("fermion_series", "boson_series", fer, bos),
        ("fermion_series", "pfaffian_series", fer, pfs),
    ])
    return rep


def _two_point_forms(model: str):
    alpha = ("z", "w")
    if model == "A":
        atom, s = diff_factor(0, 1)
        return RationalFn(MultiPoly.const(alpha, s), {atom: 1})
    return RationalFn(MultiPoly.linear(alpha, 0, 1, -1), {sum_factor(0, 1): 1})


def _swap_two_vars(f: RationalFn) -> RationalFn:
    """Relabel z <-> w in a 2-variable rational function."""
    alpha = f.alphabet
    num = MultiPoly(alpha, {(e[1], e[0]): c for e, c in f.num.terms.items()})
    den = {}
    sign = Rat(1)
    for atom, e in f.den.items():
        if atom[0] == "var":
            den[("var", 1 - atom[1])] = e
        elif atom[0] == "sum":
            den[atom] = e
        else:
            den[atom] = e
            sign *= Rat(-1) ** e
    return RationalFn(num.scale(sign), den)


def _check_supercommutativity(model: str, params) -> IdentityReport:
    D = params.get("cutoff", 8)
    rep = IdentityReport(f"supercommutativity-{model}", {"model": model, "cutoff": D, **params}, "pass")
    F = _two_point_forms(model)
    if model == "A":
        word_zw = (("phi", "z"), ("psi", "w"))
        word_wz = (("psi", "w"), ("phi", "z"))
    else:
        word_zw = (("phi", "z"), ("phi", "w"))
        word_wz = (("phi", "w"), ("phi", "z"))
    s_zw = vev_fermion(VevSpec(model, "fermion", word_zw, D))
    s_wz = vev_fermion(VevSpec(model, "fermion", word_wz, D))
    # both fields are odd: the flip map contributes (-1)^{1*1}, so the two
    # orderings must expand one function F with F(z,w) = -F(w,z)
    swapped = _swap_two_vars(F)
    rep.witnesses["candidate"] = _rational_witness(F)
    rep.witnesses["series_z_w"] = _series_witness(s_zw)
    rep.witnesses["series_w_z"] = _series_witness(s_wz)
    if not rf_equal(swapped, -F):
        rep.status = "fail"
        rep.witnesses["first_difference"] = "candidate is not swap-antisymmetric"
        return rep
    if not analytic_continuation_check(s_zw, F):
        rep.status = "fail"
        rep.witnesses["first_difference"] = "|z|>>|w| series is not the expansion of F"
        return rep
    if not analytic_continuation_check(s_wz, _reorder_to(s_wz.ordering, -F)):
        rep.status = "fail"
        rep.witnesses["first_difference"] = "|w|>>|z| series is not the expansion of -F"
    return rep


def _reorder_to(ordering, f: RationalFn) -> RationalFn:
    # expansion orderings carry the variables; the function itself is fixed
    _ = ordering
    return f


def _check_heisenberg_A(params) -> IdentityReport:
    mmax = params.get("mmax", 5)
    grade = params.get("grade", 12)
    rep = IdentityReport("heisenberg-from-fermions-A",
                         {"model": "A", "n": mmax, "grade": grade, **params}, "pass")
    h = heisenberg_field_A()
    failures = []
    for m in range(-mmax, mmax + 1):
        for n in range(-mmax, mmax + 1):
            expected = Rat(m) if m + n == 0 else Rat(0)
            bad = mode_commutator(h, h, m, n, grade, expected)
            if bad:
                failures.append((m, n, bad[0]))
    rep.witnesses["relation"] = "[h_m, h_n] = m delta_{m+n,0} on energy2 <= %d" % grade
    if failures:
        m, n, (state, residual) = failures[0]
        rep.status = "fail"
        rep.witnesses["first_difference"] = f"(m,n)=({m},{n}) on {state}: residual {residual!r}"
    return rep


def _check_heisenberg_B(params) -> IdentityReport:
    mmax = params.get("mmax", 7)
    grade = params.get("grade", 10)
    rep = IdentityReport("twisted-heisenberg-from-fermions-B",
                         {"model": "B", "n": mmax, "grade": grade, **params}, "pass")
    h = twisted_heisenberg_field_B()
    failures = []
    for m in range(-mmax, mmax + 1, 2):
        for n in range(-mmax, mmax + 1, 2):
            expected = Fraction(m, 2) if m + n == 0 else Rat(0)
            bad = mode_commutator(h, h, m, n, grade, expected)
            if bad:
                failures.append(f"(m,n)=({m},{n}) on {bad[0][0]}")
    for m in range(-mmax + 1, mmax, 2):  # even mode labels vanish identically
        op = h.mode(m)
        for s in states_B(grade):
            if not op(FockVector.basis(s)).is_zero():
                failures.append(f"h_{m} != 0 on {s}")
                break
    rep.witnesses["relation"] = (
        "[h_m, h_n] = (m/2) delta_{m+n,0} for odd m, n and h_even = 0 on degree <= %d" % grade
    )
    if failures:
        rep.status = "fail"
        rep.witnesses["first_difference"] = str(failures[0])
    return rep


def _check_character_A(params) -> IdentityReport:
    dmax = params.get("dmax", 12)
    charge = params.get("charge", 0)
    rep = IdentityReport("character-A", {"model": "A", "n": dmax, "charge": charge, **params}, "pass")
    table = dict(character_A(charge, charge * charge + 2 * dmax))
    expected = {charge * charge + 2 * d: partition_count(d) for d in range(dmax + 1)}
    rep.witnesses["dimensions"] = str(sorted(table.items()))
    rep.witnesses["oracle"] = str(sorted(expected.items()))
    for e2 in range(charge * charge + 2 * dmax + 1):
        if table.get(e2, 0) != expected.get(e2, 0):
            rep.status = "fail"
            rep.witnesses["first_difference"] = (
                f"energy2={e2}: dim {table.get(e2, 0)} vs partitions {expected.get(e2, 0)}"
            )
            break
    return rep


def _check_character_B(params) -> IdentityReport:
    dmax = params.get("dmax", 20)
    rep = IdentityReport("character-B", {"model": "B", "n": dmax, **params}, "pass")
    table = dict(character_B(dmax))
    expected = {d: 2 * odd_partition_count(d) for d in range(dmax + 1)}
    rep.witnesses["dimensions"] = str(sorted(table.items()))
    rep.witnesses["oracle"] = str(sorted(expected.items()))
    for d in range(dmax + 1):
        if table.get(d, 0) != expected[d]:
            rep.status = "fail"
            rep.witnesses["first_difference"] = (
                f"degree={d}: dim {table.get(d, 0)} vs 2*odd partitions {expected[d]}"
            )
            break
    return rep


def _check_ope_residues(params) -> IdentityReport:
    grade = params.get("grade", 8)
    rep = IdentityReport("ope-residues", {"grade": grade, **params}, "pass")
    problems = []

    fa = _two_point_forms("A")  # 1/(z-w)
    res_a = residue_at(fa, 0, 1, 1, 0)
    rep.witnesses["type_A_residue"] = _rational_witness(res_a)
    if not (res_a == RationalFn.const(fa.alphabet, 1)):
        problems.append("Res_{z=w} of the type A two-point function is not 1")

    fb = _two_point_forms("B")  # (z-w)/(z+w)
    res_b = residue_at(fb, 0, -1, 1, 0)
    rep.witnesses["type_B_residue"] = _rational_witness(res_b)
    minus_2w = RationalFn.from_poly(MultiPoly.var(fb.alphabet, 1).scale(-2))
    if not (res_b == minus_2w):
        problems.append("Res_{z=-w} of the type B two-point function is not -2w")
    else:
        shifted = MultiPoly(fb.alphabet, {(e[0], e[1] - 1): c for e, c in res_b.num.terms.items()})
        if not (shifted == MultiPoly.const(fb.alphabet, -2)):
            problems.append("w^{-1} shift of the type B residue is not the constant -2")
        rep.witnesses["shifted_residue"] = str(-2)

    # mode level: the z^{-1} coefficient of the (anti)commutator series is the
    # residue of the rational two-point operator, localized at its only pole
    window = grade + 2
    for s in states_B(grade):
        v = FockVector.basis(s)
        for k in range(-window, window + 1):
            got = apply_mode_B(-1, apply_mode_B(k, v)) + apply_mode_B(k, apply_mode_B(-1, v))
            want = v.scale(-2) if k == 1 else FockVector()
            if got != want:
                problems.append(f"type B mode residue fails at k={k} on {s}")
                break
    from .fock import states_A

    for s in states_A(grade):
        v = FockVector.basis(s)
        for k in range(-window, window + 1):
            got = apply_mode_A("phi", -1, apply_mode_A("psi", k, v)) + apply_mode_A(
                "psi", k, apply_mode_A("phi", -1, v))
            want = v if k == 0 else FockVector()
            if got != want:
                problems.append(f"type A mode residue fails at k={k} on {s}")
                break
    if problems:
        rep.status = "fail"
        rep.witnesses["first_difference"] = problems[0]
    return rep


def _check_hopf(params) -> IdentityReport:
    window = params.get("window", 6)
    grade = params.get("grade", 8)
    rep = IdentityReport("hopf-relations", {"grade": grade, "window": window, **params}, "pass")
    problems = []
    from .fock import states_A

    cases = [
        (phi_A(), states_A(grade), FockVector.basis(FermionStateA((0,), ()))),
        (psi_A(), states_A(grade), FockVector.basis(FermionStateA((), (0,)))),
        (phi_B(), states_B(grade), FockVector.basis(FermionStateB((0,)))),
    ]
    for base, basis, created in cases:
        tt = act_hopf("TT", base)
        dt = act_hopf("DT", base)
        td = act_hopf("TD", base)
        for k in range(-window, window + 1):
            for s in basis:
                v = FockVector.basis(s)
                if tt.coeff(k)(v) != base.coeff(k)(v):
                    problems.append(f"T^2 != id for {base.name} at z^{k}")
                    break
                if dt.coeff(k)(v) + td.coeff(k)(v) != FockVector():
                    problems.append(f"DT != -TD for {base.name} at z^{k}")
                    break
        # vacuum and modified creation: a(z)|0> is regular at z=0 and its
        # value there is the projected state pi_f(a)
        vac = FockVector.basis(VACUUM_A if base.space == "A" else VACUUM_B)
        for k in range(-window, 0):
            if not base.coeff(k)(vac).is_zero():
                problems.append(f"{base.name}(z)|0> has a negative z-power {k}")
        if base.coeff(0)(vac) != created:
            problems.append(f"{base.name}(z)|0> at z=0 is not the projected state")
    # T phi_B projects where phi_B does
    tphi = act_hopf("T", phi_B())
    if tphi.coeff(0)(FockVector.basis(VACUUM_B)) != FockVector.basis(FermionStateB((0,))):
        problems.append("T phi_B creation value differs from phi_B")
    if problems:
        rep.status = "fail"
        rep.witnesses["first_difference"] = problems[0]
    rep.witnesses["relations"] = "T^2 = 1, DT = -TD, vacuum regularity, creation values"
    return rep


_CHECKS = {
    "cauchy": _check_cauchy,
    "schur-pfaffian": _check_schur,
    "det-formula-A": _check_det_formula,
    "product-formula-A": _check_product_formula_A,
    "pf-formula-B": _check_pf_formula,
    "product-formula-B": _check_product_formula_B,
    "vev-match-A": _check_vev_match_A,
    "vev-match-B": _check_vev_match_B,
    "supercommutativity-A": lambda p: _check_supercommutativity("A", p),
    "supercommutativity-B": lambda p: _check_supercommutativity("B", p),
    "heisenberg-from-fermions-A": _check_heisenberg_A,
    "twisted-heisenberg-from-fermions-B": _check_heisenberg_B,
    "character-A": _check_character_A,
    "character-B": _check_character_B,
    "ope-residues": _check_ope_residues,
    "hopf-relations": _check_hopf,
}

CHECK_NAMES = tuple(sorted(_CHECKS))
