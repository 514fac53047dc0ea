"""The acceptance report: every criterion as a list of exact expected/observed comparisons."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import identities as ids
from .checkers import (
    ProbeConfig,
    garding_decide,
    lorentzian_check,
    mrs_ray_probe,
    rayleigh_check,
    rayleigh_difference,
    stability_probe,
    ulc_check,
)
from .matroid import (
    Matroid,
    deletion_contraction_csgf,
    deletion_contraction_ssgf,
    genfun,
    two_block_specialize,
    uniform_ssgf_closed_form,
)
from .matx import MatrixClass, charpoly_p, charpoly_q, classify, random_m_matrix
from .polycore import (
    Polynomial,
    along_ray,
    bottom_part,
    combinatorial_inversion,
    diagonal_project,
    drop_variable,
    format_polynomial,
    homogenize,
    invert_ttau,
    parse_polynomial,
    polarization_derivative_pair,
    polarize,
    restrict,
    subset_monomial,
    top_part,
)
from .realroots import from_root_sequence, largest_real_root, mrs_check, real_rooted_check, root_sequence

MK4_EDGES = [(1, 2), (2, 3), (1, 3), (3, 4), (1, 4), (2, 4)]
EX_MMATRIX = [[2, -1, 0, -1], [0, 1, 0, -1], [0, -1, 1, 0], [-1, 0, 0, 1]]


@dataclass
class ReportEntry:
    key: str
    check: str
    expected: str
    observed: str

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def to_json(self) -> dict:
        return {"key": self.key, "check": self.check, "expected": self.expected,
                "observed": self.observed, "status": "pass" if self.passed else "fail"}


@dataclass
class CriterionResult:
    key: str
    title: str
    entries: list[ReportEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.entries) and all(e.passed for e in self.entries)

    def add(self, check: str, expected: Any, observed: Any) -> None:
        self.entries.append(ReportEntry(self.key, check, _show(expected), _show(observed)))

    def to_json(self) -> dict:
        return {"key": self.key, "title": self.title, "status": "pass" if self.passed else "fail",
                "entries": [e.to_json() for e in self.entries]}


def _show(value: Any) -> str:
    if isinstance(value, Polynomial):
        return format_polynomial(value, "t" if value.nvars == 1 else "x")
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_show(v) for v in value) + ")"
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    return str(value)


def _same(pair: tuple[Polynomial, Polynomial]) -> bool:
    return pair[0] == pair[1]


def _uni(text: str) -> Polynomial:
    return parse_polynomial(text)


# ---------------------------------------------------------------------------
# criteria


def fano_ray(cfg: ProbeConfig) -> CriterionResult:
    res = CriterionResult("AC1", "Fano generating functions along a fixed line")
    b, s = ids.fano_ray_pullbacks()
    res.add("basis polynomial along the line", _uni("28*t^3 - 12*t + 4"), b)
    res.add("basis polynomial has monotone root sequence", False, mrs_check(b).holds)
    res.add("spanning polynomial along the line",
            _uni("t^7 + 7*t^6 + 18*t^5 + 20*t^4 + t^3 - 21*t^2 - 4*t + 6"), s)
    res.add("spanning polynomial has monotone root sequence", False, mrs_check(s).holds)
    return res


def fano_discriminant(cfg: ProbeConfig) -> CriterionResult:
    res = CriterionResult("AC2", "Cospanning Fano discriminant identities")
    res.add("R67 = P b1^2 + Q b1 + R after substitution", True, _same(ids.quadratic_in_beta1_identity()))
    res.add("Q^2 - 4PR factorisation in free variables", True, _same(ids.discriminant_identity()))
    res.add("A in free variables", True, _same(ids.fano_free_a_identity()))
    res.add("brute-force cospanning polynomial = A v6 v7 + B v6 + C v7 + D", True,
            _same(ids.fano_cospanning_split_identity()))
    res.add("brute-force Rayleigh difference (6,7) = BC - AD", True,
            _same(ids.fano_cospanning_rayleigh_identity()))
    return res


def six_element_decompositions(cfg: ProbeConfig) -> CriterionResult:
    res = CriterionResult("AC3", "Six-element matroid decompositions")
    res.add("symmetric cubic identity", True, _same(ids.symmetric_cube_identity()))
    res.add("M(K4) spanning polynomial = f - g", True, _same(ids.k4_split_identity()))
    res.add("Q6 two-block spanning polynomial = f u - g", True, _same(ids.q6_two_block_identity()))
    res.add("Q6 spanning polynomial expansion in v", True, _same(ids.q6_spanning_identity()))
    res.add("W3 spanning polynomial = v2 f - g", True, _same(ids.whirl_split_identity()))
    return res


def fano_rayleigh(cfg: ProbeConfig) -> CriterionResult:
    res = CriterionResult("AC4", "Fano spanning Rayleigh difference for the pair (6,7)")
    lhs, printed = ids.fano_rayleigh_identity()
    res.add("Delta67 - (C2 w1^2 + C1 w1 + C0) with the printed coefficients", "0",
            format_polynomial(lhs - printed, "w"))
    lhs, corrected = ids.fano_rayleigh_identity(corrected=True)
    res.add("the same with the common factor prod(1 + w_i) - 1 in C2 and C1", "0",
            format_polynomial(lhs - corrected, "w"))
    res.add("C0 rewritten as a square plus nonnegative terms", True, _same(ids.fano_c0_identity()))
    s = genfun(Matroid.fano(), "ssgf", "mobius")
    res.add("squares certificate for (6,7) verifies", True,
            ids.fano_rayleigh_certificate().verify(rayleigh_difference(s, 6, 7)))
    return res


def _fixtures() -> dict[str, Matroid]:
    out = {name: Matroid.fixture(name) for name in ("fano", "mk4", "w3", "p6", "q6", "s8")}
    out["mk4-graph"] = Matroid.from_graph(4, MK4_EDGES)
    return out


def matroid_cross_oracles(cfg: ProbeConfig) -> CriterionResult:
    res = CriterionResult("AC5", "Generating-function cross-oracles")
    three_way = [Matroid.uniform(r, n) for n in range(1, 6) for r in range(n + 1)]
    fixtures = _fixtures()
    three_way += [fixtures["mk4"], fixtures["fano"]]
    agree = sum(
        genfun(m, "ssgf", "brute") == genfun(m, "ssgf", "mobius") == genfun(m, "ssgf", "recursive")
        for m in three_way
    )
    res.add("spanning polynomial: enumeration = Moebius = recursion", len(three_way), agree)
    res.add("graph fixture equals stored M(K4)", True, fixtures["mk4"] == fixtures["mk4-graph"])
    dc_total = dc_ok = 0
    dual_ok = rel_ok = 0
    for m in fixtures.values():
        s, c = genfun(m, "ssgf"), genfun(m, "csgf")
        i, b = genfun(m, "isgf"), genfun(m, "bsgf")
        for e in m.elements:
            dc_total += 2
            dc_ok += deletion_contraction_ssgf(m, e) == s
            dc_ok += deletion_contraction_csgf(m, e) == c
        dual_ok += c == genfun(m.dual(), "ssgf", "mobius")
        rel_ok += b == bottom_part(s) == top_part(i) and c == combinatorial_inversion(i)
    res.add("deletion-contraction on every element", dc_total, dc_ok)
    res.add("cospanning = spanning of the dual", len(fixtures), dual_ok)
    res.add("basis = bottom(spanning) = top(independent), cospanning = tau(independent)",
            len(fixtures), rel_ok)
    return res


def _alpha(r: int, q: int, t: Fraction, y: Fraction):
    return largest_real_root(drop_variable(restrict(two_block_specialize(r, q, t), 2, y), 2))


def uniform_family(cfg: ProbeConfig) -> CriterionResult:
    res = CriterionResult("AC6", "Uniform matroids and their one-basis relaxations")
    cases = [(r, n) for n in range(1, 7) for r in range(n + 1)]
    closed = sum(genfun(Matroid.uniform(r, n), "ssgf") == uniform_ssgf_closed_form(r, n) for r, n in cases)
    res.add("spanning polynomial = sum_{j>=r} sigma_j", len(cases), closed)
    zero_minus_one = 0
    for r, n in cases:
        d = along_ray(uniform_ssgf_closed_form(r, n), [1] * n, [0] * n)
        seq = root_sequence(d)
        ok = mrs_check(d).holds and all(x.is_rational() and x.value in (0, -1) for x in seq.entries)
        zero_minus_one += ok
    res.add("diagonal root sequences use only 0 and -1", len(cases), zero_minus_one)
    relaxed = [(r, n) for n in range(2, 7) for r in range(1, n)]
    rel_ok = 0
    for r, n in relaxed:
        lhs = genfun(Matroid.deleted_basis_uniform(r, n), "ssgf")
        rel_ok += lhs == uniform_ssgf_closed_form(r, n) - subset_monomial(n, range(1, r + 1))
    res.add("relaxation = uniform minus the removed basis monomial", len(relaxed), rel_ok)
    refuted = 0
    for r in range(1, 5):
        for q in range(1, 5):
            refuted += mrs_ray_probe(two_block_specialize(r, q, 1), cfg).is_refuted
    res.add("two-block relaxations refuted by ray probes", 0, refuted)
    grid = [(r, q, Fraction(t), Fraction(y)) for r in range(2, 5) for q in range(1, 5)
            for t in (0, Fraction(1, 2), 1) for y in (Fraction(1, 2), 1, 2)]
    ordered = sum(_alpha(r - 1, q, t, y) <= _alpha(r, q, t, y) for r, q, t, y in grid)
    res.add("largest roots increase with r on the sample grid", len(grid), ordered)
    return res


def ulc_versus_mrs(cfg: ProbeConfig) -> CriterionResult:
    res = CriterionResult("AC7", "Ultra log-concavity against monotone root sequences")
    res.add("(21, 24, 9, 1) is ultra log-concave", True, ulc_check([21, 24, 9, 1]))
    res.add("x^3 + 9x^2 + 24x + 21 has monotone root sequence", False,
            mrs_check(_uni("x^3 + 9*x^2 + 24*x + 21")).holds)
    rng = random.Random(cfg.seed)
    ok = 0
    for _ in range(50):
        d = rng.randint(1, 6)
        roots = sorted((-Fraction(rng.randint(0, 12), rng.randint(1, 4)) for _ in range(d)), reverse=True)
        f = from_root_sequence(roots)
        coeffs = [f.coefficient((k,)) for k in range(d + 1)]
        ok += mrs_check(f).holds and all(c >= 0 for c in coeffs) and ulc_check(coeffs)
    res.add("generated monotone-root-sequence instances are ultra log-concave", 50, ok)
    return res


def m_matrices(cfg: ProbeConfig) -> CriterionResult:
    res = CriterionResult("AC8", "M-matrix characteristic polynomials")
    res.add("4x4 fixture classification", MatrixClass.M_MATRIX, classify(EX_MMATRIX))
    p = charpoly_p(EX_MMATRIX)
    u = along_ray(p, [0, 1, 2, 1, 1], [1, 0, 0, 0, 0])
    res.add("p_A(1, t, 2t, t, t)", _uni("7*t^3 + 12*t^2 + 6*t + 1"), u)
    res.add("p_A(1, t, 2t, t, t) has monotone root sequence", False, mrs_check(u).holds)
    rng = random.Random(cfg.seed)
    not_refuted = ulc = 0
    for _ in range(20):
        m = random_m_matrix(rng.randint(2, 5), rng)
        q = charpoly_q(m)
        not_refuted += not rayleigh_check(q, cfg).is_refuted
        d = along_ray(q, [1] * m.order, [0] * m.order)
        ulc += ulc_check([d.coefficient((k,)) for k in range(m.order + 1)])
    res.add("random M-matrices: q_A not refuted as Rayleigh", 20, not_refuted)
    res.add("random M-matrices: diagonal coefficients ultra log-concave", 20, ulc)
    return res


def bivariate_family(c: Fraction) -> Polynomial:
    return Polynomial(2, {(3, 1): 1, (2, 2): c, (1, 3): 1})


def univariate_examples(cfg: ProbeConfig) -> CriterionResult:
    res = CriterionResult("AC9", "Univariate transforms and the bivariate threshold family")
    f = _uni("x^4 + 4*x^3 + 6*x^2")
    tt = invert_ttau(f, [4])
    res.add("T_tau((x+1)^4 - 1 - 4x)", _uni("6*x^2 - 4*x + 1"), tt)
    res.add("T_tau image is real-rooted", False, real_rooted_check(tt))
    res.add("root sequence of (x+1)^4 - 1 - 4x", True, root_sequence(f).equals([0, 0, -1, -1]))
    h = homogenize(_uni("t^3 + 3*t^2 + 3*t"))
    slice_ = drop_variable(restrict(h, 1, 1), 1)
    res.add("homogenization at t = 1", _uni("3*y^2 + 3*y + 1"), slice_)
    res.add("homogenization slice is real-rooted", False, real_rooted_check(slice_))
    res.add("Lorentzian at c = 3/2", "Proven", lorentzian_check(bivariate_family(Fraction(3, 2))).status)
    res.add("Lorentzian at c = 7/5", "Refuted", lorentzian_check(bivariate_family(Fraction(7, 5))).status)
    res.add("Garding probes at c = 17/10", "Refuted", garding_decide(bivariate_family(Fraction(17, 10)), cfg).status)
    grid = ProbeConfig(seed=cfg.seed, n_basepoints=8, n_rays=8)
    res.add("stability grid at c = 9/5", "Refuted", stability_probe(bivariate_family(Fraction(9, 5)), grid).status)
    res.add("stability grid at c = 2", "Inconclusive", stability_probe(bivariate_family(Fraction(2)), grid).status)
    return res


def _random_poly(rng: random.Random, nvars: int, deg: int) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        exp = [0] * nvars
        for _ in range(rng.randint(0, deg)):
            exp[rng.randrange(nvars)] += 1
        terms[tuple(exp)] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return Polynomial(nvars, terms)


def polarization_suite(cfg: ProbeConfig) -> CriterionResult:
    res = CriterionResult("AC10", "Polarization, projection and involutions")
    rng = random.Random(cfg.seed)
    n_cases = 40
    round_trip = deriv = ttau = tau = 0
    ttau_even = even_total = 0
    deriv_total = 0
    for _ in range(n_cases):
        nvars = rng.randint(1, 3)
        f = _random_poly(rng, nvars, 4)
        kappa = [m + rng.randint(0, 1) for m in f.multidegree]
        kappa = [max(k, 1) for k in kappa]
        round_trip += diagonal_project(polarize(f, kappa), kappa) == f
        for i in range(1, nvars + 1):
            deriv_total += 1
            deriv += _same(polarization_derivative_pair(f, kappa, i, rng.randint(1, kappa[i - 1])))
        twice = invert_ttau(invert_ttau(f, kappa), kappa)
        ttau += twice == f.scale((-1) ** sum(kappa))
        if sum(kappa) % 2 == 0:
            even_total += 1
            ttau_even += twice == f
        g = polarize(f, kappa)
        tau += combinatorial_inversion(combinatorial_inversion(g)) == g
    res.add("projection after polarization is the identity", n_cases, round_trip)
    res.add("derivative of a polarization", deriv_total, deriv)
    res.add("T_tau applied twice is (-1)^|kappa| times the identity", n_cases, ttau)
    res.add("T_tau is an involution when |kappa| is even", even_total, ttau_even)
    res.add("tau is an involution on multi-affine input", n_cases, tau)
    return res


def negative_controls(cfg: ProbeConfig) -> CriterionResult:
    res = CriterionResult("AC11", "Negative controls")
    b8 = genfun(Matroid.fixture("s8"), "bsgf")
    v = rayleigh_check(b8, cfg)
    res.add("S8 basis polynomial Rayleigh verdict", "Refuted", v.status)
    witness_ok = False
    if v.is_refuted and "pair" in v.witness:
        i, j = v.witness["pair"]
        value = rayleigh_difference(b8, i, j)(v.witness["point"])
        witness_ok = value < 0 and value == v.witness["value"]
    res.add("S8 witness re-evaluates to a negative exact value", True, witness_ok)
    bf = genfun(Matroid.fano(), "bsgf")
    res.add("Fano basis polynomial Lorentzian verdict", "Proven", lorentzian_check(bf).status)
    ray_cfg = ProbeConfig(seed=cfg.seed, n_basepoints=cfg.n_basepoints, n_rays=cfg.n_rays,
                          extra_rays=(([1] * 7, ids.FANO_RAY_BASE),))
    res.add("Fano basis polynomial ray probe", "Refuted", mrs_ray_probe(bf, ray_cfg).status)
    return res


CRITERIA: list[Callable[[ProbeConfig], CriterionResult]] = [
    fano_ray,
    fano_discriminant,
    six_element_decompositions,
    fano_rayleigh,
    matroid_cross_oracles,
    uniform_family,
    ulc_versus_mrs,
    m_matrices,
    univariate_examples,
    polarization_suite,
    negative_controls,
]


def run_report(cfg: ProbeConfig | None = None) -> list[CriterionResult]:
    cfg = cfg or ProbeConfig()
    return [criterion(cfg) for criterion in CRITERIA]


def format_report(results: list[CriterionResult], verbose: bool = False) -> str:
    lines = []
    for r in results:
        lines.append(f"{r.key:<5} {'PASS' if r.passed else 'FAIL'}  {r.title}")
        if verbose or not r.passed:
            for e in r.entries:
                mark = "ok " if e.passed else "BAD"
                lines.append(f"      {mark} {e.check}")
                if not e.passed:
                    lines.append(f"          expected: {e.expected}")
                    lines.append(f"          observed: {e.observed}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} criteria pass")
    return "\n".join(lines)
