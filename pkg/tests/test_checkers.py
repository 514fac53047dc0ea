import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garding import identities as ids
from garding.checkers import (
    ProbeConfig,
    SquaresCertificate,
    Status,
    bivariate_multiaffine_criterion,
    garding_decide,
    garding_subtract,
    halton_rays,
    in_garding_component,
    interior_point,
    lorentzian_check,
    m_convex_violation,
    mrs_ray_probe,
    polyhedral_component,
    quadratic_signature_test,
    rayleigh_check,
    rayleigh_difference,
    relation_probe,
    stability_probe,
    ulc_check,
)
from garding.matroid import Matroid, genfun
from garding.polycore import Polynomial, elementary_symmetric, parse_polynomial as P
from garding.realroots import from_root_sequence, mrs_check


def family(c) -> Polynomial:
    return Polynomial(2, {(3, 1): 1, (2, 2): Fraction(c), (1, 3): 1})


# ultra log-concavity


def ulc_brute(a):
    n = len(a) - 1
    b = [Fraction(x) / comb(n, k) for k, x in enumerate(a)]
    ok = all(b[k] ** 2 >= b[k - 1] * b[k + 1] for k in range(1, n))
    nz = [k for k, x in enumerate(b) if x]
    return ok and (not nz or nz == list(range(nz[0], nz[-1] + 1)))


def test_ulc_examples():
    assert ulc_check([1, 2, 1])
    assert ulc_check([1, 3, 1])
    assert not ulc_check([1, 0, 1])
    assert ulc_check([21, 24, 9, 1])
    assert not ulc_check([1, 1, 1])


@given(st.lists(st.integers(min_value=0, max_value=30), min_size=1, max_size=6))
def test_ulc_matches_brute_force(a):
    assert ulc_check(a) == ulc_brute(a)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=-8, max_value=0), min_size=1, max_size=5))
def test_monotone_root_sequences_with_nonpositive_roots_are_ulc(roots):
    f = from_root_sequence(sorted((Fraction(r) for r in roots), reverse=True))
    coeffs = f.univariate_coefficients()
    assert all(c >= 0 for c in coeffs)
    assert ulc_check(coeffs)


# decision tiers


@pytest.mark.parametrize("text, status, certificate", [
    ("3", "Proven", "T0-constant"),
    ("-1", "Refuted", None),
    ("x^3 + x^2", "Proven", "T1-mrs"),
    ("x^3 + 9*x^2 + 24*x + 21", "Refuted", None),
    ("x1 + 2*x2 - 1", "Proven", "T2-affine"),
    ("x1 - x2", "Refuted", None),
    ("x1*x2 + x1 + x2", "Proven", "T3-bivariate"),
    ("x1*x2 - 1", "Proven", "T3-bivariate"),
    ("x1^2 + 4*x1*x2 + x2^2", "Proven", "T4-quadratic"),
    ("x1*x2 + x1*x3 + x2*x3", "Proven", "T4-quadratic"),
    ("x1^2 + x1*x2 + x2^2", "Refuted", None),
    ("x1^3 - x2^3", "Refuted", None),
    ("x1*x2*x3 + x1 + x2 + x3", "Refuted", None),
])
def test_decision_tiers(text, status, certificate):
    v = garding_decide(P(text))
    assert v.status == status
    if certificate:
        assert v.certificate == certificate
    if v.is_refuted:
        assert "condition" in v.witness


def test_bivariate_criterion_boundary():
    assert bivariate_multiaffine_criterion(1, 1, 1, 1).is_proven
    assert bivariate_multiaffine_criterion(1, 0, 0, 1).is_refuted
    assert bivariate_multiaffine_criterion(0, 1, 1, 5).is_proven


def test_quadratic_signature():
    assert quadratic_signature_test(P("x1*x2 + x1*x3 + x2*x3")).report["positive_eigenvalues"] == 1
    assert quadratic_signature_test(P("x1^2 + x2^2")).is_refuted


def test_elementary_symmetric_are_not_refuted():
    cfg = ProbeConfig()
    for n in range(2, 5):
        for k in range(1, n + 1):
            assert not garding_decide(elementary_symmetric(n, k), cfg).is_refuted


def test_polyhedral_component():
    h = polyhedral_component(P("x1*x2 + x1 + x2"))
    assert h.violations == ()
    p = interior_point(h)
    assert h.contains(p)
    assert in_garding_component(P("x1*x2 - 1"), [2, 2])
    assert not in_garding_component(P("x1*x2 - 1"), [-2, -2])


def test_halton_rays_are_positive_and_deterministic():
    rays = halton_rays(3, 5)
    assert rays == halton_rays(3, 5)
    assert rays[0] == (1, 1, 1)
    assert all(v > 0 for r in rays for v in r)
    assert len(set(rays)) == len(rays)


def test_probe_config_validation():
    with pytest.raises(ValueError):
        ProbeConfig(n_rays=0)
    with pytest.raises(ValueError):
        mrs_ray_probe(P("x1*x2"), ProbeConfig(extra_rays=(([1], [0]),)))


# threshold family c: x^3 y + c x^2 y^2 + x y^3


def test_threshold_family_lorentzian():
    assert lorentzian_check(family(Fraction(3, 2))).is_proven
    assert lorentzian_check(family(2)).is_proven
    assert lorentzian_check(family(Fraction(7, 5))).is_refuted


def test_threshold_family_probes():
    assert garding_decide(family(Fraction(17, 10))).is_refuted
    grid = ProbeConfig(n_basepoints=8, n_rays=8)
    assert stability_probe(family(Fraction(9, 5)), grid).is_refuted
    assert stability_probe(family(2), grid).is_inconclusive


def test_stability_probe_witness_is_exact():
    v = stability_probe(family(Fraction(9, 5)), ProbeConfig(n_basepoints=8, n_rays=8))
    from garding.polycore import along_ray
    from garding.realroots import real_rooted_check
    g = along_ray(family(Fraction(9, 5)), v.witness["a"], v.witness["b"])
    assert not real_rooted_check(g)


# Lorentzian and M-convexity


def test_m_convexity():
    assert m_convex_violation([(2, 0), (0, 2)]) is not None
    assert m_convex_violation([(2, 0), (1, 1), (0, 2)]) is None
    assert lorentzian_check(P("x1^2 + x2^2")).is_refuted
    with pytest.raises(ValueError):
        lorentzian_check(P("x1^2 + x2"))


def test_matroid_basis_polynomials_are_lorentzian():
    for name in ("fano", "mk4", "w3", "p6", "q6", "s8"):
        assert lorentzian_check(genfun(Matroid.fixture(name), "bsgf")).is_proven, name


# Rayleigh


def test_rayleigh_difference_requires_multiaffine():
    with pytest.raises(ValueError):
        rayleigh_difference(P("x1^2*x2"), 1, 2)
    with pytest.raises(ValueError):
        rayleigh_difference(P("x1*x2"), 1, 1)


def test_uniform_basis_polynomials_are_rayleigh():
    for n in range(2, 6):
        for r in range(1, n):
            v = rayleigh_check(genfun(Matroid.uniform(r, n), "bsgf"))
            assert not v.is_refuted


def test_rayleigh_negative_coefficient():
    assert rayleigh_check(P("x1*x2 - x1")).is_refuted


def test_s8_basis_polynomial_refuted_with_exact_witness():
    b = genfun(Matroid.fixture("s8"), "bsgf")
    v = rayleigh_check(b)
    assert v.is_refuted
    i, j = v.witness["pair"]
    value = rayleigh_difference(b, i, j)(v.witness["point"])
    assert value < 0 and value == v.witness["value"]


def test_fano_spanning_rayleigh_with_certificate():
    s = genfun(Matroid.fano(), "ssgf", "mobius")
    cfg = ProbeConfig(n_basepoints=2, n_rays=2)
    assert rayleigh_check(s, cfg).is_inconclusive
    v = rayleigh_check(s, cfg, ids.certificates_for(s))
    assert v.is_proven
    assert "certified" in v.certificate


def test_certificate_rejects_wrong_polynomial():
    cert = ids.fano_rayleigh_certificate()
    s = genfun(Matroid.fano(), "ssgf", "mobius")
    assert cert.verify(rayleigh_difference(s, 6, 7))
    assert not cert.verify(rayleigh_difference(s, 6, 7) + 1)
    bad = SquaresCertificate(((P("-1", 1), P("x", 1)),), P("0", 1))
    assert not bad.verify(P("-x^2"))


# relations


def test_relation_probes():
    f, g = P("x1 + x2", 2), P("x1*x2", 2)
    assert not relation_probe(f, g, "domination").is_refuted
    assert relation_probe(P("0", 2), g, "domination").is_proven
    with pytest.raises(ValueError):
        relation_probe(f, g, "unknown")
    with pytest.raises(ValueError):
        relation_probe(f, P("0", 2), "domination")


def test_garding_subtract():
    result, verdict = garding_subtract(P("x1*x2 + x1 + x2"), P("x1 + x2", 2), Fraction(1, 2))
    assert result == P("x1*x2 + 1/2*x1 + 1/2*x2")
    assert verdict.is_proven
    with pytest.raises(ValueError):
        garding_subtract(P("x1*x2"), P("x1", 2), 0)


# verdict serialisation


def test_verdicts_are_deterministic_and_json():
    f = family(Fraction(17, 10))
    a = garding_decide(f, ProbeConfig(seed=3)).to_json()
    b = garding_decide(f, ProbeConfig(seed=3)).to_json()
    assert a == b
    assert json.loads(json.dumps(a)) == a
    assert a["status"] == Status.REFUTED.value


def test_exit_codes():
    assert garding_decide(P("3")).exit_code == 0
    assert garding_decide(P("-3")).exit_code == 1
    assert mrs_ray_probe(P("x1*x2 + x1 + x2 + x1*x3")).exit_code in (1, 2)
