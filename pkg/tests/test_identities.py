import itertools

import pytest
import sympy

from garding import identities as ids
from garding.matroid import FANO_LINES, Matroid, genfun
from garding.polycore import Polynomial

EXACT = [k for k in ids.IDENTITIES if k != "fano-rayleigh-67"]


@pytest.mark.parametrize("key", EXACT)
def test_identity_holds(key):
    lhs, rhs = ids.IDENTITIES[key]()
    assert lhs == rhs


@pytest.mark.xfail(strict=True, reason="the printed C2 and C1 use prod(1 + w_i) where prod(1 + w_i) - 1 is needed")
def test_fano_rayleigh_with_printed_coefficients():
    lhs, rhs = ids.fano_rayleigh_identity()
    assert lhs == rhs


def test_printed_and_corrected_forms_differ_only_in_c2_c1():
    lhs, printed = ids.fano_rayleigh_identity()
    _, corrected = ids.fano_rayleigh_identity(corrected=True)
    w = [Polynomial.variable(7, i) for i in range(1, 8)]
    a, b = w[1] * w[2], w[3] * w[4]
    gap = w[0] * w[0] * (w[1] + w[2] + w[3] + w[4] + a + b) + (w[0] * (a + b)).scale(2)
    assert printed - corrected == gap
    assert lhs == corrected


def sympy_fano_spanning():
    ws = sympy.symbols("w1:8")
    lines = {frozenset(line) for line in FANO_LINES}
    expr = sympy.Integer(0)
    for k in range(3, 8):
        for subset in itertools.combinations(range(1, 8), k):
            if k == 3 and frozenset(subset) in lines:
                continue
            expr += sympy.Mul(*[ws[i - 1] for i in subset])
    return expr, ws


def test_fano_rayleigh_difference_against_sympy():
    s, ws = sympy_fano_spanning()
    w1, w2, w3, w4, w5, w6, w7 = ws
    delta = sympy.expand(sympy.diff(s, w6) * sympy.diff(s, w7) - s * sympy.diff(s, w6, w7))
    e_hat = (1 + w2) * (1 + w3) * (1 + w4) * (1 + w5) - 1
    a, b = w2 * w3, w4 * w5
    c2 = e_hat * (w2 + w3 + w4 + w5 + a + b)
    c1 = 2 * e_hat * (a + b)
    c0 = a ** 2 * (1 + w4) * (1 + w5) + b ** 2 * (1 + w2) * (1 + w3) - 2 * a * b
    assert sympy.expand(delta - (c2 * w1 ** 2 + c1 * w1 + c0)) == 0
    assert sympy.expand(delta - ((c2 + w2 + w3 + w4 + w5 + a + b) * w1 ** 2 + c1 * w1 + c0)) != 0


def test_fano_spanning_matches_sympy_enumeration():
    s, ws = sympy_fano_spanning()
    ours = genfun(Matroid.fano(), "ssgf", "mobius")
    poly = sympy.Poly(s, *ws)
    assert len(ours) == len(poly.terms())
    for exp, c in ours.items():
        assert poly.coeff_monomial(sympy.Mul(*[w ** e for w, e in zip(ws, exp)])) == c


def test_fano_ray_pullbacks():
    b, s = ids.fano_ray_pullbacks()
    assert b.univariate_coefficients() == [4, -12, 0, 28]
    assert s.univariate_coefficients() == [6, -4, -21, 1, 20, 18, 7, 1]


def test_certificate_lookup():
    s = genfun(Matroid.fano(), "ssgf", "mobius")
    assert set(ids.certificates_for(s)) == {(6, 7)}
    assert ids.certificates_for(genfun(Matroid.uniform(2, 3), "ssgf")) == {}


def test_shift_to_v():
    w = Polynomial.variable(1, 1)
    assert ids.shift_to_v(w * w) == (w - 1) * (w - 1)
