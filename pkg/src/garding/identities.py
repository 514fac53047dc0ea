"""Closed-form polynomial identities for the named matroids, as (lhs, rhs) pairs.

Each ``*_identity`` function returns two polynomials that must be equal;
the left side is computed from the matroid by enumeration, the right side is
the closed form.  ``v`` coordinates are ``v_i = w_i + 1``.
"""

from __future__ import annotations

from typing import Callable

from .checkers import SquaresCertificate, rayleigh_difference
from .matroid import Matroid, genfun
from .polycore import Polynomial, PositiveAffineMap, affine_pullback, elementary_symmetric, substitute, variables

FANO_RAY_BASE = (0, 1, -1, 1, -1, -1, 1)


def _prod(polys) -> Polynomial:
    out = None
    for p in polys:
        out = p if out is None else out * p
    return out


def shift_to_v(f: Polynomial) -> Polynomial:
    """Rewrite f(w) in the coordinates v = w + 1, i.e. return f(v - 1)."""
    n = f.nvars
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    return affine_pullback(f, PositiveAffineMap(ident, [-1] * n))


def _vprod(v: list[Polynomial], idx: str) -> Polynomial:
    return _prod(v[int(c) - 1] for c in idx)


# ---------------------------------------------------------------------------
# Fano plane


def fano_ray_pullbacks() -> tuple[Polynomial, Polynomial]:
    """B_F7 and S_F7 restricted to the line FANO_RAY_BASE + t (1, ..., 1)."""
    from .polycore import along_ray

    f7 = Matroid.fano()
    ones = [1] * 7
    b = along_ray(genfun(f7, "bsgf"), ones, FANO_RAY_BASE)
    s = along_ray(genfun(f7, "ssgf", "mobius"), ones, FANO_RAY_BASE)
    return b, s


def fano_rayleigh_coefficients(corrected: bool = False) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
    """(C2, C1, C0 product form, C0 square form) for the pair (6, 7) of S_F7.

    With ``corrected`` the common factor of C2 and C1 is prod_{i=2..5}(1 + w_i) - 1,
    which is what the enumeration produces; otherwise the product itself is used.
    """
    w = variables(7)
    e_hat = _prod(1 + w[i] for i in range(1, 5))
    if corrected:
        e_hat = e_hat - 1
    a, b = w[1] * w[2], w[3] * w[4]
    c2 = e_hat * (w[1] + w[2] + w[3] + w[4] + a + b)
    c1 = (e_hat * (a + b)).scale(2)
    c0_product = a * a * (1 + w[3]) * (1 + w[4]) + b * b * (1 + w[1]) * (1 + w[2]) - (a * b).scale(2)
    c0_squares = (a - b) ** 2 + a * a * (w[3] + w[4] + b) + b * b * (w[1] + w[2] + a)
    return c2, c1, c0_product, c0_squares


def fano_rayleigh_identity(corrected: bool = False) -> tuple[Polynomial, Polynomial]:
    s = genfun(Matroid.fano(), "ssgf", "mobius")
    c2, c1, c0, _ = fano_rayleigh_coefficients(corrected)
    w1 = Polynomial.variable(7, 1)
    return rayleigh_difference(s, 6, 7), c2 * w1 * w1 + c1 * w1 + c0


def fano_c0_identity() -> tuple[Polynomial, Polynomial]:
    _, _, c0_product, c0_squares = fano_rayleigh_coefficients()
    return c0_product, c0_squares


def fano_rayleigh_certificate() -> SquaresCertificate:
    """Delta_67(S_F7) = (w2 w3 - w4 w5)^2 + terms with nonnegative coefficients."""
    w = variables(7)
    a, b = w[1] * w[2], w[3] * w[4]
    c2, c1, _, _ = fano_rayleigh_coefficients(corrected=True)
    remainder = c2 * w[0] * w[0] + c1 * w[0] + a * a * (w[3] + w[4] + b) + b * b * (w[1] + w[2] + a)
    return SquaresCertificate(((Polynomial.constant(7, 1), a - b),), remainder, "fano-pair-67")


def certificates_for(f: Polynomial) -> dict[tuple[int, int], SquaresCertificate]:
    """Known squares certificates keyed by variable pair, for polynomials recognised here."""
    if f.nvars == 7 and f == genfun(Matroid.fano(), "ssgf", "mobius"):
        return {(6, 7): fano_rayleigh_certificate()}
    return {}


# cospanning polynomial of F7 in v coordinates, split along v6, v7

def fano_cospanning_blocks() -> dict[str, Polynomial]:
    v = variables(7)
    s1 = elementary_symmetric(7, 1, [1, 2, 3, 4, 5])
    s2 = elementary_symmetric(7, 2, [1, 2, 3, 4, 5])
    vp = lambda idx: _vprod(v, idx)  # noqa: E731
    return {
        "A": vp("12345") - vp("23") - vp("45") - vp("1") + 2,
        "B": -vp("134") - vp("125") - vp("24") - vp("35") + s1.scale(2) - 6,
        "C": -vp("135") - vp("124") - vp("25") - vp("34") + s1.scale(2) - 6,
        "D": -vp("2345") - vp("123") - vp("145") + s2.scale(2) - s1.scale(6) + 13,
    }


def fano_cospanning_v() -> Polynomial:
    return shift_to_v(genfun(Matroid.fano(), "csgf"))


def fano_cospanning_split_identity() -> tuple[Polynomial, Polynomial]:
    blk = fano_cospanning_blocks()
    v6, v7 = Polynomial.variable(7, 6), Polynomial.variable(7, 7)
    return fano_cospanning_v(), blk["A"] * v6 * v7 + blk["B"] * v6 + blk["C"] * v7 + blk["D"]


def fano_cospanning_rayleigh_identity() -> tuple[Polynomial, Polynomial]:
    blk = fano_cospanning_blocks()
    return rayleigh_difference(fano_cospanning_v(), 6, 7), blk["B"] * blk["C"] - blk["A"] * blk["D"]


def discriminant_blocks() -> dict[str, Polynomial]:
    """P, Q, R, Delta' and A in free variables (alpha, beta1, beta2, gamma1, gamma2)."""
    al, b1, b2, g1, g2 = variables(5)
    a = al * g1 * g2 - g1 - g2 - al + 2
    p = al * b2 * b2 + (al - 1) ** 2 * g2 - (2 * (al + 1)) * b2 + 4
    q = (-2) * (al + b2 - 3) * ((al + 1) * b2 - 4 + a)
    r = ((al - 1) ** 2 * (g1 * b2 * b2 - 4 * g1 * g2) + (2 * (al + b2) - 6) ** 2
         - a * (-(g1 * g2) + (2 - al) * (g1 + g2) + (2 * al - 6) * b2 - 6 * al + 13))
    dprime = (al * g1 - 1) * (b2 * b2 - 4 * g2) + (al + g1 + 2) * a
    return {"A": a, "P": p, "Q": q, "R": r, "Delta'": dprime}


def discriminant_identity() -> tuple[Polynomial, Polynomial]:
    d = discriminant_blocks()
    al, _, b2, _, g2 = variables(5)
    return d["Q"] * d["Q"] - 4 * d["P"] * d["R"], (-4) * (al - 1) ** 2 * (b2 - g2 - 1) ** 2 * d["Delta'"]


def _symmetric_substitution() -> list[Polynomial]:
    v = variables(7)
    return [v[0], v[1] + v[2], v[3] + v[4], v[1] * v[2], v[3] * v[4]]


def quadratic_in_beta1_identity() -> tuple[Polynomial, Polynomial]:
    """BC - AD against P beta1^2 + Q beta1 + R after substituting the symmetric functions."""
    d = discriminant_blocks()
    b1 = Polynomial.variable(5, 2)
    free = d["P"] * b1 * b1 + d["Q"] * b1 + d["R"]
    blk = fano_cospanning_blocks()
    return blk["B"] * blk["C"] - blk["A"] * blk["D"], substitute(free, _symmetric_substitution())


def fano_free_a_identity() -> tuple[Polynomial, Polynomial]:
    return fano_cospanning_blocks()["A"], substitute(discriminant_blocks()["A"], _symmetric_substitution())


# ---------------------------------------------------------------------------
# rank-3 six-element matroids


def symmetric_cube_identity() -> tuple[Polynomial, Polynomial]:
    x, y, z = variables(3)
    lhs = (x * y + z - 2) * (y * z + x - 2) * (x * z + y - 2) - (x * y * z - 1) * (x + y + z - 3) ** 2
    return lhs, (x - 1) ** 2 * (y - 1) ** 2 * (z - 1) ** 2


def k4_split() -> tuple[Polynomial, Polynomial]:
    v = variables(6)
    vp = lambda idx: _vprod(v, idx)  # noqa: E731
    tail = vp("4") + vp("5") + vp("6") - 3
    f = vp("123") * (vp("456") - 1) - tail
    g = (vp("1") * (vp("56") + vp("4") - 2) + vp("2") * (vp("46") + vp("5") - 2)
         + vp("3") * (vp("45") + vp("6") - 2) - 3 * tail)
    return f, g


def k4_split_identity(m: Matroid | None = None) -> tuple[Polynomial, Polynomial]:
    m = m or Matroid.fixture("mk4")
    f, g = k4_split()
    return shift_to_v(genfun(m, "ssgf")), f - g


def whirl_split() -> tuple[Polynomial, Polynomial]:
    v = variables(6)
    vp = lambda idx: _vprod(v, idx)  # noqa: E731
    tail = vp("4") + vp("5") + vp("6") - 3
    f = vp("13") * (vp("456") - 1) - tail
    g = (vp("1") * (vp("56") + vp("4") - 2) + vp("3") * (vp("45") + vp("6") - 2)
         + (vp("46") + vp("5") - 2) - 3 * tail)
    return f, g


def whirl_split_identity(m: Matroid | None = None) -> tuple[Polynomial, Polynomial]:
    m = m or Matroid.fixture("w3")
    f, g = whirl_split()
    return shift_to_v(genfun(m, "ssgf")), Polynomial.variable(6, 2) * f - g


def q6_spanning_v() -> Polynomial:
    v = variables(6)
    vp = lambda idx: _vprod(v, idx)  # noqa: E731
    pairs = ["14", "15", "16", "24", "25", "26", "36", "46", "56"]
    return (vp("123456") - (vp("123") + vp("345")) - sum((vp(p) for p in pairs), Polynomial.zero(6))
            + 2 * vp("3") + 3 * (vp("1") + vp("2") + vp("4") + vp("5")) + 4 * vp("6") - 8)


def q6_spanning_identity(m: Matroid | None = None) -> tuple[Polynomial, Polynomial]:
    m = m or Matroid.fixture("q6")
    return shift_to_v(genfun(m, "ssgf")), q6_spanning_v()


def q6_two_block() -> tuple[Polynomial, Polynomial]:
    x, y, z, _ = variables(4)
    f = (x * x * z * z - 1) * y - 2 * (x + z - 2)
    g = y * (x * x + z * z - 2) + 4 * x * z - 6 * (x + z) + 8
    return f, g


def q6_two_block_identity(m: Matroid | None = None) -> tuple[Polynomial, Polynomial]:
    """S_Q6 at v1 = v2 = x, v3 = y, v4 = v5 = z, v6 = u against f u - g."""
    m = m or Matroid.fixture("q6")
    x, y, z, u = variables(4)
    lhs = substitute(shift_to_v(genfun(m, "ssgf")), [x, x, y, z, z, u])
    f, g = q6_two_block()
    return lhs, f * u - g


def q6_component_identity() -> tuple[Polynomial, Polynomial]:
    """g (x^2 z^2 - 1) = 2(x-1)^2 (z-1)^2 (2xz + x + z) + f (x^2 + z^2 - 2)."""
    x, y, z, _ = variables(4)
    f, g = q6_two_block()
    lhs = g * (x * x * z * z - 1)
    rhs = 2 * (x - 1) ** 2 * (z - 1) ** 2 * (2 * x * z + x + z) + f * (x * x + z * z - 2)
    return lhs, rhs


IDENTITIES: dict[str, Callable[[], tuple[Polynomial, Polynomial]]] = {
    "fano-rayleigh-67": fano_rayleigh_identity,
    "fano-rayleigh-67-corrected": lambda: fano_rayleigh_identity(corrected=True),
    "fano-c0-rewrite": fano_c0_identity,
    "fano-cospanning-split": fano_cospanning_split_identity,
    "fano-cospanning-rayleigh": fano_cospanning_rayleigh_identity,
    "fano-free-a": fano_free_a_identity,
    "fano-quadratic-in-beta1": quadratic_in_beta1_identity,
    "fano-discriminant": discriminant_identity,
    "symmetric-cube": symmetric_cube_identity,
    "k4-split": k4_split_identity,
    "whirl-split": whirl_split_identity,
    "q6-spanning": q6_spanning_identity,
    "q6-two-block": q6_two_block_identity,
    "q6-component": q6_component_identity,
}
