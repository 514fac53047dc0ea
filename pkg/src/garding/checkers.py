"""Property verdicts for polynomials.

Every check returns a ``Verdict``.  ``Proven`` is only produced by an exact
argument (a decision tier, coefficientwise nonnegativity or a verified
certificate).  ``Refuted`` always carries a witness that was evaluated in
exact arithmetic.  Everything else is ``Inconclusive`` together with a
report of what was sampled.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from . import _linalg
from .polycore import (
    Polynomial,
    RationalLike,
    along_ray,
    embed,
    multi_derivative,
    partial_derivative,
    permute_variables,
    to_fraction,
)
from .realroots import count_real_roots, mrs_check, real_rooted_check


class Status(str, Enum):
    PROVEN = "Proven"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Polynomial):
        return str(value)
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    return value


@dataclass(frozen=True)
class Verdict:
    status: Status
    certificate: str | None = None
    witness: dict | None = None
    report: dict | None = None

    @classmethod
    def proven(cls, certificate: str, **report: Any) -> "Verdict":
        return cls(Status.PROVEN, certificate=certificate, report=report or None)

    @classmethod
    def refuted(cls, condition: str, **witness: Any) -> "Verdict":
        return cls(Status.REFUTED, witness={"condition": condition, **witness})

    @classmethod
    def inconclusive(cls, **report: Any) -> "Verdict":
        return cls(Status.INCONCLUSIVE, report=report)

    @property
    def is_proven(self) -> bool:
        return self.status is Status.PROVEN

    @property
    def is_refuted(self) -> bool:
        return self.status is Status.REFUTED

    @property
    def is_inconclusive(self) -> bool:
        return self.status is Status.INCONCLUSIVE

    @property
    def exit_code(self) -> int:
        return {Status.PROVEN: 0, Status.REFUTED: 1, Status.INCONCLUSIVE: 2}[self.status]

    def to_json(self) -> dict:
        out: dict[str, Any] = {"status": self.status.value}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.report is not None:
            out["report"] = _jsonable(self.report)
        return out


@dataclass(frozen=True)
class ProbeConfig:
    """Sampling budget.  Points are rationals with denominators at most ``max_denominator``."""

    seed: int = 0
    n_basepoints: int = 4
    n_rays: int = 4
    box: Fraction = Fraction(2)
    max_denominator: int = 64
    extra_rays: tuple = ()
    boundary: bool = True

    def __post_init__(self) -> None:
        if self.n_basepoints < 1 or self.n_rays < 1 or self.max_denominator < 1:
            raise ValueError("probe counts and denominators must be >= 1")
        object.__setattr__(self, "box", to_fraction(self.box))
        rays = tuple(
            (tuple(to_fraction(v) for v in a), tuple(to_fraction(v) for v in b))
            for a, b in self.extra_rays
        )
        object.__setattr__(self, "extra_rays", rays)


# ---------------------------------------------------------------------------
# sampling


def _rational_in(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(math.ceil(lo * den), math.floor(hi * den)), den)


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73)


def _radical_inverse(k: int, base: int) -> Fraction:
    out = Fraction(0)
    scale = Fraction(1, base)
    while k:
        k, digit = divmod(k, base)
        out += digit * scale
        scale /= base
    return out


def halton_rays(nvars: int, count: int, max_den: int = 64) -> list[tuple[Fraction, ...]]:
    """Positive directions.

    The all-ones ray comes first, then one near-axis ray per variable (weight
    1 on that variable, 1/max_den elsewhere), then a shifted Halton sequence
    in (1/2, 3/2] until ``count`` Halton rays have been added.
    """
    rays = [tuple(Fraction(1) for _ in range(nvars))]
    if nvars > 1:
        for i in range(nvars):
            rays.append(tuple(Fraction(1) if k == i else Fraction(1, max_den) for k in range(nvars)))
    count += len(rays) - 1
    k = 1
    while len(rays) < count:
        ray = tuple(
            (Fraction(1, 2) + _radical_inverse(k, _PRIMES[i % len(_PRIMES)])).limit_denominator(max_den)
            for i in range(nvars)
        )
        if ray not in rays:
            rays.append(ray)
        k += 1
    return rays[:count]


def _basepoints(f: Polynomial, cfg: ProbeConfig, rng: random.Random) -> list[tuple[Fraction, ...]]:
    n = f.nvars
    centre: tuple[Fraction, ...] = tuple(Fraction(0) for _ in range(n))
    if f.degree:
        system = polyhedral_component(f)
        centre = interior_point(system)
    points = [centre]
    origin = tuple(Fraction(0) for _ in range(n))
    if origin not in points:
        points.append(origin)
    tries = 0
    while len(points) < cfg.n_basepoints and tries < 50 * cfg.n_basepoints:
        tries += 1
        p = tuple(c + _rational_in(rng, -cfg.box, cfg.box, cfg.max_denominator) for c in centre)
        if p not in points:
            points.append(p)
    return points[: cfg.n_basepoints]


def _positive_on_ray(g: Polynomial, x: Sequence[Fraction], include_start: bool) -> bool:
    """g(x + t*1) > 0 for every t > 0 (and at t = 0 when include_start)."""
    h = along_ray(g, [Fraction(1)] * g.nvars, x)
    if h.is_zero():
        return False
    coeffs = h.univariate_coefficients()
    if coeffs[-1] < 0:
        return False
    if include_start and coeffs[0] <= 0:
        return False
    if len(coeffs) == 1:
        return coeffs[0] > 0
    return count_real_roots(h, 0, None) == 0


def in_garding_component(g: Polynomial, x: Sequence[RationalLike]) -> bool:
    """Sufficient test for x in C_g when g is Garding: g stays positive on x + t*1, t >= 0."""
    return _positive_on_ray(g, [to_fraction(v) for v in x], include_start=True)


# ---------------------------------------------------------------------------
# elementary checks


def ulc_check(a: Sequence[RationalLike]) -> bool:
    """Ultra log-concavity of a nonnegative sequence a_0..a_d."""
    seq = [to_fraction(v) for v in a]
    if any(v < 0 for v in seq):
        raise ValueError("ULC is defined for nonnegative sequences")
    d = len(seq) - 1
    b = [v / math.comb(d, k) for k, v in enumerate(seq)]
    nz = [k for k, v in enumerate(b) if v]
    if nz and any(not b[k] for k in range(nz[0], nz[-1] + 1)):
        return False
    return all(b[k] ** 2 >= b[k - 1] * b[k + 1] for k in range(1, d))


def bivariate_multiaffine_criterion(a: RationalLike, b: RationalLike, c: RationalLike,
                                    d: RationalLike) -> Verdict:
    """Decide a*x*y + b*x + c*y + d."""
    a, b, c, d = (to_fraction(v) for v in (a, b, c, d))
    if not (a or b or c):
        raise ValueError("constant input; use the constant tier")
    if a < 0:
        return Verdict.refuted("leading coefficient a < 0", a=a)
    if a > 0:
        if a * d - b * c <= 0:
            return Verdict.proven("T3-bivariate", discriminant=a * d - b * c)
        return Verdict.refuted("a > 0 and ad - bc > 0", discriminant=a * d - b * c)
    if b >= 0 and c >= 0:
        return Verdict.proven("T2-affine", gradient=[b, c])
    return Verdict.refuted("negative gradient component", gradient=[b, c])


def quadratic_form_matrix(q: Polynomial, indices: Sequence[int] | None = None) -> list[list[Fraction]]:
    """Symmetric matrix M with q(x) = x^T M x over the given variables."""
    idx = list(indices) if indices is not None else list(range(1, q.nvars + 1))
    pos = {v: k for k, v in enumerate(idx)}
    m = [[Fraction(0)] * len(idx) for _ in idx]
    for exp, c in q.terms.items():
        vs = [k + 1 for k, e in enumerate(exp) for _ in range(e)]
        if len(vs) != 2:
            raise ValueError("not a homogeneous quadratic")
        i, j = pos[vs[0]], pos[vs[1]]
        if i == j:
            m[i][i] += c
        else:
            m[i][j] += c / 2
            m[j][i] += c / 2
    return m


def quadratic_signature_test(q: Polynomial) -> Verdict:
    """Nonnegative homogeneous quadratic with at most one positive eigenvalue."""
    if q.is_zero() or q.degree != 2 or not q.is_homogeneous():
        raise ValueError("expected a nonzero homogeneous quadratic")
    neg = [(e, c) for e, c in q.terms.items() if c < 0]
    if neg:
        return Verdict.refuted("negative coefficient", monomial=list(neg[0][0]), coefficient=neg[0][1])
    support = q.support_variables()
    k = _linalg.positive_eigenvalue_count(quadratic_form_matrix(q, support))
    if k <= 1:
        return Verdict.proven("T4-quadratic", positive_eigenvalues=k)
    charp = _linalg.charpoly(quadratic_form_matrix(q, support))
    return Verdict.refuted("more than one positive eigenvalue", positive_eigenvalues=k,
                           charpoly=[str(c) for c in charp])


# ---------------------------------------------------------------------------
# polyhedral derived component


@dataclass(frozen=True)
class HalfspaceSystem:
    """Rows a.x > b with a >= 0, a != 0.  ``violations`` lists derivatives that break a >= 0."""

    nvars: int
    rows: tuple[tuple[tuple[Fraction, ...], Fraction], ...]
    violations: tuple[tuple[tuple[int, ...], str], ...] = ()

    @property
    def nrt(self) -> bool:
        return all(any(a[i] > 0 for a, _ in self.rows) for i in range(self.nvars))

    def contains(self, x: Sequence[RationalLike]) -> bool:
        xs = [to_fraction(v) for v in x]
        return all(sum((ai * xi for ai, xi in zip(a, xs)), Fraction(0)) > b for a, b in self.rows)


def _top_derivative_indices(f: Polynomial, order: int) -> set[tuple[int, ...]]:
    """Multi-indices of total order ``order`` that can give a nonzero derivative."""
    out = set()
    for exp in f.terms:
        excess = sum(exp) - order
        if excess < 0:
            continue
        for drop in itertools.product(*(range(e + 1) for e in exp)):
            if sum(drop) == excess:
                out.add(tuple(e - k for e, k in zip(exp, drop)))
    return out


def polyhedral_component(f: Polynomial) -> HalfspaceSystem:
    d = f.degree
    if d is None or d < 1:
        raise ValueError("polyhedral component needs degree >= 1")
    rows = []
    bad = []
    for alpha in sorted(_top_derivative_indices(f, d - 1)):
        g = multi_derivative(f, alpha)
        if g.is_zero():
            continue
        n = f.nvars
        a = tuple(g.coefficient(tuple(int(k == i) for k in range(n))) for i in range(n))
        c = g.constant_value()
        if any(v < 0 for v in a):
            bad.append((alpha, "derivative has a negative gradient component"))
        elif not any(a):
            if c < 0:
                bad.append((alpha, "derivative is a negative constant"))
        else:
            rows.append((a, -c))
    return HalfspaceSystem(f.nvars, tuple(rows), tuple(bad))


def interior_point(h: HalfspaceSystem) -> tuple[Fraction, ...]:
    if not h.rows:
        return tuple(Fraction(0) for _ in range(h.nvars))
    t = max((b + 1) / sum(a) for a, b in h.rows)
    return tuple(t for _ in range(h.nvars))


# ---------------------------------------------------------------------------
# Garding probes and decision tiers


def _extra_rays(f: Polynomial, cfg: ProbeConfig) -> list:
    for a, b in cfg.extra_rays:
        if len(a) != f.nvars or len(b) != f.nvars:
            raise ValueError(f"extra ray has the wrong length for {f.nvars} variables")
    return [tuple(r) for r in cfg.extra_rays]


def _probe_pairs(f: Polynomial, cfg: ProbeConfig) -> list[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]]:
    rng = random.Random(cfg.seed)
    pairs = _extra_rays(f, cfg)
    rays = halton_rays(f.nvars, cfg.n_rays, cfg.max_denominator)
    for b in _basepoints(f, cfg, rng):
        for a in rays:
            pairs.append((a, b))
    return pairs


def mrs_ray_probe(f: Polynomial, cfg: ProbeConfig | None = None) -> Verdict:
    """Refute the Garding property by finding a positive ray t -> a t + b without MRS."""
    cfg = cfg or ProbeConfig()
    pairs = _probe_pairs(f, cfg)
    for k, (a, b) in enumerate(pairs):
        if any(v <= 0 for v in a):
            continue
        g = along_ray(f, a, b)
        result = mrs_check(g)
        if not result.holds:
            return Verdict.refuted(
                "restriction to a positive ray has no monotone root sequence",
                a=list(a), b=list(b), univariate=str(g), reason=result.reason, sample=k,
            )
    return Verdict.inconclusive(probe="mrs-rays", rays=len(pairs), seed=cfg.seed)


def stability_probe(f: Polynomial, cfg: ProbeConfig | None = None) -> Verdict:
    """Refute real stability: some f(a t + b), a > 0, is not real-rooted."""
    cfg = cfg or ProbeConfig()
    rng = random.Random(cfg.seed)
    rays = halton_rays(f.nvars, cfg.n_rays, cfg.max_denominator)
    points = [tuple(Fraction(0) for _ in range(f.nvars))]
    while len(points) < cfg.n_basepoints:
        points.append(tuple(_rational_in(rng, -cfg.box, cfg.box, cfg.max_denominator)
                            for _ in range(f.nvars)))
    pairs = _extra_rays(f, cfg) + [(a, b) for b in points for a in rays]
    for k, (a, b) in enumerate(pairs):
        g = along_ray(f, a, b)
        if g.is_zero() or g.degree == 0:
            continue
        if not real_rooted_check(g):
            return Verdict.refuted("restriction to a positive ray is not real-rooted",
                                   a=list(a), b=list(b), univariate=str(g), sample=k)
    return Verdict.inconclusive(probe="stability-grid", rays=len(pairs), seed=cfg.seed)


def _univariate_in(f: Polynomial, i: int) -> Polynomial:
    return Polynomial(1, {(exp[i - 1],): c for exp, c in f.terms.items()})


def _boundary_probe(f: Polynomial, cfg: ProbeConfig, basepoints: Iterable[Sequence[Fraction]]) -> tuple[Verdict | None, int]:
    """Look for a boundary point of the first derived component where f > 0 (multi-affine f)."""
    support = f.support_variables()
    partials = {i: partial_derivative(f, i) for i in support}
    tested = 0
    for p in basepoints:
        for i in support:
            gi = partials[i]
            for j in support:
                if j == i:
                    continue
                slope = partial_derivative(gi, j)(p)
                if not slope:
                    continue
                q = list(p)
                q[j - 1] -= gi(p) / slope
                tested += 1
                if f(q) <= 0:
                    continue
                if not _positive_on_ray(gi, q, include_start=False):
                    continue
                if all(_positive_on_ray(partials[k], q, include_start=True) for k in support if k != i):
                    return Verdict.refuted(
                        "f > 0 at a boundary point of the first derived component",
                        point=q, vanishing_derivative=i, value=f(q),
                    ), tested
    return None, tested


def garding_decide(f: Polynomial, cfg: ProbeConfig | None = None,
                   _memo: dict | None = None) -> Verdict:
    """Tiered decision: exact tiers T0-T4, then derivative recursion plus probes (T5)."""
    cfg = cfg or ProbeConfig()
    memo = {} if _memo is None else _memo
    if f in memo:
        return memo[f]
    verdict = _garding_decide(f, cfg, memo)
    memo[f] = verdict
    return verdict


def _garding_decide(f: Polynomial, cfg: ProbeConfig, memo: dict) -> Verdict:
    support = f.support_variables()
    d = f.degree
    if not support:
        c = f.constant_value()
        if c >= 0:
            return Verdict.proven("T0-constant")
        return Verdict.refuted("negative constant", value=c)
    if len(support) == 1:
        result = mrs_check(_univariate_in(f, support[0]))
        if result.holds:
            return Verdict.proven("T1-mrs", variable=support[0])
        return Verdict.refuted("univariate root sequence is not monotone", variable=support[0],
                               reason=result.reason)
    if d == 1:
        grad = [f.coefficient(tuple(int(k == i - 1) for k in range(f.nvars))) for i in support]
        if all(v >= 0 for v in grad):
            return Verdict.proven("T2-affine")
        i = support[next(k for k, v in enumerate(grad) if v < 0)]
        return Verdict.refuted("negative gradient component", variable=i)
    if len(support) == 2 and f.is_multiaffine():
        u, v = support
        n = f.nvars

        def coeff(*idx: int) -> Fraction:
            return f.coefficient(tuple(int(k + 1 in idx) for k in range(n)))

        return bivariate_multiaffine_criterion(coeff(u, v), coeff(u), coeff(v), coeff())
    if d == 2 and f.is_homogeneous():
        return quadratic_signature_test(f)

    # T5
    if f.is_homogeneous() and not f.has_nonnegative_coefficients():
        exp, c = next((e, c) for e, c in f.items() if c < 0)
        return Verdict.refuted("homogeneous polynomial with a negative coefficient",
                               monomial=list(exp), coefficient=c)
    system = polyhedral_component(f)
    if system.violations:
        alpha, why = system.violations[0]
        return Verdict.refuted(why, derivative=list(alpha))
    for i in support:
        sub = garding_decide(partial_derivative(f, i), cfg, memo)
        if sub.is_refuted:
            return Verdict.refuted("a partial derivative is not Garding", derivative=i,
                                   inner=sub.witness)
    probe = mrs_ray_probe(f, cfg)
    if probe.is_refuted:
        return probe
    tested = 0
    if cfg.boundary and f.is_multiaffine():
        rng = random.Random(cfg.seed + 1)
        found, tested = _boundary_probe(f, cfg, _basepoints(f, cfg, rng))
        if found is not None:
            return found
    return Verdict.inconclusive(tier="T5", rays=probe.report["rays"], boundary_points=tested,
                                seed=cfg.seed)


# ---------------------------------------------------------------------------
# Rayleigh


def rayleigh_difference(f: Polynomial, i: int, j: int) -> Polynomial:
    """Delta_ij = d_i f * d_j f - f * d_i d_j f."""
    if i == j:
        raise ValueError("Rayleigh differences need i != j")
    if not f.is_multiaffine():
        raise ValueError("Rayleigh differences are defined for multi-affine polynomials")
    fi = partial_derivative(f, i)
    fj = partial_derivative(f, j)
    return fi * fj - f * partial_derivative(fi, j)


@dataclass(frozen=True)
class SquaresCertificate:
    """delta = sum(weight * base^2) + remainder with nonnegative-coefficient weights and remainder."""

    squares: tuple[tuple[Polynomial, Polynomial], ...]
    remainder: Polynomial
    label: str = "sum of squares"

    def expand(self) -> Polynomial:
        out = self.remainder
        for weight, base in self.squares:
            out = out + weight * base * base
        return out

    def verify(self, delta: Polynomial) -> bool:
        if not self.remainder.has_nonnegative_coefficients():
            return False
        if any(not w.has_nonnegative_coefficients() for w, _ in self.squares):
            return False
        return self.expand() == delta

    def permuted(self, perm: Mapping[int, int]) -> "SquaresCertificate":
        return SquaresCertificate(
            tuple((permute_variables(w, perm), permute_variables(b, perm)) for w, b in self.squares),
            permute_variables(self.remainder, perm),
            self.label,
        )


def _transport(f: Polynomial, source: tuple[int, int], target: tuple[int, int]) -> dict[int, int] | None:
    """A variable permutation fixing f and sending the pair ``source`` onto ``target``."""
    n = f.nvars
    if n > 10:
        return None
    for t in (target, target[::-1]):
        rest_src = [k for k in range(1, n + 1) if k not in source]
        rest_dst = [k for k in range(1, n + 1) if k not in t]
        for image in itertools.permutations(rest_dst):
            perm = {source[0]: t[0], source[1]: t[1], **dict(zip(rest_src, image))}
            if permute_variables(f, perm) == f:
                return perm
    return None


def _orthant_points(nvars: int, cfg: ProbeConfig) -> list[tuple[Fraction, ...]]:
    rng = random.Random(cfg.seed)
    points = [tuple(Fraction(1) for _ in range(nvars))]
    for _ in range(cfg.n_basepoints * cfg.n_rays):
        p = tuple(
            Fraction(0) if rng.random() < 0.2 else _rational_in(rng, Fraction(0), cfg.box, cfg.max_denominator)
            for _ in range(nvars)
        )
        points.append(p)
    return points


def rayleigh_check(f: Polynomial, cfg: ProbeConfig | None = None,
                   certificates: Mapping[tuple[int, int], SquaresCertificate] | None = None,
                   use_symmetry: bool = True) -> Verdict:
    """Per-pair Rayleigh verdicts combined into one (Refuted beats Inconclusive beats Proven)."""
    cfg = cfg or ProbeConfig()
    if not f.is_multiaffine():
        raise ValueError("rayleigh_check needs a multi-affine polynomial")
    if not f.has_nonnegative_coefficients():
        exp, c = next((e, c) for e, c in f.items() if c < 0)
        return Verdict.refuted("negative coefficient", monomial=list(exp), coefficient=c)
    certificates = dict(certificates or {})
    points = _orthant_points(f.nvars, cfg)
    open_pairs = []
    by_coefficients = 0
    by_certificate = 0
    for i, j in itertools.combinations(range(1, f.nvars + 1), 2):
        delta = rayleigh_difference(f, i, j)
        if delta.has_nonnegative_coefficients():
            by_coefficients += 1
            continue
        for k, p in enumerate(points):
            value = delta(p)
            if value < 0:
                return Verdict.refuted("Rayleigh difference is negative", pair=[i, j],
                                       point=list(p), value=value, sample=k)
        cert = certificates.get((i, j))
        if cert is None and use_symmetry:
            for src, c in certificates.items():
                perm = _transport(f, src, (i, j))
                if perm is not None:
                    cert = c.permuted(perm)
                    break
        if cert is not None and cert.verify(delta):
            by_certificate += 1
            continue
        open_pairs.append([i, j])
    if open_pairs:
        return Verdict.inconclusive(probe="orthant-sampling", open_pairs=open_pairs,
                                    points=len(points), seed=cfg.seed)
    label = "coefficientwise"
    if by_certificate:
        label += f"+certified({by_certificate})"
    return Verdict.proven(f"rayleigh:{label}")


# ---------------------------------------------------------------------------
# Lorentzian


def m_convex_violation(support: Iterable[Sequence[int]]) -> tuple | None:
    """First failure of the exchange axiom, or None when the support is M-convex."""
    supp = sorted({tuple(s) for s in support})
    members = set(supp)
    for alpha in supp:
        for beta in supp:
            for i in range(len(alpha)):
                if alpha[i] <= beta[i]:
                    continue
                ok = False
                for j in range(len(alpha)):
                    if alpha[j] < beta[j]:
                        cand = list(alpha)
                        cand[i] -= 1
                        cand[j] += 1
                        if tuple(cand) in members:
                            ok = True
                            break
                if not ok:
                    return alpha, beta, i + 1
    return None


def lorentzian_check(f: Polynomial) -> Verdict:
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("Lorentzian checks need a nonzero homogeneous polynomial")
    d = f.degree
    if d < 2:
        raise ValueError("Lorentzian checks need degree >= 2")
    if not f.has_nonnegative_coefficients():
        exp, c = next((e, c) for e, c in f.items() if c < 0)
        return Verdict.refuted("negative coefficient", monomial=list(exp), coefficient=c)
    bad = m_convex_violation(f.terms)
    if bad is not None:
        alpha, beta, i = bad
        return Verdict.refuted("support is not M-convex", alpha=list(alpha), beta=list(beta), index=i)
    for alpha in sorted(_top_derivative_indices(f, d - 2)):
        q = multi_derivative(f, alpha)
        if q.is_zero():
            continue
        sub = quadratic_signature_test(q)
        if sub.is_refuted:
            return Verdict.refuted("a quadratic derivative has more than one positive eigenvalue",
                                   derivative=list(alpha), inner=sub.witness)
    return Verdict.proven("lorentzian")


# ---------------------------------------------------------------------------
# binary relations and subtraction


def _component_points(g: Polynomial, cfg: ProbeConfig) -> list[tuple[Fraction, ...]]:
    rng = random.Random(cfg.seed + 2)
    return [p for p in _basepoints(g, cfg, rng) if in_garding_component(g, p)]


def relation_probe(f: Polynomial, g: Polynomial, kind: str, cfg: ProbeConfig | None = None) -> Verdict:
    """Probe f dominated by g (``domination``) or (f, g) in proper position (``proper_position``)."""
    cfg = cfg or ProbeConfig()
    if g.is_zero():
        raise ValueError("g must be nonzero")
    if f.nvars != g.nvars:
        raise ValueError("f and g must share nvars")
    n = f.nvars
    y = Polynomial.variable(n + 1, n + 1)
    F, G = embed(f, n + 1), embed(g, n + 1)
    if kind == "domination":
        if f.is_zero():
            return Verdict.proven("convention: zero is dominated")
        lifted = garding_decide(G * y - F, cfg)
        if lifted.is_refuted:
            return Verdict.refuted("g*y - f is not Garding", inner=lifted.witness)
        points = _component_points(g, cfg)
        for p in points:
            if f(p) <= 0:
                return Verdict.refuted("f <= 0 at a point of the Garding component of g",
                                       point=list(p), value=f(p))
        return Verdict.inconclusive(probe="domination", lifted=lifted.status.value,
                                    component_points=len(points), seed=cfg.seed)
    if kind == "proper_position":
        if f.is_zero():
            return Verdict.proven("convention: zero is in proper position")
        lifted = garding_decide(F * y + G, cfg)
        if lifted.is_refuted:
            return Verdict.refuted("f*y + g is not Garding", inner=lifted.witness)
        points = _component_points(f, cfg)
        for p in points:
            for i in range(1, n + 1):
                value = (g * partial_derivative(f, i) - f * partial_derivative(g, i))(p)
                if value > 0:
                    return Verdict.refuted("g d_i f - f d_i g > 0 on the Garding component of f",
                                           point=list(p), index=i, value=value)
        return Verdict.inconclusive(probe="proper-position", lifted=lifted.status.value,
                                    component_points=len(points), seed=cfg.seed)
    raise ValueError("kind must be 'domination' or 'proper_position'")


def garding_subtract(g: Polynomial, f: Polynomial, c: RationalLike,
                     cfg: ProbeConfig | None = None) -> tuple[Polynomial, Verdict]:
    """g - c f together with the verdict on the result."""
    cfg = cfg or ProbeConfig()
    c = to_fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    if garding_decide(g, cfg).is_refuted:
        raise ValueError("g is refuted as a Garding polynomial")
    if relation_probe(f, g, "domination", cfg).is_refuted:
        raise ValueError("f is refuted as dominated by g")
    result = g - f.scale(c)
    return result, garding_decide(result, cfg)
