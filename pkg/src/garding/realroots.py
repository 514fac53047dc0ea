"""Exact real roots of univariate rational polynomials.

Roots are isolated with Sturm chains on the square-free part and kept as
``AlgebraicNumber`` values (defining polynomial plus isolating interval).
Two algebraic numbers are compared by refining until their intervals are
disjoint, after a gcd test has ruled out equality, so ties always terminate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .polycore import Polynomial, RationalLike, to_fraction

Dense = list[Fraction]


# ---------------------------------------------------------------------------
# dense helpers (coefficients listed from the constant term up)


def _trim(p: Dense) -> Dense:
    while p and not p[-1]:
        p.pop()
    return p


def _dense(f: Polynomial) -> Dense:
    if f.nvars != 1:
        raise ValueError("expected a univariate polynomial (nvars == 1)")
    return f.univariate_coefficients()


def _deriv(p: Dense) -> Dense:
    return [p[k] * k for k in range(1, len(p))]


def _divmod(p: Dense, q: Dense) -> tuple[Dense, Dense]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    for k in range(len(p) - len(q), -1, -1):
        c = rem[k + len(q) - 1] / lead
        quo[k] = c
        if c:
            for j, b in enumerate(q):
                rem[k + j] -= c * b
    return _trim(quo), _trim(rem[: len(q) - 1])


def _monic(p: Dense) -> Dense:
    return [c / p[-1] for c in p] if p else p


def _gcd(p: Dense, q: Dense) -> Dense:
    a, b = _trim(list(p)), _trim(list(q))
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _squarefree(p: Dense) -> Dense:
    g = _gcd(p, _deriv(p))
    return _monic(_divmod(p, g)[0]) if len(g) > 1 else _monic(p)


def _yun(p: Dense) -> list[tuple[Dense, int]]:
    """Square-free decomposition p = c * prod a_i^i with nonconstant a_i."""
    out = []
    a0 = _monic(p)
    b = _gcd(a0, _deriv(a0))
    c = _divmod(a0, b)[0]
    i = 1
    while len(c) > 1:
        y = _gcd(b, c)
        z = _divmod(c, y)[0]
        if len(z) > 1:
            out.append((_monic(z), i))
        b = _divmod(b, y)[0]
        c = y
        i += 1
    return out


def _to_integer(p: Dense) -> list[int]:
    """Positive rescaling of p to a primitive integer polynomial."""
    if not p:
        return []
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints]


def _sign_at(p: list[int], x: Fraction) -> int:
    """Sign of an integer polynomial at a rational point (integer Horner on p(n/d) d^deg)."""
    num, den = x.numerator, x.denominator
    acc = 0
    dpow = 1
    for c in reversed(p):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def _eval(p: Dense, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


class _Sturm:
    """Sturm chain of a square-free polynomial, stored with integer coefficients."""

    def __init__(self, p: Dense):
        chain = [p, _deriv(p)]
        while len(chain[-1]) > 1:
            r = _divmod(chain[-2], chain[-1])[1]
            if not r:
                break
            chain.append([-c for c in r])
        self.chain = [_to_integer(q) for q in chain if q]
        self.poly = self.chain[0]

    def variations(self, x: Fraction | None, side: int = 1) -> int:
        """Sign changes at x, or at +inf (side=1) / -inf (side=-1) when x is None."""
        count = 0
        last = 0
        for q in self.chain:
            if x is None:
                deg = len(q) - 1
                s = (1 if q[-1] > 0 else -1) * (1 if side > 0 or deg % 2 == 0 else -1)
            else:
                s = _sign_at(q, x)
            if s:
                if last and s != last:
                    count += 1
                last = s
        return count

    def count(self, lo: Fraction | None, hi: Fraction | None) -> int:
        """Number of distinct roots in (lo, hi]; None means an infinite end."""
        v_lo = self.variations(lo, -1)
        v_hi = self.variations(hi, 1)
        return v_lo - v_hi

    def sign(self, x: Fraction) -> int:
        return _sign_at(self.poly, x)


def _simplest_between(lo: Fraction, hi: Fraction | None) -> Fraction:
    """Rational with the smallest denominator in the open interval (lo, hi); hi=None is +inf."""
    if hi is not None and lo < 0 < hi:
        return Fraction(0)
    if hi is not None and hi <= 0:
        return -_simplest_between(-hi, -lo)
    n = math.floor(lo)
    if hi is None or n + 1 < hi:
        return Fraction(n + 1)
    # lo and hi lie in [n, n + 1]
    inner_lo = 1 / (hi - n)
    inner_hi = None if lo == n else 1 / (lo - n)
    return n + 1 / _simplest_between(inner_lo, inner_hi)


def _pin(st: "_Sturm", lo: Fraction, hi: Fraction, rounds: int = 12) -> tuple[Fraction, Fraction]:
    """Split an isolating interval at simple rationals so small rational roots become exact."""
    for _ in range(rounds):
        if lo == hi:
            break
        s = _simplest_between(lo, hi)
        sign = st.sign(s)
        if sign == 0:
            return s, s
        if sign == st.sign(hi):
            hi = s
        else:
            lo = s
    return lo, hi


def _root_bound(p: Dense) -> Fraction:
    """A power of two strictly larger than every |root| (Cauchy bound)."""
    lead = abs(p[-1])
    m = max((abs(c) / lead for c in p[:-1]), default=Fraction(0))
    bound = 1 + m
    b = Fraction(1)
    while b <= bound:
        b *= 2
    return b


# ---------------------------------------------------------------------------
# algebraic numbers


class AlgebraicNumber:
    """A real algebraic number given by a square-free polynomial and an isolating interval.

    Either ``lo == hi`` (an exact rational) or the open interval ``(lo, hi)``
    contains exactly one root and neither endpoint is a root.  Refinement
    narrows the interval in place.
    """

    __slots__ = ("_poly", "_sturm", "lo", "hi", "multiplicity")

    def __init__(self, defining: Polynomial | Dense, lo: RationalLike, hi: RationalLike,
                 multiplicity: int = 1, _sturm: _Sturm | None = None):
        dense = list(defining) if isinstance(defining, list) else _dense(defining)
        self._poly = _squarefree(_trim(dense))
        self._sturm = _sturm or _Sturm(self._poly)
        self.lo = to_fraction(lo)
        self.hi = to_fraction(hi)
        self.multiplicity = multiplicity
        if self.lo > self.hi:
            raise ValueError("empty interval")
        if self.lo == self.hi:
            if self._sturm.sign(self.lo):
                raise ValueError("degenerate interval is not a root")
        elif self._sturm.count(self.lo, self.hi) != 1 or not self._sturm.sign(self.hi) or not self._sturm.sign(self.lo):
            raise ValueError("interval does not isolate exactly one root")
        else:
            self.lo, self.hi = _pin(self._sturm, self.lo, self.hi)

    @classmethod
    def rational(cls, q: RationalLike) -> "AlgebraicNumber":
        q = to_fraction(q)
        return cls([-q, Fraction(1)], q, q)

    @property
    def defining(self) -> Polynomial:
        return Polynomial.from_coefficients(self._poly)

    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.is_rational():
            if len(self._poly) == 2:
                q = -self._poly[0] / self._poly[1]
                self.lo = self.hi = q
                return q
            raise ValueError("algebraic number is irrational or not yet pinned down")
        return self.lo

    def refine(self) -> None:
        """Halve the isolating interval."""
        if self.lo == self.hi:
            return
        mid = (self.lo + self.hi) / 2
        s_mid = self._sturm.sign(mid)
        if s_mid == 0:
            self.lo = self.hi = mid
        elif s_mid == self._sturm.sign(self.hi):
            self.hi = mid
        else:
            self.lo = mid

    def refine_to(self, width: Fraction) -> None:
        while self.hi - self.lo > width:
            self.refine()

    def __float__(self) -> float:
        self.refine_to(Fraction(1, 2**60))
        return float((self.lo + self.hi) / 2)

    def compare(self, other: "AlgebraicNumber | RationalLike") -> int:
        """-1, 0 or 1 as self is less than, equal to or greater than other."""
        if not isinstance(other, AlgebraicNumber):
            other = AlgebraicNumber.rational(other)
        a, b = self, other
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if lo <= hi:
            g = _gcd(a._poly, b._poly)
            if len(g) > 1:
                st = _Sturm(g)
                if st.sign(lo) == 0 or st.count(lo, hi) > 0:
                    return 0
        while True:
            if a.hi < b.lo or (a.hi == b.lo and not (a.is_rational() and b.is_rational())):
                return -1
            if b.hi < a.lo or (b.hi == a.lo and not (a.is_rational() and b.is_rational())):
                return 1
            if a.is_rational() and b.is_rational():
                return (a.lo > b.lo) - (a.lo < b.lo)
            if a.hi - a.lo >= b.hi - b.lo:
                a.refine()
            else:
                b.refine()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (AlgebraicNumber, int, Fraction)):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other: "AlgebraicNumber | RationalLike") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "AlgebraicNumber | RationalLike") -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: "AlgebraicNumber | RationalLike") -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: "AlgebraicNumber | RationalLike") -> bool:
        return self.compare(other) >= 0

    __hash__ = None  # type: ignore[assignment]

    def to_json(self) -> dict:
        if self.is_rational():
            return {"value": str(self.lo)}
        return {
            "defining": Polynomial.from_coefficients(self._poly).to_json(),
            "interval": [str(self.lo), str(self.hi)],
            "approx": float(self),
        }

    def __repr__(self) -> str:
        if self.is_rational():
            return f"AlgebraicNumber({self.lo})"
        return f"AlgebraicNumber(root of {self.defining} in ({self.lo}, {self.hi}))"


def _isolate(st: _Sturm, lo: Fraction, hi: Fraction, mult: int, out: list[AlgebraicNumber]) -> None:
    """Isolate roots in (lo, hi]; lo and hi are not roots."""
    c = st.count(lo, hi)
    if c == 0:
        return
    if c == 1:
        out.append(AlgebraicNumber(_poly_of(st), lo, hi, mult, st))
        return
    mid = (lo + hi) / 2
    if st.sign(mid) == 0:
        delta = (hi - lo) / 4
        while st.count(mid - delta, mid + delta) != 1 or not st.sign(mid - delta) or not st.sign(mid + delta):
            delta /= 2
        _isolate(st, lo, mid - delta, mult, out)
        out.append(AlgebraicNumber(_poly_of(st), mid, mid, mult, st))
        _isolate(st, mid + delta, hi, mult, out)
    else:
        _isolate(st, lo, mid, mult, out)
        _isolate(st, mid, hi, mult, out)


def _poly_of(st: _Sturm) -> Dense:
    return [Fraction(c) for c in st.poly]


def isolate_real_roots(f: Polynomial) -> list[AlgebraicNumber]:
    """All distinct real roots in increasing order; each carries its multiplicity."""
    p = _trim(_dense(f))
    if not p:
        raise ValueError("the zero polynomial has no isolated roots")
    roots: list[AlgebraicNumber] = []
    for factor, mult in _yun(p):
        st = _Sturm(factor)
        bound = _root_bound(factor)
        _isolate(st, -bound, bound, mult, roots)
    ordered: list[AlgebraicNumber] = []
    for r in roots:
        k = len(ordered)
        while k > 0 and ordered[k - 1].compare(r) > 0:
            k -= 1
        ordered.insert(k, r)
    return ordered


def largest_real_root(f: Polynomial) -> AlgebraicNumber | None:
    p = _trim(_dense(f))
    if not p:
        raise ValueError("the zero polynomial has no largest root")
    return _largest(p)


def _largest(p: Dense) -> AlgebraicNumber | None:
    if len(p) <= 1:
        return None
    sq = _squarefree(p)
    st = _Sturm(sq)
    hi = _root_bound(sq)
    lo = -hi
    c = st.count(lo, hi)
    if c == 0:
        return None
    while c > 1 or st.sign(lo) == 0:
        mid = (lo + hi) / 2
        right = st.count(mid, hi)
        if right >= 1:
            lo, c = mid, right
        elif st.sign(mid) == 0:
            return AlgebraicNumber(_poly_of(st), mid, mid, 1, st)
        else:
            hi = mid
    if st.sign(hi) == 0:
        return AlgebraicNumber(_poly_of(st), hi, hi, 1, st)
    return AlgebraicNumber(_poly_of(st), lo, hi, 1, st)


def count_real_roots(f: Polynomial, lo: RationalLike | None = None,
                     hi: RationalLike | None = None) -> int:
    """Distinct real roots in (lo, hi]; None stands for an infinite endpoint."""
    p = _trim(_dense(f))
    if not p:
        raise ValueError("the zero polynomial has infinitely many roots")
    if len(p) == 1:
        return 0
    st = _Sturm(_squarefree(p))
    return st.count(None if lo is None else to_fraction(lo), None if hi is None else to_fraction(hi))


def real_rooted_check(f: Polynomial) -> bool:
    """True iff all roots are real (counted with multiplicity)."""
    p = _trim(_dense(f))
    if not p:
        raise ValueError("the zero polynomial is excluded")
    total = 0
    for factor, mult in _yun(p):
        total += mult * _Sturm(factor).count(None, None)
    return total == len(p) - 1


# ---------------------------------------------------------------------------
# root sequences


@dataclass
class RootSequence:
    """Largest real roots of f, f', ..., f^(d-1); None marks a missing root."""

    entries: list[AlgebraicNumber | None]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> AlgebraicNumber | None:
        return self.entries[i]

    def exists(self, i: int) -> bool:
        return self.entries[i] is not None

    def equals(self, values: Sequence[RationalLike | AlgebraicNumber | None]) -> bool:
        if len(values) != len(self.entries):
            return False
        for e, v in zip(self.entries, values):
            if (e is None) != (v is None):
                return False
            if e is not None and e.compare(v) != 0:
                return False
        return True

    def to_json(self) -> list:
        return [None if e is None else e.to_json() for e in self.entries]


def root_sequence(f: Polynomial) -> RootSequence:
    p = _trim(_dense(f))
    if len(p) < 2:
        raise ValueError("root sequences need degree >= 1")
    entries = []
    q = p
    for _ in range(len(p) - 1):
        entries.append(_largest(q))
        q = _deriv(q)
    return RootSequence(entries)


@dataclass
class MRSResult:
    holds: bool
    sequence: RootSequence | None = None
    index: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "index": self.index,
            "reason": self.reason,
            "sequence": None if self.sequence is None else self.sequence.to_json(),
        }


def mrs_check(f: Polynomial) -> MRSResult:
    """Decide whether the largest roots of f, f', ... exist and never increase."""
    p = _trim(_dense(f))
    if len(p) <= 1:
        c = p[0] if p else Fraction(0)
        if c >= 0:
            return MRSResult(True, None, None, "nonnegative constant")
        return MRSResult(False, None, None, "negative constant")
    seq = root_sequence(f)
    for i, e in enumerate(seq.entries):
        if e is None:
            return MRSResult(False, seq, i, f"derivative {i} has no real root")
    for i in range(len(seq) - 1):
        if seq[i].compare(seq[i + 1]) < 0:
            return MRSResult(False, seq, i, f"r(f^({i})) < r(f^({i + 1}))")
    return MRSResult(True, seq, None, "monotone")


def from_root_sequence(r: Sequence[RationalLike]) -> Polynomial:
    """Build f_0 from f_d = 1 and f_k(x) = integral of f_{k+1} from r_k to x."""
    rs = [to_fraction(v) for v in r]
    if any(rs[k] < rs[k + 1] for k in range(len(rs) - 1)):
        raise ValueError("root sequence must be nonincreasing")
    f: Dense = [Fraction(1)]
    for rk in reversed(rs):
        anti = [Fraction(0)] + [c / (k + 1) for k, c in enumerate(f)]
        anti[0] = -_eval(anti, rk)
        f = anti
    return Polynomial.from_coefficients(f)
