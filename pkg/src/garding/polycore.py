"""Sparse multivariate polynomials over the rationals and their transforms.

Variables are indexed from 1 in every public function.  Coefficients are
``fractions.Fraction`` values and a polynomial never stores a zero
coefficient, so structural equality is mathematical equality.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator, Mapping, Sequence

Exponent = tuple[int, ...]
RationalLike = int | Fraction | str


def to_fraction(value: Any) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction (never floats)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    return (sum(exp), exp)


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Any] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[Exponent, Fraction] = {}
        for exp, coef in (terms or {}).items():
            key = tuple(int(e) for e in exp)
            if len(key) != nvars:
                raise ValueError(f"exponent {key} does not have length {nvars}")
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            c = to_fraction(coef)
            if c:
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        self._nvars = nvars
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Fraction]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj._nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: RationalLike) -> "Polynomial":
        c = to_fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        _check_index(nvars, i)
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: RationalLike = 1) -> "Polynomial":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[RationalLike]) -> "Polynomial":
        """Univariate polynomial from coefficients listed from the constant term up."""
        return cls(1, {(k,): c for k, c in enumerate(coeffs)})

    # basic structure

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        """Terms in descending graded-lexicographic order."""
        for exp in sorted(self._terms, key=_grlex_key, reverse=True):
            yield exp, self._terms[exp]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    @property
    def degree(self) -> int | None:
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def degree_in(self, i: int) -> int | None:
        _check_index(self._nvars, i)
        if not self._terms:
            return None
        return max(e[i - 1] for e in self._terms)

    @property
    def multidegree(self) -> Exponent:
        out = [0] * self._nvars
        for exp in self._terms:
            for k, e in enumerate(exp):
                if e > out[k]:
                    out[k] = e
        return tuple(out)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get((0,) * self._nvars, Fraction(0))

    def is_multiaffine(self) -> bool:
        return all(e <= 1 for exp in self._terms for e in exp)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def support_variables(self) -> tuple[int, ...]:
        """1-based indices of variables that actually occur."""
        used = set()
        for exp in self._terms:
            used.update(k + 1 for k, e in enumerate(exp) if e)
        return tuple(sorted(used))

    # arithmetic

    def _coerce(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._nvars != self._nvars:
                raise ValueError(f"nvars mismatch: {self._nvars} vs {other._nvars}")
            return other
        return Polynomial.constant(self._nvars, to_fraction(other))

    def __add__(self, other: Any) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Polynomial._raw(self._nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self._nvars, {e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "Polynomial":
        return self

    def __sub__(self, other: Any) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            try:
                c = to_fraction(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = _add_exp(e1, e2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Polynomial._raw(self._nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Polynomial":
        c = to_fraction(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(1 / c)

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self._nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: RationalLike) -> "Polynomial":
        c = to_fraction(c)
        if not c:
            return Polynomial.zero(self._nvars)
        return Polynomial._raw(self._nvars, {e: v * c for e, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    # evaluation

    def __call__(self, *point: Any) -> Fraction:
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        if len(point) != self._nvars:
            raise ValueError(f"expected {self._nvars} coordinates, got {len(point)}")
        xs = [to_fraction(p) for p in point]
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for x, e in zip(xs, exp):
                if e:
                    term *= x**e
            total += term
        return total

    def __repr__(self) -> str:
        return f"Polynomial({self._nvars}, {format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)

    def to_json(self) -> dict:
        return {
            "nvars": self._nvars,
            "terms": [{"exp": list(e), "coef": _fmt_rational(c)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "Polynomial":
        nvars = int(data["nvars"])
        terms: dict[Exponent, Fraction] = {}
        for t in data.get("terms", []):
            key = tuple(int(e) for e in t["exp"])
            terms[key] = terms.get(key, Fraction(0)) + to_fraction(str(t["coef"]))
        return cls(nvars, terms)

    def univariate_coefficients(self) -> list[Fraction]:
        """Dense coefficient list (constant term first) of a 1-variable polynomial."""
        if self._nvars != 1:
            raise ValueError("polynomial is not univariate (nvars != 1)")
        if not self._terms:
            return []
        out = [Fraction(0)] * (self.degree + 1)
        for (k,), c in self._terms.items():
            out[k] = c
        return out


def _check_index(nvars: int, i: int) -> None:
    if not isinstance(i, int) or not 1 <= i <= nvars:
        raise IndexError(f"variable index {i} out of range 1..{nvars}")


# ---------------------------------------------------------------------------
# text format


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(f: Polynomial, var: str = "x", indexed: bool | None = None) -> str:
    """Render in descending grlex order; univariate input prints a bare name unless ``indexed``."""
    if indexed is None:
        indexed = f.nvars != 1
    if f.is_zero():
        return "0"
    pieces: list[str] = []
    for exp, c in f.items():
        mono = "*".join(
            (f"{var}{k + 1}" if indexed else var) + (f"^{e}" if e > 1 else "")
            for k, e in enumerate(exp) if e
        )
        mag = abs(c)
        if not mono:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_rational(mag)}*{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)(\d*)|(\*\*|[-+*/^]))")


def _tokenize(text: str) -> list[tuple[str, Any, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(4)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            index = int(m.group(3)) if m.group(3) else None
            tokens.append(("var", (m.group(2), index), start))
        else:
            op = "^" if m.group(4) == "**" else m.group(4)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def parse_polynomial(text: str, nvars: int | None = None) -> Polynomial:
    """Parse ``3/2*x1^2*x3 - x2 + 1``.

    Indexed names such as ``x3`` or ``w3`` map to variable 3.  A single bare
    name (``x`` or ``t``) is accepted for univariate input and maps to variable 1.
    """
    tokens = _tokenize(text)
    pos = 0
    raw_terms: list[tuple[Fraction, dict]] = []
    seen: list[tuple[tuple[str, int | None], int]] = []

    def peek() -> tuple[str, Any, int]:
        return tokens[pos]

    def take() -> tuple[str, Any, int]:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_int() -> int:
        kind, val, at = take()
        if kind != "int":
            raise PolynomialSyntaxError("expected an integer", at)
        return val

    def parse_factor(coef: Fraction, mono: dict) -> Fraction:
        kind, val, at = take()
        if kind == "int":
            num = Fraction(val)
            if peek()[:2] == ("op", "/"):
                take()
                den_at = peek()[2]
                den = parse_int()
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", den_at)
                num /= den
            return coef * num
        if kind == "var":
            power = 1
            if peek()[:2] == ("op", "^"):
                take()
                power = parse_int()
            mono[val] = mono.get(val, 0) + power
            seen.append((val, at))
            return coef
        raise PolynomialSyntaxError("expected a coefficient or variable", at)

    sign = Fraction(1)
    if peek()[:2] in (("op", "-"), ("op", "+")):
        sign = Fraction(-1) if take()[1] == "-" else Fraction(1)
    while True:
        coef = sign
        mono: dict = {}
        coef = parse_factor(coef, mono)
        while peek()[:2] in (("op", "*"), ("op", "/")):
            if take()[1] == "*":
                coef = parse_factor(coef, mono)
                continue
            den_at = peek()[2]
            den = parse_int()
            if den == 0:
                raise PolynomialSyntaxError("zero denominator", den_at)
            coef /= den
        raw_terms.append((coef, mono))
        kind, val, at = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            take()
            sign = Fraction(-1) if val == "-" else Fraction(1)
            continue
        raise PolynomialSyntaxError(f"unexpected token {val!r}", at)

    bare = {name for (name, idx), _ in seen if idx is None}
    indexed = [(idx, at) for (name, idx), at in seen if idx is not None]
    if bare and indexed:
        raise PolynomialSyntaxError("cannot mix bare and indexed variable names", indexed[0][1])
    if len(bare) > 1:
        raise PolynomialSyntaxError(
            "bare variable names are only allowed for univariate input; use x1, x2, ...", 0
        )
    top = max((idx for idx, _ in indexed), default=1 if bare else 0)
    for idx, at in indexed:
        if idx < 1:
            raise PolynomialSyntaxError("variable indices start at 1", at)
        if nvars is not None and idx > nvars:
            raise PolynomialSyntaxError(f"variable index {idx} exceeds nvars={nvars}", at)
    n = top if nvars is None else nvars
    if bare and n < 1:
        raise PolynomialSyntaxError("nvars must be at least 1", 0)
    out: dict[Exponent, Fraction] = {}
    for coef, mono in raw_terms:
        exp = [0] * n
        for (name, idx), power in mono.items():
            exp[(idx or 1) - 1] += power
        key = tuple(exp)
        out[key] = out.get(key, Fraction(0)) + coef
    return Polynomial(n, out)


def poly_io(value: str | Polynomial, nvars: int | None = None) -> Polynomial | str:
    """Text round trip: parse a string, format a Polynomial."""
    if isinstance(value, Polynomial):
        return format_polynomial(value)
    return parse_polynomial(value, nvars)


def arith(op: str, *operands: Any) -> Polynomial | bool:
    """Dispatch for ``add``, ``mul``, ``scale`` and ``eq``."""
    if op == "add":
        out = operands[0]
        for g in operands[1:]:
            out = out + g
        return out
    if op == "mul":
        out = operands[0]
        for g in operands[1:]:
            out = out * g
        return out
    if op == "scale":
        f, c = operands
        return f.scale(c)
    if op == "eq":
        f, g = operands
        if f.nvars != g.nvars:
            raise ValueError(f"nvars mismatch: {f.nvars} vs {g.nvars}")
        return f == g
    raise ValueError(f"unknown arithmetic operation {op!r}")


# ---------------------------------------------------------------------------
# building blocks


def variables(nvars: int) -> list[Polynomial]:
    return [Polynomial.variable(nvars, i) for i in range(1, nvars + 1)]


def elementary_symmetric(nvars: int, k: int, indices: Sequence[int] | None = None) -> Polynomial:
    """sigma_k in the given variables (all of them by default)."""
    idx = list(range(1, nvars + 1)) if indices is None else list(indices)
    if k < 0 or k > len(idx):
        return Polynomial.zero(nvars)
    terms = {}
    for combo in itertools.combinations(idx, k):
        exp = [0] * nvars
        for i in combo:
            exp[i - 1] += 1
        terms[tuple(exp)] = Fraction(1)
    return Polynomial(nvars, terms)


def subset_monomial(nvars: int, subset: Iterable[int], c: RationalLike = 1) -> Polynomial:
    exp = [0] * nvars
    for i in subset:
        _check_index(nvars, i)
        exp[i - 1] = 1
    return Polynomial(nvars, {tuple(exp): c})


def embed(f: Polynomial, nvars: int, positions: Sequence[int] | None = None) -> Polynomial:
    """Move variable k of ``f`` to variable ``positions[k-1]`` of an ``nvars``-variable ring."""
    pos = list(range(1, f.nvars + 1)) if positions is None else list(positions)
    if len(pos) != f.nvars:
        raise ValueError("positions must list one target per variable")
    out: dict[Exponent, Fraction] = {}
    for exp, c in f._terms.items():
        new = [0] * nvars
        for k, e in enumerate(exp):
            if e:
                _check_index(nvars, pos[k])
                new[pos[k] - 1] += e
        key = tuple(new)
        out[key] = out.get(key, Fraction(0)) + c
    return Polynomial(nvars, out)


def permute_variables(f: Polynomial, perm: Mapping[int, int]) -> Polynomial:
    """Rename x_i to x_{perm[i]} (indices not in ``perm`` stay put)."""
    return embed(f, f.nvars, [perm.get(i, i) for i in range(1, f.nvars + 1)])


def drop_variable(f: Polynomial, i: int) -> Polynomial:
    """Remove variable ``i`` from the ambient ring; ``f`` must not depend on it."""
    _check_index(f.nvars, i)
    if any(exp[i - 1] for exp in f._terms):
        raise ValueError(f"polynomial depends on x{i}")
    return Polynomial._raw(
        f.nvars - 1, {exp[: i - 1] + exp[i:]: c for exp, c in f._terms.items()}
    )


# ---------------------------------------------------------------------------
# transforms


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    _check_index(f.nvars, i)
    k = i - 1
    out: dict[Exponent, Fraction] = {}
    for exp, c in f._terms.items():
        e = exp[k]
        if e:
            out[exp[:k] + (e - 1,) + exp[k + 1 :]] = c * e
    return Polynomial._raw(f.nvars, out)


def multi_derivative(f: Polynomial, alpha: Sequence[int]) -> Polynomial:
    """The mixed derivative of order ``alpha`` (a multi-index)."""
    if len(alpha) != f.nvars:
        raise ValueError("multi-index length must equal nvars")
    out: dict[Exponent, Fraction] = {}
    for exp, c in f._terms.items():
        if all(e >= a for e, a in zip(exp, alpha)):
            factor = 1
            for e, a in zip(exp, alpha):
                factor *= math.perm(e, a)
            out[tuple(e - a for e, a in zip(exp, alpha))] = c * factor
    return Polynomial._raw(f.nvars, out)


def directional_derivative(f: Polynomial, a: Sequence[RationalLike]) -> Polynomial:
    if len(a) != f.nvars:
        raise ValueError("direction length must equal nvars")
    a = [to_fraction(v) for v in a]
    if any(v < 0 for v in a):
        raise ValueError("direction must be componentwise nonnegative")
    out = Polynomial.zero(f.nvars)
    for i, v in enumerate(a, start=1):
        if v:
            out = out + partial_derivative(f, i).scale(v)
    return out


@dataclass(frozen=True)
class PositiveAffineMap:
    """x -> A x + b with A >= 0; ``strict`` additionally requires positive row sums.

    ``matrix`` has one row per variable of the polynomial being pulled back and
    one column per variable of the result.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    translation: tuple[Fraction, ...]
    strict: bool = False

    def __init__(self, matrix: Sequence[Sequence[RationalLike]],
                 translation: Sequence[RationalLike] | None = None, strict: bool = False):
        rows = tuple(tuple(to_fraction(v) for v in row) for row in matrix)
        if not rows:
            raise ValueError("affine map needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        b = tuple(to_fraction(v) for v in translation) if translation is not None else (Fraction(0),) * len(rows)
        if len(b) != len(rows):
            raise ValueError("translation length must match the number of rows")
        if any(v < 0 for r in rows for v in r):
            raise ValueError("positive affine maps need a nonnegative matrix")
        if strict and any(sum(r) <= 0 for r in rows):
            raise ValueError("strictly positive maps need every row sum > 0")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "translation", b)
        object.__setattr__(self, "strict", strict)

    @property
    def domain_dim(self) -> int:
        return len(self.matrix[0])

    @property
    def codomain_dim(self) -> int:
        return len(self.matrix)

    def __call__(self, x: Sequence[RationalLike]) -> tuple[Fraction, ...]:
        xs = [to_fraction(v) for v in x]
        return tuple(sum((a * v for a, v in zip(row, xs)), Fraction(0)) + b
                     for row, b in zip(self.matrix, self.translation))

    @classmethod
    def ray(cls, a: Sequence[RationalLike], b: Sequence[RationalLike]) -> "PositiveAffineMap":
        """t -> a t + b, strict when every a_i > 0."""
        a = [to_fraction(v) for v in a]
        return cls([[v] for v in a], b, strict=all(v > 0 for v in a))


def _linear_forms_pullback(f: Polynomial, forms: list[Polynomial], nvars: int) -> Polynomial:
    cache: dict[tuple[int, int], Polynomial] = {}

    def power(k: int, e: int) -> Polynomial:
        if (k, e) not in cache:
            cache[(k, e)] = forms[k] if e == 1 else power(k, e - 1) * forms[k]
        return cache[(k, e)]

    out = Polynomial.zero(nvars)
    for exp, c in f._terms.items():
        term = Polynomial.constant(nvars, c)
        for k, e in enumerate(exp):
            if e:
                term = term * power(k, e)
        out = out + term
    return out


def substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """f(p_1, ..., p_n) for polynomials p_k sharing one variable count."""
    if len(images) != f.nvars:
        raise ValueError(f"need {f.nvars} images, got {len(images)}")
    if not images:
        return f
    nvars = images[0].nvars
    if any(p.nvars != nvars for p in images):
        raise ValueError("images must share a variable count")
    return _linear_forms_pullback(f, list(images), nvars)


def affine_pullback(f: Polynomial, mu: PositiveAffineMap) -> Polynomial:
    """(mu^* f)(x) = f(A x + b)."""
    if mu.codomain_dim != f.nvars:
        raise ValueError(f"map has {mu.codomain_dim} rows but polynomial has {f.nvars} variables")
    n = mu.domain_dim
    forms = []
    for row, b in zip(mu.matrix, mu.translation):
        terms = {}
        for j, a in enumerate(row):
            if a:
                exp = [0] * n
                exp[j] = 1
                terms[tuple(exp)] = a
        if b:
            terms[(0,) * n] = b
        forms.append(Polynomial(n, terms))
    return _linear_forms_pullback(f, forms, n)


def _dense_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def along_ray(f: Polynomial, a: Sequence[RationalLike], b: Sequence[RationalLike]) -> Polynomial:
    """The univariate polynomial t -> f(a t + b).  No sign conditions are imposed."""
    if len(a) != f.nvars or len(b) != f.nvars:
        raise ValueError("ray data must have one entry per variable")
    a = [to_fraction(v) for v in a]
    b = [to_fraction(v) for v in b]
    powers: dict[tuple[int, int], list[Fraction]] = {}

    def power(k: int, e: int) -> list[Fraction]:
        if (k, e) not in powers:
            base = [b[k], a[k]]
            powers[(k, e)] = base if e == 1 else _dense_mul(power(k, e - 1), base)
        return powers[(k, e)]

    total: list[Fraction] = [Fraction(0)]
    for exp, c in f._terms.items():
        term = [c]
        for k, e in enumerate(exp):
            if e:
                term = _dense_mul(term, power(k, e))
        if len(term) > len(total):
            total.extend([Fraction(0)] * (len(term) - len(total)))
        for i, v in enumerate(term):
            total[i] += v
    return Polynomial.from_coefficients(total)


def restrict(f: Polynomial, i: int, value: RationalLike) -> Polynomial:
    """Substitute x_i = value; the ambient variable count is unchanged."""
    _check_index(f.nvars, i)
    value = to_fraction(value)
    k = i - 1
    out: dict[Exponent, Fraction] = {}
    for exp, c in f._terms.items():
        e = exp[k]
        key = exp[:k] + (0,) + exp[k + 1 :]
        out[key] = out.get(key, Fraction(0)) + c * value**e
    return Polynomial(f.nvars, out)


def homogenize(f: Polynomial) -> Polynomial:
    """Append a variable y and return y^d f(x/y)."""
    if f.is_zero():
        raise ValueError("cannot homogenize the zero polynomial")
    d = f.degree
    return Polynomial._raw(f.nvars + 1, {exp + (d - sum(exp),): c for exp, c in f._terms.items()})


def top_part(f: Polynomial) -> Polynomial:
    if f.is_zero():
        raise ValueError("zero polynomial has no top part")
    d = f.degree
    return Polynomial._raw(f.nvars, {e: c for e, c in f._terms.items() if sum(e) == d})


def bottom_part(f: Polynomial) -> Polynomial:
    if f.is_zero():
        raise ValueError("zero polynomial has no bottom part")
    low = min(sum(e) for e in f._terms)
    return Polynomial._raw(f.nvars, {e: c for e, c in f._terms.items() if sum(e) == low})


def top_bottom(f: Polynomial, which: str) -> Polynomial:
    if which == "top":
        return top_part(f)
    if which == "bottom":
        return bottom_part(f)
    raise ValueError("which must be 'top' or 'bottom'")


def _check_kappa(f: Polynomial, kappa: Sequence[int]) -> tuple[int, ...]:
    kappa = tuple(int(k) for k in kappa)
    if len(kappa) != f.nvars:
        raise ValueError("kappa must have one entry per variable")
    if any(k < m for k, m in zip(kappa, f.multidegree)):
        raise ValueError(f"kappa {kappa} is below the multidegree {f.multidegree}")
    return kappa


def block_index(kappa: Sequence[int], i: int, j: int) -> int:
    """1-based position of x_{ij} in the block-major layout."""
    if not 1 <= i <= len(kappa) or not 1 <= j <= kappa[i - 1]:
        raise IndexError(f"no variable x_{i}{j} for kappa={tuple(kappa)}")
    return sum(kappa[: i - 1]) + j


def polarize(f: Polynomial, kappa: Sequence[int]) -> Polynomial:
    """Symmetric multi-affine lift: x_i^a becomes sigma_a(block i) / C(kappa_i, a)."""
    kappa = _check_kappa(f, kappa)
    total = sum(kappa)
    offsets = [sum(kappa[:i]) for i in range(len(kappa))]
    block_terms: dict[tuple[int, int], list[tuple[int, ...]]] = {}

    def subsets(i: int, a: int) -> list[tuple[int, ...]]:
        if (i, a) not in block_terms:
            block_terms[(i, a)] = list(itertools.combinations(range(offsets[i], offsets[i] + kappa[i]), a))
        return block_terms[(i, a)]

    out: dict[Exponent, Fraction] = {}
    for exp, c in f._terms.items():
        scale = Fraction(1)
        for i, a in enumerate(exp):
            scale /= math.comb(kappa[i], a)
        for choice in itertools.product(*(subsets(i, a) for i, a in enumerate(exp))):
            new = [0] * total
            for block in choice:
                for p in block:
                    new[p] = 1
            key = tuple(new)
            out[key] = out.get(key, Fraction(0)) + c * scale
    return Polynomial(total, out)


def polarization_derivative_pair(f: Polynomial, kappa: Sequence[int], i: int, j: int) -> tuple[Polynomial, Polynomial]:
    """Both sides of d/dx_ij polarize(f, kappa) = polarize(d_i f, kappa - e_i) / kappa_i.

    The left side has x_ij removed so that both live in the same block layout.
    """
    kappa = _check_kappa(f, kappa)
    p = block_index(kappa, i, j)
    lhs = drop_variable(partial_derivative(polarize(f, kappa), p), p)
    lowered = list(kappa)
    lowered[i - 1] -= 1
    rhs = polarize(partial_derivative(f, i), lowered).scale(Fraction(1, kappa[i - 1]))
    return lhs, rhs


def diagonal_project(f: Polynomial, kappa: Sequence[int]) -> Polynomial:
    """Identify every variable of block i with x_i."""
    kappa = tuple(int(k) for k in kappa)
    if any(k < 0 for k in kappa) or sum(kappa) != f.nvars:
        raise ValueError(f"block layout {kappa} does not match {f.nvars} variables")
    owner = [i for i, k in enumerate(kappa) for _ in range(k)]
    out: dict[Exponent, Fraction] = {}
    for exp, c in f._terms.items():
        new = [0] * len(kappa)
        for p, e in enumerate(exp):
            new[owner[p]] += e
        key = tuple(new)
        out[key] = out.get(key, Fraction(0)) + c
    return Polynomial(len(kappa), out)


def invert_ttau(f: Polynomial, kappa: Sequence[int]) -> Polynomial:
    """x^alpha -> (-1)^|alpha| x^(kappa - alpha)."""
    kappa = _check_kappa(f, kappa)
    return Polynomial._raw(
        f.nvars,
        {tuple(k - e for k, e in zip(kappa, exp)): (-c if sum(exp) % 2 else c)
         for exp, c in f._terms.items()},
    )


def combinatorial_inversion(f: Polynomial) -> Polynomial:
    """(prod w) f(1/w) for multi-affine f: complement every support set."""
    if not f.is_multiaffine():
        raise ValueError("combinatorial inversion needs a multi-affine polynomial")
    return Polynomial._raw(f.nvars, {tuple(1 - e for e in exp): c for exp, c in f._terms.items()})


# ---------------------------------------------------------------------------
# linear operators on the monomial basis


def partial_symmetrize(f: Polynomial, i: int, j: int, theta: RationalLike) -> Polynomial:
    """(1 - theta) f + theta f with x_i and x_j swapped."""
    _check_index(f.nvars, i)
    _check_index(f.nvars, j)
    theta = to_fraction(theta)
    if not 0 <= theta <= 1:
        raise ValueError("theta must lie in [0, 1]")
    swapped = permute_variables(f, {i: j, j: i})
    return f.scale(1 - theta) + swapped.scale(theta)


def full_symmetrize(f: Polynomial, n: int) -> Polynomial:
    """x^alpha -> sigma_|alpha|(y_1..y_n) / C(n, |alpha|)."""
    if f.degree is not None and f.degree > n:
        raise ValueError(f"degree {f.degree} exceeds target variable count {n}")
    out = Polynomial.zero(n)
    by_degree: dict[int, Fraction] = {}
    for exp, c in f._terms.items():
        k = sum(exp)
        by_degree[k] = by_degree.get(k, Fraction(0)) + c
    for k, c in by_degree.items():
        out = out + elementary_symmetric(n, k).scale(c / math.comb(n, k))
    return out


def normalize(f: Polynomial) -> Polynomial:
    """x^alpha -> x^alpha / alpha!."""
    out = {}
    for exp, c in f._terms.items():
        fact = 1
        for e in exp:
            fact *= math.factorial(e)
        out[exp] = c / fact
    return Polynomial._raw(f.nvars, out)


def symmetric_multiplier(f: Polynomial, p: Sequence[RationalLike]) -> Polynomial:
    """Univariate x^k -> sigma_k(p) x^k for a nonnegative vector p."""
    if f.nvars != 1:
        raise ValueError("the symmetric multiplier acts on univariate polynomials")
    p = [to_fraction(v) for v in p]
    if any(v < 0 for v in p):
        raise ValueError("multiplier sequence must be nonnegative")
    esym = [Fraction(1)] + [Fraction(0)] * len(p)
    for v in p:
        for k in range(len(p), 0, -1):
            esym[k] += esym[k - 1] * v
    out = {}
    for (k,), c in f._terms.items():
        out[(k,)] = c * (esym[k] if k < len(esym) else 0)
    return Polynomial(1, out)


def operator_apply(f: Polynomial, op: str, **params: Any) -> Polynomial:
    """Name-based dispatch onto the operators above."""
    if op == "partial_symmetrize":
        return partial_symmetrize(f, params["i"], params["j"], params["theta"])
    if op == "full_symmetrize":
        return full_symmetrize(f, params["n"])
    if op == "normalize":
        return normalize(f)
    if op == "symmetric_multiplier":
        return symmetric_multiplier(f, params["p"])
    raise ValueError(f"unknown operator {op!r}")
