"""Matroids stored by their bases, and their generating functions.

Elements are positive integer labels; a subset is an int bitmask with bit
``e - 1`` set for element ``e``.  Generating functions are polynomials in
variables ``w_1 .. w_nvars`` where ``nvars`` defaults to the largest label,
so minors keep their parent's variable numbering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .polycore import (
    Polynomial,
    RationalLike,
    bottom_part,
    combinatorial_inversion,
    elementary_symmetric,
    subset_monomial,
    to_fraction,
)


FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


def _mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        if e < 1:
            raise ValueError(f"matroid elements are positive integers, got {e}")
        m |= 1 << (e - 1)
    return m


def _members(mask: int) -> list[int]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def _submasks(mask: int) -> Iterable[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class Matroid:
    """A matroid on a finite set of positive integer labels, given by its bases."""

    __slots__ = ("ground", "bases", "__dict__")

    def __init__(self, ground: Iterable[int], bases: Iterable[Iterable[int] | int], validate: bool = True):
        self.ground = _mask(ground)
        family = set()
        for b in bases:
            family.add(b if isinstance(b, int) else _mask(b))
        if not family:
            raise ValueError("a matroid needs at least one basis")
        self.bases = frozenset(family)
        sizes = {bin(b).count("1") for b in self.bases}
        if len(sizes) != 1:
            raise ValueError("bases have different cardinalities")
        if any(b & ~self.ground for b in self.bases):
            raise ValueError("a basis uses an element outside the ground set")
        if validate and self.size <= 12:
            bad = self.exchange_violation()
            if bad is not None:
                raise ValueError(f"basis exchange axiom fails for {bad}")

    # construction helpers

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[Iterable[int]]) -> "Matroid":
        return cls(range(1, n + 1), bases)

    @classmethod
    def uniform(cls, r: int, n: int) -> "Matroid":
        if not 0 <= r <= n:
            raise ValueError("need 0 <= r <= n")
        return cls(range(1, n + 1), itertools.combinations(range(1, n + 1), r), validate=False)

    @classmethod
    def deleted_basis_uniform(cls, r: int, n: int) -> "Matroid":
        """U_{r,n} with the basis {1..r} removed (a circuit-hyperplane relaxation in reverse)."""
        if not 1 <= r < n:
            raise ValueError("need 1 <= r < n")
        drop = _mask(range(1, r + 1))
        bases = [b for b in itertools.combinations(range(1, n + 1), r) if _mask(b) != drop]
        return cls(range(1, n + 1), bases)

    @classmethod
    def fano(cls) -> "Matroid":
        """F7: every 3-subset of {1..7} except the seven lines."""
        lines = {_mask(l) for l in FANO_LINES}
        bases = [b for b in (_mask(c) for c in itertools.combinations(range(1, 8), 3)) if b not in lines]
        return cls(range(1, 8), bases, validate=False)

    @classmethod
    def fixture(cls, name: str) -> "Matroid":
        from .fixtures import load_matroid

        return load_matroid(name)

    @classmethod
    def from_graph(cls, vertices: int, edges: Sequence[Sequence[int]]) -> "Matroid":
        """Cycle matroid: element k is edge k; bases are maximal spanning forests."""
        m = len(edges)
        for u, v in edges:
            if not (1 <= u <= vertices and 1 <= v <= vertices):
                raise ValueError(f"edge ({u}, {v}) has an endpoint out of range")

        def acyclic(subset: Sequence[int]) -> bool:
            parent = list(range(vertices + 1))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for k in subset:
                u, v = edges[k - 1]
                ru, rv = find(u), find(v)
                if ru == rv:
                    return False
                parent[ru] = rv
            return True

        rank = 0
        for r in range(min(m, vertices - 1), -1, -1):
            if any(acyclic(c) for c in itertools.combinations(range(1, m + 1), r)):
                rank = r
                break
        bases = [c for c in itertools.combinations(range(1, m + 1), rank) if acyclic(c)]
        return cls(range(1, m + 1), bases, validate=False)

    # basic structure

    @property
    def elements(self) -> list[int]:
        return _members(self.ground)

    @property
    def size(self) -> int:
        return bin(self.ground).count("1")

    @property
    def nvars(self) -> int:
        return self.ground.bit_length()

    @cached_property
    def rank(self) -> int:
        return bin(next(iter(self.bases))).count("1")

    def bases_sets(self) -> list[tuple[int, ...]]:
        return sorted(tuple(_members(b)) for b in self.bases)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and self.bases == other.bases

    def __hash__(self) -> int:
        return hash((self.ground, self.bases))

    def __repr__(self) -> str:
        return f"Matroid(elements={self.elements}, rank={self.rank}, bases={len(self.bases)})"

    def exchange_violation(self) -> tuple | None:
        for b1 in self.bases:
            for b2 in self.bases:
                for x in _members(b1 & ~b2):
                    rest = b1 & ~(1 << (x - 1))
                    if not any((rest | (1 << (y - 1))) in self.bases for y in _members(b2 & ~b1)):
                        return tuple(_members(b1)), tuple(_members(b2)), x
        return None

    def rank_of(self, subset: int | Iterable[int]) -> int:
        s = subset if isinstance(subset, int) else _mask(subset)
        return max(bin(b & s).count("1") for b in self.bases)

    def is_independent(self, subset: int | Iterable[int]) -> bool:
        s = subset if isinstance(subset, int) else _mask(subset)
        return any(s & ~b == 0 for b in self.bases)

    def is_spanning(self, subset: int | Iterable[int]) -> bool:
        s = subset if isinstance(subset, int) else _mask(subset)
        return any(b & ~s == 0 for b in self.bases)

    def closure(self, subset: int | Iterable[int]) -> int:
        s = subset if isinstance(subset, int) else _mask(subset)
        r = self.rank_of(s)
        out = s
        for e in _members(self.ground & ~s):
            if self.rank_of(s | (1 << (e - 1))) == r:
                out |= 1 << (e - 1)
        return out

    def is_loop(self, e: int) -> bool:
        bit = 1 << (e - 1)
        return all(not b & bit for b in self.bases)

    def is_coloop(self, e: int) -> bool:
        bit = 1 << (e - 1)
        return all(b & bit for b in self.bases)

    @cached_property
    def independent_sets(self) -> frozenset[int]:
        out = set()
        for b in self.bases:
            out.update(_submasks(b))
        return frozenset(out)

    @cached_property
    def circuits(self) -> frozenset[int]:
        indep = self.independent_sets
        out = set()
        for size in range(1, self.size + 1):
            for combo in itertools.combinations(self.elements, size):
                s = _mask(combo)
                if s in indep:
                    continue
                if all((s & ~(1 << (e - 1))) in indep for e in combo):
                    out.add(s)
        return frozenset(out)

    def _check_element(self, e: int) -> int:
        bit = 1 << (e - 1) if e >= 1 else 0
        if not bit or not self.ground & bit:
            raise ValueError(f"{e} is not an element of the matroid")
        return bit

    # derived matroids

    def dual(self) -> "Matroid":
        return Matroid(self.elements, [self.ground & ~b for b in self.bases], validate=False)

    def delete(self, e: int) -> "Matroid":
        bit = self._check_element(e)
        ground = _members(self.ground & ~bit)
        if self.is_coloop(e):
            return Matroid(ground, {b & ~bit for b in self.bases}, validate=False)
        return Matroid(ground, [b for b in self.bases if not b & bit], validate=False)

    def contract(self, e: int) -> "Matroid":
        bit = self._check_element(e)
        ground = _members(self.ground & ~bit)
        if self.is_loop(e):
            return Matroid(ground, self.bases, validate=False)
        return Matroid(ground, {b & ~bit for b in self.bases if b & bit}, validate=False)

    def restrict_to(self, subset: int | Iterable[int]) -> "Matroid":
        s = subset if isinstance(subset, int) else _mask(subset)
        if s & ~self.ground:
            raise ValueError("restriction set is not inside the ground set")
        r = self.rank_of(s)
        return Matroid(_members(s), {b & s for b in self.bases if bin(b & s).count("1") == r},
                       validate=False)

    def relabel(self, mapping: Mapping[int, int]) -> "Matroid":
        def move(mask: int) -> int:
            return _mask(mapping.get(e, e) for e in _members(mask))

        ground = [mapping.get(e, e) for e in self.elements]
        if len(set(ground)) != len(ground):
            raise ValueError("relabeling is not injective")
        return Matroid(ground, [move(b) for b in self.bases], validate=False)

    def minor(self, kind: str, arg: int | Iterable[int]) -> "Matroid":
        if kind == "delete":
            return self.delete(arg)
        if kind == "contract":
            return self.contract(arg)
        if kind == "restrict_to":
            return self.restrict_to(arg)
        raise ValueError(f"unknown minor kind {kind!r}")


def _from_circuits(ground: int, circuits: Iterable[int]) -> Matroid:
    family = sorted(set(circuits), key=lambda c: bin(c).count("1"))
    minimal: list[int] = []
    for c in family:
        if not any(m & ~c == 0 for m in minimal):
            minimal.append(c)
    elements = _members(ground)
    indep = [
        s for size in range(len(elements) + 1)
        for s in (_mask(c) for c in itertools.combinations(elements, size))
        if not any(m & ~s == 0 for m in minimal)
    ]
    r = max(bin(s).count("1") for s in indep)
    return Matroid(elements, [s for s in indep if bin(s).count("1") == r])


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    if m1.ground & m2.ground:
        raise ValueError("direct sums need disjoint ground sets")
    return Matroid(m1.elements + m2.elements, {b1 | b2 for b1 in m1.bases for b2 in m2.bases},
                   validate=False)


def _shared_point(m1: Matroid, m2: Matroid, e1: int, e2: int) -> tuple[Matroid, int]:
    m1._check_element(e1)
    m2._check_element(e2)
    rest2 = m2.ground & ~(1 << (e2 - 1))
    if m1.ground & rest2:
        raise ValueError("ground sets must be disjoint apart from the basepoints")
    if e1 != e2 and m1.ground & (1 << (e2 - 1)) == 0 and m2.ground & (1 << (e1 - 1)):
        raise ValueError("basepoint label collides")
    return m2.relabel({e2: e1}), e1


def series_connection(m1: Matroid, m2: Matroid, e1: int, e2: int) -> Matroid:
    """S(M1, M2) with basepoints e1 and e2 identified as element e1."""
    m2, p = _shared_point(m1, m2, e1, e2)
    bit = 1 << (p - 1)
    circuits = [c for c in m1.circuits if not c & bit] + [c for c in m2.circuits if not c & bit]
    circuits += [c1 | c2 for c1 in m1.circuits if c1 & bit for c2 in m2.circuits if c2 & bit]
    return _from_circuits(m1.ground | m2.ground, circuits)


def parallel_connection(m1: Matroid, m2: Matroid, e1: int, e2: int) -> Matroid:
    """P(M1, M2) with basepoints e1 and e2 identified as element e1."""
    m2, p = _shared_point(m1, m2, e1, e2)
    bit = 1 << (p - 1)
    circuits = list(m1.circuits) + list(m2.circuits)
    circuits += [(c1 | c2) & ~bit for c1 in m1.circuits if c1 & bit for c2 in m2.circuits if c2 & bit]
    circuits = [c for c in circuits if c]
    return _from_circuits(m1.ground | m2.ground, circuits)


def two_sum(m1: Matroid, m2: Matroid, e1: int, e2: int) -> Matroid:
    return series_connection(m1, m2, e1, e2).contract(e1)


def connect(m1: Matroid, m2: Matroid, kind: str, e1: int | None = None, e2: int | None = None) -> Matroid:
    if kind == "direct_sum":
        return direct_sum(m1, m2)
    if e1 is None or e2 is None:
        raise ValueError(f"{kind} needs basepoints e1 and e2")
    if kind == "series":
        return series_connection(m1, m2, e1, e2)
    if kind == "parallel":
        return parallel_connection(m1, m2, e1, e2)
    if kind == "two_sum":
        return two_sum(m1, m2, e1, e2)
    raise ValueError(f"unknown connection {kind!r}")


# ---------------------------------------------------------------------------
# flats and Moebius values


@dataclass(frozen=True)
class FlatLattice:
    ground: int
    flats: tuple[int, ...]
    mobius_to_top: dict

    def members(self, flat: int) -> list[int]:
        return _members(flat)


def flats_lattice(m: Matroid) -> FlatLattice:
    if m.size > 20:
        raise ValueError("flat enumeration is limited to 20 elements")
    level = {m.closure(0)}
    flats = set(level)
    while level:
        nxt = set()
        for f in level:
            for e in _members(m.ground & ~f):
                nxt.add(m.closure(f | (1 << (e - 1))))
        nxt -= flats
        flats |= nxt
        level = nxt
    order = sorted(flats, key=lambda f: (-bin(f).count("1"), f))
    mu: dict[int, int] = {}
    for f in order:
        if f == m.ground:
            mu[f] = 1
        else:
            mu[f] = -sum(mu[g] for g in mu if g != f and g & f == f)
    return FlatLattice(m.ground, tuple(sorted(flats, key=lambda f: (bin(f).count("1"), f))), mu)


# ---------------------------------------------------------------------------
# generating functions


def _v(nvars: int, subset: int) -> Polynomial:
    """prod_{e in subset} (w_e + 1)."""
    out = Polynomial.constant(nvars, 1)
    for e in _members(subset):
        out = out * (Polynomial.variable(nvars, e) + 1)
    return out


def _from_masks(nvars: int, masks: Iterable[int]) -> Polynomial:
    terms: dict[tuple[int, ...], Fraction] = {}
    for s in masks:
        key = tuple((s >> k) & 1 for k in range(nvars))
        terms[key] = terms.get(key, Fraction(0)) + 1
    return Polynomial(nvars, terms)


def _ssgf_brute(m: Matroid, nvars: int) -> Polynomial:
    return _from_masks(nvars, (s for s in _submasks(m.ground) if m.is_spanning(s)))


def _ssgf_mobius(m: Matroid, nvars: int) -> Polynomial:
    lattice = flats_lattice(m)
    out = Polynomial.zero(nvars)
    for f, mu in lattice.mobius_to_top.items():
        if mu:
            out = out + _v(nvars, f).scale(mu)
    return out


def _ssgf_recursive(m: Matroid, nvars: int) -> Polynomial:
    lattice = flats_lattice(m)
    cache: dict[int, Polynomial] = {}
    for f in lattice.flats:  # increasing size, so proper subflats come first
        below = Polynomial.zero(nvars)
        for g, sg in cache.items():
            if g != f and g & f == g:
                below = below + sg
        cache[f] = _v(nvars, f) - below
    return cache[m.ground]


def genfun(m: Matroid, which: str, method: str = "brute", nvars: int | None = None) -> Polynomial:
    """Independent-set, basis, spanning-set or cospanning-set generating function."""
    n = m.nvars if nvars is None else nvars
    if n < m.nvars:
        raise ValueError("nvars is smaller than the largest element label")
    if method not in ("brute", "mobius", "recursive"):
        raise ValueError(f"unknown method {method!r}")
    if method == "brute" and m.size > 20:
        raise ValueError("brute-force enumeration is limited to 20 elements")
    if which == "ssgf":
        if method == "brute":
            return _ssgf_brute(m, n)
        return (_ssgf_mobius if method == "mobius" else _ssgf_recursive)(m, n)
    if which == "csgf":
        if method == "brute":
            return _from_masks(n, (m.ground & ~s for s in m.independent_sets))
        return genfun(m.dual(), "ssgf", method, n)
    if which == "bsgf":
        if method == "brute":
            return _from_masks(n, m.bases)
        return bottom_part(genfun(m, "ssgf", method, n))
    if which == "isgf":
        if method == "brute":
            return _from_masks(n, m.independent_sets)
        return _complement_within(genfun(m, "csgf", method, n), m.ground)
    raise ValueError(f"unknown generating function {which!r}")


def _complement_within(f: Polynomial, ground: int) -> Polynomial:
    """Combinatorial inversion restricted to the variables of ``ground``."""
    if ground == (1 << f.nvars) - 1:
        return combinatorial_inversion(f)
    flip = [(ground >> k) & 1 for k in range(f.nvars)]
    return Polynomial(f.nvars, {tuple(e ^ s for e, s in zip(exp, flip)): c for exp, c in f.terms.items()})


def named_polynomials(nvars: int) -> dict[str, Polynomial]:
    """sigma_k shortcuts used by the closed-form checks."""
    return {f"sigma{k}": elementary_symmetric(nvars, k) for k in range(nvars + 1)}


def uniform_ssgf_closed_form(r: int, n: int) -> Polynomial:
    out = Polynomial.zero(n)
    for j in range(r, n + 1):
        out = out + elementary_symmetric(n, j)
    return out


def two_block_specialize(r: int, q: int, t: RationalLike) -> Polynomial:
    """g_{r,q}(x, y) - t x^r, where g_{r,q} is S of U_{r,r+q} at (x,...,x, y,...,y)."""
    t = to_fraction(t)
    if r < 1 or q < 1:
        raise ValueError("need r >= 1 and q >= 1")
    if not 0 <= t <= 1:
        raise ValueError("t must lie in [0, 1]")
    return uniform_two_block(r, q) - Polynomial(2, {(r, 0): t})


def uniform_two_block(r: int, q: int) -> Polynomial:
    """sum_{j >= r} sigma_j evaluated at r copies of x and q copies of y (r may be 0)."""
    from math import comb

    terms = {}
    for a in range(r + 1):
        for b in range(q + 1):
            if a + b >= r:
                terms[(a, b)] = comb(r, a) * comb(q, b)
    return Polynomial(2, terms)


def deletion_contraction_ssgf(m: Matroid, e: int, nvars: int | None = None) -> Polynomial:
    """Right-hand side of the spanning-set deletion-contraction formula."""
    n = m.nvars if nvars is None else nvars
    w = Polynomial.variable(n, e)
    if m.is_coloop(e):
        return w * genfun(m.contract(e), "ssgf", nvars=n)
    if m.is_loop(e):
        return (w + 1) * genfun(m.delete(e), "ssgf", nvars=n)
    return w * genfun(m.contract(e), "ssgf", nvars=n) + genfun(m.delete(e), "ssgf", nvars=n)


def deletion_contraction_csgf(m: Matroid, e: int, nvars: int | None = None) -> Polynomial:
    """Right-hand side of the cospanning-set deletion-contraction formula."""
    n = m.nvars if nvars is None else nvars
    w = Polynomial.variable(n, e)
    if m.is_loop(e):
        return w * genfun(m.delete(e), "csgf", nvars=n)
    if m.is_coloop(e):
        return (w + 1) * genfun(m.delete(e), "csgf", nvars=n)
    return w * genfun(m.delete(e), "csgf", nvars=n) + genfun(m.contract(e), "csgf", nvars=n)


def subset_polynomial(nvars: int, subset: Iterable[int]) -> Polynomial:
    return subset_monomial(nvars, subset)
