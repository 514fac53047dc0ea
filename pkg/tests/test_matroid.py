import itertools
import random
from fractions import Fraction

import pytest

from garding.checkers import ProbeConfig, mrs_ray_probe
from garding.matroid import (
    FANO_LINES,
    Matroid,
    connect,
    deletion_contraction_csgf,
    deletion_contraction_ssgf,
    direct_sum,
    flats_lattice,
    genfun,
    parallel_connection,
    series_connection,
    subset_polynomial,
    two_block_specialize,
    two_sum,
    uniform_ssgf_closed_form,
    uniform_two_block,
)
from garding.polycore import (
    Polynomial,
    along_ray,
    bottom_part,
    combinatorial_inversion,
    diagonal_project,
    parse_polynomial,
    partial_derivative,
    top_part,
)
from garding.realroots import mrs_check, root_sequence

FIXTURES = ("fano", "mk4", "w3", "p6", "q6", "s8")
K4_EDGES = [(1, 2), (2, 3), (1, 3), (3, 4), (1, 4), (2, 4)]


def brute_rank(m: Matroid, subset) -> int:
    s = set(subset)
    return max(len(s & set(b)) for b in m.bases_sets())


# construction


def test_basis_counts():
    assert len(Matroid.uniform(2, 4).bases) == 6
    assert len(Matroid.fano().bases) == 28
    assert len(Matroid.from_graph(4, K4_EDGES).bases) == 16
    assert len(Matroid.fixture("s8").bases) == 48
    assert Matroid.fixture("mk4") == Matroid.from_graph(4, K4_EDGES)


def test_fano_lines_are_dependent():
    f = Matroid.fano()
    for line in FANO_LINES:
        assert f.rank_of(line) == 2
    assert f.rank == 3


def test_invalid_bases_rejected():
    with pytest.raises(ValueError):
        Matroid.from_bases(4, [[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        Matroid.from_bases(3, [[1, 2], [3]])


def test_deleted_basis_uniform():
    m = Matroid.deleted_basis_uniform(2, 4)
    assert len(m.bases) == 5
    assert (1, 2) not in m.bases_sets()


def test_rank_closure_and_loops():
    m = Matroid.from_bases(4, [[1, 2], [1, 3], [2, 3]])
    assert m.is_loop(4)
    assert not m.is_coloop(1)
    assert m.closure([1]) == 0b1001
    for s in itertools.chain.from_iterable(itertools.combinations(range(1, 5), k) for k in range(5)):
        assert m.rank_of(s) == brute_rank(m, s)
    c = Matroid.from_bases(2, [[1, 2]])
    assert c.is_coloop(1) and c.is_coloop(2)


def test_circuits_of_uniform():
    m = Matroid.uniform(2, 4)
    assert len(m.circuits) == 4
    assert all(bin(c).count("1") == 3 for c in m.circuits)


# duality and minors


def test_dual_involution_and_rank():
    for name in FIXTURES:
        m = Matroid.fixture(name)
        assert m.dual().dual() == m
        assert m.dual().rank == m.size - m.rank
    assert Matroid.uniform(2, 5).dual() == Matroid.uniform(3, 5)


def test_minor_examples():
    u24 = Matroid.uniform(2, 4)
    assert u24.delete(4) == Matroid.uniform(2, 3)
    cycle = Matroid.from_graph(3, [(1, 2), (2, 3), (1, 3)])
    assert cycle.contract(3) == Matroid.uniform(1, 2)
    assert Matroid.fano().restrict_to([1, 2, 3]) == Matroid.uniform(2, 3)
    assert u24.minor("delete", 4) == u24.delete(4)
    with pytest.raises(ValueError):
        u24.delete(5)
    with pytest.raises(ValueError):
        u24.minor("bogus", 1)


def test_delete_contract_duality():
    for name in ("fano", "mk4", "q6"):
        m = Matroid.fixture(name)
        for e in m.elements:
            assert m.delete(e).dual() == m.dual().contract(e)


def test_coloop_deletion_drops_rank():
    m = Matroid.from_bases(3, [[1, 2], [1, 3]])
    assert m.is_coloop(1)
    d = m.delete(1)
    assert d.rank == 1
    assert d == m.contract(1)


# flats


def test_flats_of_u23():
    lattice = flats_lattice(Matroid.uniform(2, 3))
    assert len(lattice.flats) == 5
    values = [lattice.mobius_to_top[f] for f in lattice.flats]
    assert values == [2, -1, -1, -1, 1]


def test_fano_flats():
    lattice = flats_lattice(Matroid.fano())
    sizes = sorted(bin(f).count("1") for f in lattice.flats)
    assert sizes == [0] + [1] * 7 + [3] * 7 + [7]


def test_free_matroid_mobius():
    lattice = flats_lattice(Matroid.uniform(3, 3))
    assert len(lattice.flats) == 8
    for f, mu in lattice.mobius_to_top.items():
        assert mu == (-1) ** (3 - bin(f).count("1"))


# generating functions


def test_three_ssgf_methods_agree():
    cases = [Matroid.uniform(r, n) for n in range(1, 6) for r in range(n + 1)]
    cases += [Matroid.fixture(name) for name in FIXTURES]
    for m in cases:
        brute = genfun(m, "ssgf", "brute")
        assert genfun(m, "ssgf", "mobius") == brute
        assert genfun(m, "ssgf", "recursive") == brute


def test_generating_function_relations():
    for name in FIXTURES:
        m = Matroid.fixture(name)
        s, c = genfun(m, "ssgf"), genfun(m, "csgf")
        i, b = genfun(m, "isgf"), genfun(m, "bsgf")
        assert b == bottom_part(s) == top_part(i)
        assert c == combinatorial_inversion(i)
        assert c == genfun(m.dual(), "ssgf")
        for method in ("mobius", "recursive"):
            assert genfun(m, "csgf", method) == c
            assert genfun(m, "isgf", method) == i
            assert genfun(m, "bsgf", method) == b


def test_deletion_contraction():
    for name in FIXTURES:
        m = Matroid.fixture(name)
        s, c = genfun(m, "ssgf"), genfun(m, "csgf")
        for e in m.elements:
            assert deletion_contraction_ssgf(m, e) == s
            assert deletion_contraction_csgf(m, e) == c


def test_deletion_contraction_with_loops_and_coloops():
    m = Matroid.from_bases(3, [[1]])
    assert m.is_coloop(1) and m.is_loop(2)
    for e in (1, 2, 3):
        assert deletion_contraction_ssgf(m, e) == genfun(m, "ssgf")
        assert deletion_contraction_csgf(m, e) == genfun(m, "csgf")


def test_cycle_cospanning():
    c4 = Matroid.from_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    w = [Polynomial.variable(4, i) + 1 for i in range(1, 5)]
    assert genfun(c4, "csgf") == w[0] * w[1] * w[2] * w[3] - 1


def test_uniform_closed_form():
    for n in range(1, 7):
        for r in range(n + 1):
            assert genfun(Matroid.uniform(r, n), "ssgf") == uniform_ssgf_closed_form(r, n)


def test_uniform_diagonal_roots_are_zero_or_minus_one():
    for n in range(1, 7):
        for r in range(n + 1):
            d = along_ray(uniform_ssgf_closed_form(r, n), [1] * n, [0] * n)
            seq = root_sequence(d)
            assert mrs_check(d).holds
            assert all(x.is_rational() and x.value in (0, -1) for x in seq.entries)


def test_relaxation_removes_one_monomial():
    for n in range(2, 7):
        for r in range(1, n):
            lhs = genfun(Matroid.deleted_basis_uniform(r, n), "ssgf")
            assert lhs == uniform_ssgf_closed_form(r, n) - subset_polynomial(n, range(1, r + 1))


def test_genfun_bad_arguments():
    m = Matroid.uniform(1, 2)
    with pytest.raises(ValueError):
        genfun(m, "xsgf")
    with pytest.raises(ValueError):
        genfun(m, "ssgf", "magic")
    with pytest.raises(ValueError):
        genfun(m, "ssgf", nvars=1)


# two-block family


def test_two_block_small_cases():
    assert two_block_specialize(1, 1, 0) == parse_polynomial("x1*x2 + x1 + x2")
    assert uniform_two_block(0, 2) == parse_polynomial("x2^2 + 2*x2 + 1")
    with pytest.raises(ValueError):
        two_block_specialize(0, 1, 0)
    with pytest.raises(ValueError):
        two_block_specialize(1, 1, 2)


def test_two_block_derivative_lowers_r():
    for r in range(2, 5):
        for q in range(1, 4):
            for t in (0, Fraction(1, 2), 1):
                lhs = partial_derivative(two_block_specialize(r, q, t), 1)
                assert lhs == two_block_specialize(r - 1, q, t).scale(r)


def test_two_block_matches_relaxed_uniform():
    s = genfun(Matroid.deleted_basis_uniform(2, 4), "ssgf")
    assert diagonal_project(s, [2, 2]) == two_block_specialize(2, 2, 1)
    assert diagonal_project(uniform_ssgf_closed_form(3, 5), [3, 2]) == uniform_two_block(3, 2)


def test_two_block_ray_probes_do_not_refute():
    cfg = ProbeConfig()
    for r in range(1, 5):
        for q in range(1, 5):
            assert not mrs_ray_probe(two_block_specialize(r, q, 1), cfg).is_refuted


# connections


def small_matroids():
    out = []
    for n in range(1, 4):
        for r in range(n + 1):
            out.append(Matroid.uniform(r, n))
    out.append(Matroid.from_bases(3, [[1]]))
    out.append(Matroid.from_bases(3, [[1, 2], [1, 3]]))
    return out


def shifted(m: Matroid, offset: int, base: int) -> Matroid:
    """Relabel so that ``base`` becomes element 1 and the rest move above ``offset``."""
    others = [e for e in m.elements if e != base]
    mapping = {base: 1, **{e: offset + k + 1 for k, e in enumerate(others)}}
    return m.relabel(mapping)


def pairs():
    for m1, m2 in itertools.product(small_matroids(), repeat=2):
        for b1 in m1.elements:
            for b2 in m2.elements:
                a = shifted(m1, 1, b1)
                b = shifted(m2, a.size, b2)
                yield a, b


def cs(m, n):
    return genfun(m, "csgf", nvars=n)


def test_direct_sum_multiplies_cospanning_polynomials():
    m1 = Matroid.uniform(1, 2)
    m2 = Matroid.uniform(2, 3).relabel({1: 3, 2: 4, 3: 5})
    m = direct_sum(m1, m2)
    assert cs(m, 5) == cs(m1, 5) * cs(m2, 5)
    assert connect(m1, m2, "direct_sum") == m
    with pytest.raises(ValueError):
        direct_sum(m1, m1)


def test_parallel_and_series_formulas_for_nonloop_basepoints():
    checked = 0
    for m1, m2 in pairs():
        if m1.is_loop(1) or m2.is_loop(1):
            continue
        n = m1.size + m2.size - 1
        w = Polynomial.variable(n, 1)
        fe, fE = cs(m1.delete(1), n), cs(m1.contract(1), n)
        ge, gE = cs(m2.delete(1), n), cs(m2.contract(1), n)
        p = parallel_connection(m1, m2, 1, 1)
        assert cs(p, n) == w * (fe * gE + fE * ge - fE * gE) + fE * gE
        s = series_connection(m1, m2, 1, 1)
        assert cs(s, n) == w * fe * ge + fe * gE + fE * ge - fE * gE
        checked += 1
    assert checked > 50


def test_parallel_formula_when_first_basepoint_is_a_loop():
    checked = 0
    for m1, m2 in pairs():
        if not m1.is_loop(1):
            continue
        n = m1.size + m2.size - 1
        w = Polynomial.variable(n, 1)
        p = parallel_connection(m1, m2, 1, 1)
        assert cs(p, n) == w * cs(m1.delete(1), n) * cs(m2.contract(1), n)
        checked += 1
    assert checked > 5


def test_series_of_two_parallel_pairs():
    a = Matroid.uniform(1, 2)
    b = Matroid.uniform(1, 2).relabel({2: 3})
    s = series_connection(a, b, 1, 1)
    assert s == Matroid.uniform(2, 3)
    assert parallel_connection(a, b, 1, 1) == Matroid.uniform(1, 3)


def test_two_sum_is_a_contraction_of_the_series_connection():
    a = Matroid.uniform(2, 3)
    b = Matroid.uniform(2, 3).relabel({2: 4, 3: 5})
    t = two_sum(a, b, 1, 1)
    assert t == series_connection(a, b, 1, 1).contract(1)
    assert t.elements == [2, 3, 4, 5]
    assert connect(a, b, "two_sum", 1, 1) == t
    with pytest.raises(ValueError):
        connect(a, b, "series")


def test_connection_basepoint_errors():
    a = Matroid.uniform(1, 2)
    with pytest.raises(ValueError):
        series_connection(a, a, 1, 1)
    with pytest.raises(ValueError):
        parallel_connection(a, a.relabel({2: 3}), 5, 1)


def test_random_bases_dual_round_trip():
    rng = random.Random(4)
    for _ in range(10):
        n = rng.randint(2, 6)
        r = rng.randint(0, n)
        m = Matroid.uniform(r, n)
        e = rng.randint(1, n)
        assert genfun(m.dual(), "ssgf") == genfun(m, "csgf")
        assert m.delete(e).dual() == m.dual().contract(e)
