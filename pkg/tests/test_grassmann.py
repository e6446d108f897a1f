import itertools

import pytest
import sympy
from hypothesis import given

from orbit_atlas.grassmann import (
    Color,
    Coloring,
    ConsistentInvolution,
    Partition,
    all_colorings,
    bitstring_from_partition,
    codimension_d,
    coloring,
    covering_comparison,
    enumerate_consistent,
    max_orbit_involution,
    min_orbit_involution,
    partition_from_bitstring,
    partitions_in_box,
    restricted_leq,
    restricted_rank_table,
    verify_restriction_theorem,
)
from orbit_atlas.involutions import Involution, enumerate_involutions, melnikov_leq, rank_table
from orbit_atlas.linalg import canonical_pair

from conftest import colorings

LAM9 = Partition((5, 4, 2, 1), 4, 9)
MU9 = Partition((4, 4, 4, 1, 1), 5, 9)


def inv(n, *arcs):
    return Involution.from_arcs(n, arcs)


def cw_of(c, *arcs):
    return ConsistentInvolution(inv(c.n, *arcs), c)


def orbit_codimension(cw, lam, mu):
    """|lam| + |mu| - dim B.(U, W), the orbit dimension read off a tangent map."""
    u, w = canonical_pair(cw, lam, mu)
    n, k, m = lam.n, u.dim, w.dim
    U = sympy.Matrix(n, k, lambda i, j: u.basis.entry(i + 1, j + 1))
    W = sympy.Matrix(n, m, lambda i, j: w.basis.entry(i + 1, j + 1))
    vectors = []
    for a in range(n):
        for b in range(a, n):
            e = sympy.zeros(n, n)
            e[a, b] = 1
            vectors.append(list(e * U) + list(e * W))
    for a in range(k):
        for b in range(k):
            e = sympy.zeros(k, k)
            e[a, b] = 1
            vectors.append(list(U * e) + [0] * (n * m))
    for a in range(m):
        for b in range(m):
            e = sympy.zeros(m, m)
            e[a, b] = 1
            vectors.append([0] * (n * k) + list(W * e))
    dim = sympy.Matrix(vectors).rank() - k * k - m * m
    return lam.size + mu.size - dim


def greedy_adjacent(c):
    """Repeatedly join the rightmost Black/White pair with only Greys (or used
    vertices) between them; a different order than the stack scan."""
    used, arcs = set(), []
    while True:
        live = [i for i in range(1, c.n + 1) if i not in used and c[i] != Color.GREY]
        pairs = [(a, b) for a, b in zip(live, live[1:])
                 if c[a] == Color.BLACK and c[b] == Color.WHITE]
        if not pairs:
            return inv(c.n, *arcs)
        a, b = pairs[-1]
        used.update((a, b))
        arcs.append((a, b))


class TestPartitions:
    def test_example_bitstrings(self):
        assert bitstring_from_partition(LAM9) == (0, 1, 0, 1, 0, 0, 1, 0, 1)
        assert bitstring_from_partition(MU9) == (0, 1, 1, 0, 0, 0, 1, 1, 1)

    def test_empty_partition(self):
        assert bitstring_from_partition(Partition((), 3, 5)) == (1, 1, 1, 0, 0)

    def test_full_square(self):
        assert bitstring_from_partition(Partition((2, 2), 2, 4)) == (0, 0, 1, 1)

    def test_inverse(self):
        assert partition_from_bitstring((0, 1, 0, 1, 0, 0, 1, 0, 1)) == LAM9
        assert partition_from_bitstring((1, 1, 0), 2, 3) == Partition((), 2, 3)
        with pytest.raises(ValueError):
            partition_from_bitstring((1, 0, 0), 2, 3)

    @pytest.mark.parametrize("k", range(0, 4))
    def test_round_trip_3x3_box(self, k):
        for p in partitions_in_box(k, k + 3 if k else 3):
            assert partition_from_bitstring(bitstring_from_partition(p), p.k, p.n) == p

    def test_box_count(self):
        assert len(partitions_in_box(3, 6)) == 20

    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2), 2, 4)
        with pytest.raises(ValueError):
            Partition((3, 1), 2, 4)
        with pytest.raises(ValueError):
            Partition((1, 1, 1), 2, 4)
        assert Partition((1, 0, 0), 1, 3).parts == (1,)


class TestColoring:
    def test_nine_points(self):
        assert coloring(LAM9, MU9).values() == (0, 2, 1, 1, 0, 0, 2, 1, 2)

    def test_all_grey_and_mixed(self):
        c = coloring(Partition((2, 1), 2, 4), Partition((1, 0), 2, 4))
        assert c.values() == (1, 1, 1, 1)
        c = coloring(Partition((1, 0), 2, 4), Partition((0, 0), 2, 4))
        assert c.values() == (2, 1, 1, 0)

    def test_equal_partitions_have_no_grey(self):
        for p in partitions_in_box(2, 5):
            c = coloring(p, p)
            assert c.greys == ()
            assert tuple(v // 2 for v in c.values()) == bitstring_from_partition(p)

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            coloring(Partition((1,), 1, 3), Partition((1,), 1, 4))

    def test_rejects_bad_symbols(self):
        with pytest.raises(ValueError):
            Coloring.of((0, 3))


class TestConsistent:
    def test_square_box(self):
        p = Partition((2, 2), 2, 4)
        got = [cw.w for cw in enumerate_consistent(p, p)]
        want = [Involution.identity(4), inv(4, (1, 3)), inv(4, (1, 4)), inv(4, (2, 3)),
                inv(4, (2, 4)), inv(4, (1, 3), (2, 4)), inv(4, (1, 4), (2, 3))]
        assert sorted(got) == sorted(want)
        assert got == sorted(got)

    def test_only_identity(self):
        only_id = [Involution.identity(4)]
        got = enumerate_consistent(Partition((2, 1), 2, 4), Partition((1, 0), 2, 4))
        assert [cw.w for cw in got] == only_id
        got = enumerate_consistent(Partition((1, 0), 2, 4), Partition((0, 0), 2, 4))
        assert [cw.w for cw in got] == only_id

    def test_hook_has_five(self):
        p = Partition((2, 1), 2, 4)
        assert len(enumerate_consistent(p, p)) == 5

    def test_inconsistent_rejected(self):
        c = Coloring.of((0, 2, 0, 2))
        with pytest.raises(ValueError):
            cw_of(c, (1, 3))

    @given(colorings(max_n=7))
    def test_arcs_run_black_to_white(self, c):
        elements = enumerate_consistent(c)
        assert elements[0].w == Involution.identity(c.n)
        for cw in elements:
            for i, j in cw.w.arcs:
                assert i < j and c[i] == Color.BLACK and c[j] == Color.WHITE

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_filter_of_all_involutions(self, n):
        for values in itertools.product(range(3), repeat=n):
            c = Coloring.of(values)
            want = [w for w in enumerate_involutions(n)
                    if all(c[i] == Color.BLACK and c[j] == Color.WHITE for i, j in w.arcs)]
            assert [cw.w for cw in enumerate_consistent(c)] == want


class TestCodimension:
    def test_two_arcs_four_crossings(self):
        c = coloring(LAM9, MU9)
        assert codimension_d(cw_of(c, (1, 7), (5, 9))) == 4

    def test_identity_in_square(self):
        p = Partition((2, 2), 2, 4)
        assert codimension_d(min_orbit_involution(coloring(p, p))) == 4

    def test_min_orbit_nine_points(self):
        assert codimension_d(min_orbit_involution(coloring(LAM9, MU9))) == 7

    def test_all_grey(self):
        c = Coloring.of((1, 1, 1, 1))
        assert min_orbit_involution(c).w == Involution.identity(4)
        assert codimension_d(min_orbit_involution(c)) == 0

    @pytest.mark.parametrize("n", range(1, 5))
    def test_matches_tangent_space(self, n):
        for lam, mu, c in all_colorings(n):
            for cw in enumerate_consistent(c):
                assert codimension_d(cw) == orbit_codimension(cw, lam, mu), (lam, mu, cw)

    def test_tangent_space_two_arcs(self):
        c = coloring(LAM9, MU9)
        assert orbit_codimension(cw_of(c, (1, 7), (5, 9)), LAM9, MU9) == 4

    @pytest.mark.parametrize("n", range(1, 7))
    def test_bounds_and_unique_open_orbit(self, n):
        for lam, mu, c in all_colorings(n):
            top = max_orbit_involution(c)
            for cw in enumerate_consistent(c):
                d = codimension_d(cw)
                assert 0 <= d <= lam.size + mu.size
                assert (d == 0) == (cw == top)
            assert codimension_d(min_orbit_involution(c)) == len(c.black_white_pairs())


class TestRestrictedOrder:
    def test_identity_zero_table(self):
        c = Coloring.of((0, 0, 2, 2))
        assert set(restricted_rank_table(min_orbit_involution(c)).values()) == {0}

    def test_nested_pair(self):
        c = Coloring.of((0, 0, 2, 2))
        r = restricted_rank_table(cw_of(c, (1, 4), (2, 3)))
        assert r == {(1, 3): 1, (1, 4): 2, (2, 3): 1, (2, 4): 1}

    @given(colorings(max_n=7))
    def test_table_is_restriction_of_full_table(self, c):
        for cw in enumerate_consistent(c):
            full = rank_table(cw.w)
            assert restricted_rank_table(cw) == {key: full[key] for key in c.black_white_pairs()}

    def test_cover_without_intermediate(self):
        c = Coloring.of((0, 2, 0, 2))
        low, high = cw_of(c, (1, 4)), cw_of(c, (1, 2))
        assert restricted_leq(low, high) and not restricted_leq(high, low)
        between = [x for x in enumerate_consistent(c)
                   if x not in (low, high) and restricted_leq(low, x) and restricted_leq(x, high)]
        assert between == []

    def test_coloring_mismatch(self):
        a = min_orbit_involution(Coloring.of((0, 2)))
        b = min_orbit_involution(Coloring.of((1, 1)))
        with pytest.raises(ValueError):
            restricted_leq(a, b)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_order_properties(self, n):
        seen = set()
        for _, _, c in all_colorings(n):
            if c in seen:
                continue
            seen.add(c)
            elements = enumerate_consistent(c)
            top, bottom = max_orbit_involution(c), min_orbit_involution(c)
            for x in elements:
                assert restricted_leq(bottom, x) and restricted_leq(x, top)
            for x, y in itertools.permutations(elements, 2):
                if restricted_leq(x, y):
                    assert not restricted_leq(y, x)
                    assert codimension_d(x) > codimension_d(y)
            if n <= 5:
                for x, y, z in itertools.product(elements, repeat=3):
                    if restricted_leq(x, y) and restricted_leq(y, z):
                        assert restricted_leq(x, z)


class TestExtremes:
    def test_square_coloring(self):
        assert max_orbit_involution(Coloring.of((0, 0, 2, 2))).w == inv(4, (1, 4), (2, 3))

    def test_nine_point_coloring(self):
        c = Coloring.of((0, 2, 1, 1, 0, 0, 2, 1, 2))
        assert max_orbit_involution(c).w == inv(9, (1, 2), (6, 7), (5, 9))

    def test_all_grey(self):
        assert max_orbit_involution(Coloring.of((1, 1, 1))).w == Involution.identity(3)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_greedy_order_does_not_matter(self, n):
        for values in itertools.product(range(3), repeat=n):
            c = Coloring.of(values)
            assert max_orbit_involution(c).w == greedy_adjacent(c)

    @given(colorings(max_n=10))
    def test_leftover_whites_precede_blacks(self, c):
        top = max_orbit_involution(c)
        fixed = set(top.w.fixed_points)
        whites = [j for j in c.whites if j in fixed]
        blacks = [i for i in c.blacks if i in fixed]
        assert not whites or not blacks or max(whites) < min(blacks)
        assert codimension_d(top) == 0


class TestRestrictionTheorem:
    def test_n4(self):
        assert verify_restriction_theorem(4).passed

    def test_n6(self):
        report = verify_restriction_theorem(6)
        assert report.passed, report.summary()
        assert report.cells == sum(4 ** n for n in range(1, 7))

    def test_degenerate_cell(self):
        c = Coloring.of((1, 1, 1, 1))
        assert len(enumerate_consistent(c)) == 1

    @pytest.mark.parametrize("n", range(1, 6))
    def test_against_melnikov_directly(self, n):
        for _, _, c in all_colorings(n):
            elements = enumerate_consistent(c)
            for x, y in itertools.product(elements, repeat=2):
                assert restricted_leq(x, y) == melnikov_leq(x.w, y.w)


class TestCoverComparison:
    def test_hook_broken_cover(self):
        p = Partition((2, 1), 2, 4)
        broken = covering_comparison(p, p)
        found = {(b.v, b.w): b.intermediates for b in broken}
        assert found[inv(4, (1, 4)), inv(4, (1, 2))] == (inv(4, (1, 3)),)

    def test_square_is_computed(self):
        p = Partition((2, 2), 2, 4)
        broken = covering_comparison(p, p)
        members = {cw.w for cw in enumerate_consistent(p, p)}
        for b in broken:
            assert b.v in members and b.w in members
            assert not set(b.intermediates) & members

    def test_single_element(self):
        assert covering_comparison(Coloring.of((1, 1, 1))) == []
