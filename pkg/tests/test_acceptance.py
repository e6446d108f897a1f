"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import io
import itertools
import pathlib
import sys
import time
from contextlib import redirect_stdout

import numpy as np

from orbit_atlas.cli import main as cli_main
from orbit_atlas.grassmann import (
    ConsistentInvolution,
    Partition,
    all_colorings,
    codimension_d,
    coloring,
    enumerate_consistent,
    max_orbit_involution,
    min_orbit_involution,
    restricted_leq,
    verify_restriction_theorem,
)
from orbit_atlas.involutions import (
    Involution,
    enumerate_involutions,
    orbit_dimension,
    rank_table,
)
from orbit_atlas.linalg import (
    Subspace,
    arc_indicator_point,
    canonical_pair,
    conjugate,
    generic_point,
    identify_orbit,
    random_borel,
    random_point,
    schubert_profile,
    slice_embed,
    southwest_rank_table,
    strict_upper_from_involution,
    unit_vector,
)
from orbit_atlas.poset import (
    Poset,
    PosetMeta,
    dot_label,
    export_dot,
    export_json,
    levels,
    melnikov_poset,
    parse_json,
    restricted_poset,
    transitive_closure,
)

STATUS_LINES: list[str] = []
GOLDEN = pathlib.Path(__file__).parent / "golden"
LAM9 = Partition((5, 4, 2, 1), 4, 9)
MU9 = Partition((4, 4, 4, 1, 1), 5, 9)


def inv(n, *arcs):
    return Involution.from_arcs(n, arcs)


def report(number, title, limit, body):
    """Run ``body`` (which asserts), print one status line, re-raise failures."""
    start = time.perf_counter()
    error = None
    try:
        detail = body()
    except AssertionError as exc:
        detail, error = f"assertion failed: {exc}", exc
    elapsed = time.perf_counter() - start
    if error is None and limit is not None and elapsed > limit:
        error = AssertionError(f"took {elapsed:.2f}s, limit {limit}s")
        detail = str(error)
    status = "PASS" if error is None else "FAIL"
    line = f"criterion {number:2d} {status}  {title} ({elapsed:.2f}s): {detail}"
    STATUS_LINES.append(line)
    if __name__ == "__main__":
        print(line)
    if error is not None:
        raise error


def brute_count(n):
    return sum(1 for p in itertools.permutations(range(n))
               if all(p[p[i]] == i for i in range(n)))


def test_criterion_01_orbit_counts():
    def body():
        assert len(enumerate_involutions(4)) == 10
        counts = [len(enumerate_involutions(n)) for n in range(1, 8)]
        assert counts == [brute_count(n) for n in range(1, 8)]
        return f"|I_n| for n=1..7 = {counts}"
    report(1, "orbit counts", 1.0, body)


def test_criterion_02_dimension_levels():
    def body():
        lv = levels(melnikov_poset(4), orbit_dimension)
        assert {d: len(xs) for d, xs in lv.items()} == {4: 2, 3: 4, 2: 2, 1: 1, 0: 1}
        assert set(lv[4]) == {inv(4, (1, 2), (3, 4)), inv(4, (1, 4), (2, 3))}
        assert lv[0] == [Involution.identity(4)]
        for n in range(1, 9):
            dims = [orbit_dimension(w) for w in enumerate_involutions(n)]
            assert max(dims) == n * n // 4
            if n >= 3:
                assert dims.count(max(dims)) > 1
        return "levels 4:2 3:4 2:2 1:1 0:1; max dim = floor(n^2/4) for n <= 8"
    report(2, "dimension formula", 5.0, body)


def test_criterion_03_rank_oracle():
    def body():
        for w in enumerate_involutions(5):
            assert southwest_rank_table(strict_upper_from_involution(w)) == rank_table(w)
        conjugations = 0
        for idx, w in enumerate(enumerate_involutions(4)):
            x = strict_upper_from_involution(w)
            for t in range(100):
                y = conjugate(random_borel(4, (3, idx, t)), x)
                assert southwest_rank_table(y) == rank_table(w)
                conjugations += 1
        return f"26 tables at n=5 agree; {conjugations} random conjugations at n=4 invariant"
    report(3, "rank oracle", 30.0, body)


def test_criterion_04_consistent_counts():
    def body():
        square = Partition((2, 2), 2, 4)
        got = {cw.w for cw in enumerate_consistent(square, square)}
        assert got == {Involution.identity(4), inv(4, (1, 3)), inv(4, (1, 4)), inv(4, (2, 3)),
                       inv(4, (2, 4)), inv(4, (1, 3), (2, 4)), inv(4, (1, 4), (2, 3))}
        only_id = [Involution.identity(4)]
        a = enumerate_consistent(Partition((2, 1), 2, 4), Partition((1, 0), 2, 4))
        b = enumerate_consistent(Partition((1, 0), 2, 4), Partition((0, 0), 2, 4))
        assert [cw.w for cw in a] == only_id and [cw.w for cw in b] == only_id
        hook = Partition((2, 1), 2, 4)
        assert len(enumerate_consistent(hook, hook)) == 5
        return "7, {Id}, {Id}, 5"
    report(4, "consistent-involution counts", 1.0, body)


def test_criterion_05_codimension():
    def body():
        c = coloring(LAM9, MU9)
        assert codimension_d(ConsistentInvolution(inv(9, (1, 7), (5, 9)), c)) == 4
        cells = 0
        for n in range(1, 7):
            for _, _, c in all_colorings(n):
                cells += 1
                assert codimension_d(max_orbit_involution(c)) == 0
                bw = sum(1 for i in c.blacks for j in c.whites if i < j)
                assert codimension_d(min_orbit_involution(c)) == bw
        return f"d((17)(59)) = 4; extremes checked on {cells} (lambda, mu) cells"
    report(5, "codimension", None, body)


def test_criterion_06_main_theorem():
    def body():
        result = verify_restriction_theorem(6)
        assert result.passed, result.summary()
        out = io.StringIO()
        with redirect_stdout(out):
            code = cli_main(["verify", "--check", "main-theorem", "--max-n", "6"])
        assert code == 0
        return result.summary()
    report(6, "restricted order equals Melnikov order", 300.0, body)


def test_criterion_07_covering_failure():
    def body():
        hook = Partition((2, 1), 2, 4)
        c = coloring(hook, hook)
        small = restricted_poset(hook, hook)
        low, high = (ConsistentInvolution(inv(4, (1, 4)), c), ConsistentInvolution(inv(4, (1, 2)), c))
        assert small.is_cover(low, high)
        full = melnikov_poset(4)
        assert not full.is_cover(low.w, high.w)
        between = [z for z in full.elements
                   if z not in (low.w, high.w) and full.leq(low.w, z) and full.leq(z, high.w)]
        assert between == [inv(4, (1, 3))]
        out = io.StringIO()
        with redirect_stdout(out):
            code = cli_main(["verify", "--check", "covers", "--max-n", "4"])
        line = ("n=4 k=2 m=2 lam=(2,1) mu=(2,1) coloring=BWBW: (14) < (12): cover in "
                "I_n(lam,mu), intermediates in I_4: (13)")
        assert code == 0 and line in out.getvalue().splitlines()
        return line
    report(7, "covering failure", None, body)


def test_criterion_08_slice():
    def body():
        c = coloring(Partition((4, 4, 2), 3, 8), Partition((3, 3, 1, 1), 4, 8))
        assert len(c.black_white_pairs()) == 7
        trials = 0
        for n in range(1, 6):
            for cell, (_, _, c) in enumerate(all_colorings(n)):
                for cw in enumerate_consistent(c):
                    assert slice_embed(arc_indicator_point(cw)) == strict_upper_from_involution(cw.w)
                top = max_orbit_involution(c)
                assert identify_orbit(slice_embed(generic_point(c))) == top.w
                members = {cw.w for cw in enumerate_consistent(c)}
                rng = np.random.default_rng((8, n, cell))
                for _ in range(200):
                    w = identify_orbit(slice_embed(random_point(c, rng)))
                    assert w in members
                    assert restricted_leq(ConsistentInvolution(w, c), top)
                    trials += 1
        return f"7 parameters; {trials} random slice points all below the open orbit"
    report(8, "slice", None, body)


def test_criterion_09_canonical_representative():
    def body():
        cw = ConsistentInvolution(inv(9, (1, 7), (5, 9)), coloring(LAM9, MU9))
        u, w = canonical_pair(cw, LAM9, MU9)

        def e(*idx):
            v = unit_vector(9, idx[0])
            for i in idx[1:]:
                v[i - 1] += 1
            return v

        assert u.same_span(Subspace.span(9, [e(2), e(4), e(1, 7), e(5, 9)]))
        assert w.same_span(Subspace.span(9, [e(2), e(3), e(7), e(8), e(9)]))
        assert schubert_profile(u) == LAM9 and schubert_profile(w) == MU9
        return "U = <e2, e4, e1+e7, e5+e9>, W = <e2, e3, e7, e8, e9>, profiles recovered"
    report(9, "canonical representative", None, body)


def test_criterion_10_poset_machinery():
    def body():
        built = 0
        for n in range(1, 7):
            p = melnikov_poset(n)
            assert Poset(p.elements, transitive_closure(len(p), p.covers)) == p
            built += 1
        for n in range(1, 6):
            for lam, mu, c in all_colorings(n):
                p = restricted_poset(c)
                assert Poset(p.elements, transitive_closure(len(p), p.covers)) == p
                back, _ = parse_json(export_json(p, PosetMeta("grassmannian", n, lam, mu)))
                assert back == p
                built += 1
        hook = Partition((2, 1), 2, 4)
        square = Partition((2, 2), 2, 4)
        outputs = {
            "melnikov_4.dot": lambda: export_dot(melnikov_poset(4), dot_label, orbit_dimension,
                                                 name="melnikov"),
            "restricted_22_22.dot": lambda: export_dot(restricted_poset(square, square),
                                                       dot_label, codimension_d),
            "melnikov_3.json": lambda: export_json(melnikov_poset(3), PosetMeta("nilpotent", 3)),
            "restricted_21_21.json": lambda: export_json(restricted_poset(hook, hook),
                                                         PosetMeta("grassmannian", 4, hook, hook)),
        }
        for name, make in outputs.items():
            first, second = make(), make()
            assert first == second == (GOLDEN / name).read_text(), name
        return f"{built} posets validated and round-tripped; {len(outputs)} golden files stable"
    report(10, "poset machinery", None, body)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
