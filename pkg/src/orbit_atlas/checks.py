"""Exhaustive and randomized verification suites behind ``orbit-atlas verify``.

Each check returns a ``CheckReport``; ``passed`` is False exactly when a
counterexample was found, and ``witness`` then describes it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grassmann import (
    ConsistentInvolution,
    all_colorings,
    codimension_d,
    covering_comparison,
    enumerate_consistent,
    max_orbit_involution,
    min_orbit_involution,
    restricted_leq,
    verify_restriction_theorem,
)
from .involutions import enumerate_involutions, orbit_dimension, rank_table
from .linalg import (
    arc_indicator_point,
    canonical_pair,
    conjugate,
    generic_point,
    identify_orbit,
    is_square_zero,
    random_borel,
    random_point,
    schubert_profile,
    slice_embed,
    slice_subspaces,
    southwest_rank_table,
    strict_upper_from_involution,
    zero_point,
)
from .poset import PosetAxiomError, melnikov_poset, restricted_poset

CHECKS = ("main-theorem", "rank-oracle", "slice", "covers", "order-axioms")


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    lines: list[str] = field(default_factory=list)
    witness: str | None = None

    def fail(self, witness: str) -> "CheckReport":
        self.passed = False
        self.witness = witness
        return self

    def text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        body = list(self.lines)
        if self.witness:
            body.append(f"counterexample: {self.witness}")
        return "\n".join(body + [f"{self.name}: {status}"]) + "\n"


def check_main_theorem(max_n: int) -> CheckReport:
    report = CheckReport("main-theorem")
    result = verify_restriction_theorem(max_n)
    report.lines.append(result.summary())
    if not result.passed:
        report.fail(result.summary())
    return report


def check_rank_oracle(max_n: int, trials: int, seed: int) -> CheckReport:
    """Southwest ranks of ``w_<`` and of random B-conjugates against arc counts."""
    report = CheckReport("rank-oracle")
    for n in range(1, max_n + 1):
        conjugations = 0
        for idx, w in enumerate(enumerate_involutions(n)):
            x = strict_upper_from_involution(w)
            if not is_square_zero(x):
                return report.fail(f"w_< of {w} does not square to zero")
            expected = rank_table(w)
            if southwest_rank_table(x) != expected:
                return report.fail(f"southwest ranks of w_< differ from arc counts for {w}")
            for t in range(trials):
                b = random_borel(n, (seed, n, idx, t))
                y = conjugate(b, x)
                conjugations += 1
                if southwest_rank_table(y) != expected:
                    return report.fail(f"conjugating w_< of {w} by {b!r} changed the ranks")
                if identify_orbit(y) != w:
                    return report.fail(f"conjugate of w_< for {w} identified as {identify_orbit(y)}")
        report.lines.append(f"n={n}: {len(enumerate_involutions(n))} orbits, "
                            f"{conjugations} random conjugations agree")
    return report


def check_slice(max_n: int, trials: int, seed: int) -> CheckReport:
    """Slice representatives, embedding and rank semicontinuity for every (lam, mu)."""
    report = CheckReport("slice")
    rng = np.random.default_rng(seed)
    for n in range(1, max_n + 1):
        cells = draws = non_generic = 0
        for lam, mu, c in all_colorings(n):
            cells += 1
            elements = enumerate_consistent(c)
            top = max_orbit_involution(c)
            tag = f"n={n} lam={lam} mu={mu}"
            n_params = len(c.black_white_pairs())
            if n_params != codimension_d(min_orbit_involution(c)):
                return report.fail(f"{tag}: {n_params} slice parameters but d(Id)="
                                   f"{codimension_d(min_orbit_involution(c))}")
            if identify_orbit(slice_embed(zero_point(c))) != min_orbit_involution(c).w:
                return report.fail(f"{tag}: the zero slice point is not in the Id orbit")
            for cw in elements:
                p = arc_indicator_point(cw)
                x = slice_embed(p)
                if x != strict_upper_from_involution(cw.w):
                    return report.fail(f"{tag}: embedding of the point of {cw.w} is not w_<")
                if identify_orbit(x) != cw.w:
                    return report.fail(f"{tag}: point of {cw.w} identified as {identify_orbit(x)}")
                u, w_space = slice_subspaces(p, lam, mu)
                cu, cw_space = canonical_pair(cw, lam, mu)
                if not (u.same_span(cu) and w_space.same_span(cw_space)):
                    return report.fail(f"{tag}: slice point of {cw.w} is not the canonical pair")
            if identify_orbit(slice_embed(generic_point(c))) != top.w:
                return report.fail(f"{tag}: generic slice point misses the open orbit {top.w}")
            for _ in range(trials):
                p = random_point(c, rng)
                draws += 1
                found = identify_orbit(slice_embed(p))
                try:
                    found_c = ConsistentInvolution(found, c)
                except ValueError:
                    return report.fail(f"{tag}: random point {p.as_dict()} lands in {found}, "
                                       f"not in I_n(lam,mu)")
                if not restricted_leq(found_c, top):
                    return report.fail(f"{tag}: {found} is not below the maximum {top.w}")
                if found != top.w:
                    non_generic += 1
                if n_params and _needs_profile(draws):
                    u, w_space = slice_subspaces(p, lam, mu)
                    if schubert_profile(u) != lam or schubert_profile(w_space) != mu:
                        return report.fail(f"{tag}: slice point {p.as_dict()} leaves the cell")
                    cu, cw_space = canonical_pair(found_c, lam, mu)
                    if (u.flag_profile(), w_space.flag_profile()) != (cu.flag_profile(),
                                                                     cw_space.flag_profile()):
                        return report.fail(f"{tag}: flag profiles differ from the canonical "
                                           f"pair of {found}")
        report.lines.append(f"n={n}: {cells} (lam,mu) cells, {draws} random slice points, "
                            f"{non_generic} landed below the open orbit")
    return report


def _needs_profile(draw: int) -> bool:
    # flag profiles are the slow part; every 7th draw keeps coverage across cells
    return draw % 7 == 1


def check_covers(max_n: int) -> CheckReport:
    """List restricted covers that are not covers in I_n (not a failure by itself)."""
    report = CheckReport("covers")
    cache: dict = {}
    for n in range(1, max_n + 1):
        broken_cells = 0
        for lam, mu, c in all_colorings(n):
            if c not in cache:
                cache[c] = covering_comparison(c)
            broken = cache[c]
            if not broken:
                continue
            broken_cells += 1
            members = {cw.w for cw in enumerate_consistent(c)}
            for bc in broken:
                report.lines.append(f"n={n} k={lam.k} m={mu.k} lam={lam} mu={mu} "
                                    f"coloring={c}: {bc}")
                inside = [u for u in bc.intermediates if u in members]
                if inside:
                    return report.fail(f"{bc.v} < {bc.w} was reported as a cover but "
                                       f"{inside[0]} lies in between inside I_n(lam,mu)")
        report.lines.append(f"n={n}: {broken_cells} (lam,mu) cells with broken covers")
    return report


def check_order_axioms(max_n: int) -> CheckReport:
    """Partial-order axioms plus monotonicity of dimension/codimension."""
    report = CheckReport("order-axioms")
    for n in range(1, max_n + 1):
        try:
            poset = melnikov_poset(n)
        except PosetAxiomError as exc:
            return report.fail(f"I_{n}: {exc}")
        dims = [orbit_dimension(w) for w in poset.elements]
        strict = np.argwhere(poset.leq_table & ~np.eye(len(poset), dtype=bool))
        for a, b in strict:
            if dims[a] >= dims[b]:
                return report.fail(f"{poset.elements[a]} < {poset.elements[b]} but "
                                   f"dimensions are {dims[a]} >= {dims[b]}")
        gaps: dict[int, int] = {}
        for a, b in poset.covers:
            gaps[dims[b] - dims[a]] = gaps.get(dims[b] - dims[a], 0) + 1
        report.lines.append(f"I_{n}: {len(poset)} elements, {len(poset.covers)} covers, "
                            f"cover dimension gaps {dict(sorted(gaps.items()))}")
        seen = set()
        for lam, mu, c in all_colorings(n):
            if c in seen:
                continue
            seen.add(c)
            try:
                rp = restricted_poset(c)
            except PosetAxiomError as exc:
                return report.fail(f"I_{n}({c}): {exc}")
            top, bottom = max_orbit_involution(c), min_orbit_involution(c)
            if rp.maximal() != [top] or rp.minimal() != [bottom]:
                return report.fail(f"I_{n}({c}): extremes are {rp.maximal()} / {rp.minimal()}")
            codims = [codimension_d(x) for x in rp.elements]
            if codimension_d(top) != 0 or any(d <= 0 for x, d in zip(rp.elements, codims)
                                              if x != top):
                return report.fail(f"I_{n}({c}): the open orbit is not the unique d=0 element")
            for a, b in np.argwhere(rp.leq_table & ~np.eye(len(rp), dtype=bool)):
                if codims[a] <= codims[b]:
                    return report.fail(f"I_{n}({c}): {rp.elements[a]} < {rp.elements[b]} "
                                       f"but codimensions {codims[a]} <= {codims[b]}")
        report.lines.append(f"n={n}: {len(seen)} colorings checked")
    return report


@dataclass(frozen=True)
class CheckConfig:
    """Parameters of one ``verify`` run; ``trials`` only affects randomized checks."""

    check: str
    max_n: int
    trials: int = 20
    seed: int = 0

    def __post_init__(self) -> None:
        if self.check not in CHECKS:
            raise ValueError(f"unknown check {self.check!r}; choose from {', '.join(CHECKS)}")
        if self.max_n < 1:
            raise ValueError("max_n must be positive")
        if self.trials < 0:
            raise ValueError("trials must be non-negative")

    def run(self) -> CheckReport:
        return run_check(self.check, self.max_n, self.trials, self.seed)


def run_check(name: str, max_n: int, trials: int = 20, seed: int = 0) -> CheckReport:
    if name == "main-theorem":
        return check_main_theorem(max_n)
    if name == "rank-oracle":
        return check_rank_oracle(max_n, trials, seed)
    if name == "slice":
        return check_slice(max_n, trials, seed)
    if name == "covers":
        return check_covers(max_n)
    if name == "order-axioms":
        return check_order_axioms(max_n)
    raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
