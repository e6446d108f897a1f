"""Partitions, bit strings, colorings and consistent involutions.

A pair of Schubert cells ``X_lam x X_mu`` in Gr(k, n) x Gr(m, n) is encoded
by the componentwise sum of the two bit strings, a coloring over
Black (0), Grey (1) and White (2). Its B-orbits are labelled by the
involutions whose arcs all run from a Black vertex to a later White one.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .involutions import (
    HalflinePolicy,
    Involution,
    MAX_N,
    CapacityError,
    arc_diagram,
    crossing_count,
    enumerate_involutions,
    melnikov_leq,
)

# Exhaustive sweeps cover 4**n colorings per n.
MAX_SWEEP_N = 8


class Color(enum.IntEnum):
    BLACK = 0
    GREY = 1
    WHITE = 2


@dataclass(frozen=True)
class Partition:
    """Young diagram inside a ``k x (n - k)`` box; parts are padded to length k."""

    parts: tuple[int, ...]
    k: int
    n: int

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        if len(parts) > self.k:
            parts_nonzero = tuple(p for p in parts if p)
            if len(parts_nonzero) > self.k:
                raise ValueError(f"{parts} has more than k={self.k} nonzero parts")
            parts = parts_nonzero
        parts = parts + (0,) * (self.k - len(parts))
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        if parts and (parts[-1] < 0 or parts[0] > self.n - self.k):
            raise ValueError(f"{parts} does not fit in a {self.k} x {self.n - self.k} box")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions_in_box(k: int, n: int) -> list[Partition]:
    out = []
    for parts in itertools.combinations_with_replacement(range(n - k, -1, -1), k):
        out.append(Partition(parts, k, n))
    return out


def bitstring_from_partition(p: Partition) -> tuple[int, ...]:
    """``s_i = 1`` iff ``i`` is one of ``lam_k + 1, lam_{k-1} + 2, ..., lam_1 + k``."""
    ones = {p.parts[p.k - t] + t for t in range(1, p.k + 1)}
    return tuple(1 if i in ones else 0 for i in range(1, p.n + 1))


def partition_from_bitstring(bits: Sequence[int], k: int | None = None,
                             n: int | None = None) -> Partition:
    bits = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"{bits} is not a bit string")
    ones = [i for i, b in enumerate(bits, start=1) if b]
    n = len(bits) if n is None else n
    k = len(ones) if k is None else k
    if len(bits) != n:
        raise ValueError(f"bit string has length {len(bits)}, expected {n}")
    if len(ones) != k:
        raise ValueError(f"bit string has {len(ones)} ones, expected k={k}")
    # the t-th one (from the left) sits at lam_{k+1-t} + t
    parts = [ones[k - 1 - idx] - (k - idx) for idx in range(k)]
    return Partition(tuple(parts), k, n)


@dataclass(frozen=True)
class Coloring:
    colors: tuple[Color, ...]

    def __post_init__(self) -> None:
        try:
            colors = tuple(Color(int(c)) for c in self.colors)
        except ValueError:
            raise ValueError(f"{self.colors} is not a sequence over 0, 1, 2") from None
        if not colors:
            raise ValueError("empty coloring")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def of(cls, values: Sequence[int]) -> "Coloring":
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)

    def __getitem__(self, i: int) -> Color:
        """1-based color lookup."""
        return self.colors[i - 1]

    def positions(self, color: Color) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.colors, start=1) if c == color)

    @property
    def blacks(self) -> tuple[int, ...]:
        return self.positions(Color.BLACK)

    @property
    def whites(self) -> tuple[int, ...]:
        return self.positions(Color.WHITE)

    @property
    def greys(self) -> tuple[int, ...]:
        return self.positions(Color.GREY)

    def black_white_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in self.blacks for j in self.whites if i < j)

    def values(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.colors)

    def __str__(self) -> str:
        return "".join("BGW"[c] for c in self.colors)


def coloring(lam: Partition, mu: Partition) -> Coloring:
    if lam.n != mu.n:
        raise ValueError(f"ambient sizes differ: {lam.n} vs {mu.n}")
    return Coloring(tuple(a + b for a, b in
                          zip(bitstring_from_partition(lam), bitstring_from_partition(mu))))


@dataclass(frozen=True, order=True)
class ConsistentInvolution:
    w: Involution
    coloring: Coloring

    def __post_init__(self) -> None:
        if self.w.n != self.coloring.n:
            raise ValueError("involution and coloring sizes differ")
        for i, j in self.w.arcs:
            if self.coloring[i] != Color.BLACK or self.coloring[j] != Color.WHITE:
                raise ValueError(f"arc ({i},{j}) of {self.w} does not run Black -> White "
                                 f"in coloring {self.coloring}")

    def __str__(self) -> str:
        return str(self.w)


def _as_coloring(lam_or_coloring, mu=None) -> Coloring:
    if isinstance(lam_or_coloring, Coloring):
        return lam_or_coloring
    return coloring(lam_or_coloring, mu)


def enumerate_consistent(lam, mu=None) -> list[ConsistentInvolution]:
    """All involutions consistent with ``(lam, mu)`` (or with a given Coloring).

    Ordered lexicographically by one-line notation, so Id comes first.
    """
    c = _as_coloring(lam, mu)
    return list(_consistent(c))


@lru_cache(maxsize=4096)
def _consistent(c: Coloring) -> tuple[ConsistentInvolution, ...]:
    whites = c.whites
    found = []

    def extend(blacks: list[int], free_whites: frozenset[int], arcs: list[tuple[int, int]]):
        if not blacks:
            found.append(Involution.from_arcs(c.n, arcs))
            return
        b, rest = blacks[0], blacks[1:]
        extend(rest, free_whites, arcs)
        for j in whites:
            if j > b and j in free_whites:
                arcs.append((b, j))
                extend(rest, free_whites - {j}, arcs)
                arcs.pop()

    extend(list(c.blacks), frozenset(whites), [])
    return tuple(ConsistentInvolution(w, c) for w in sorted(found))


def codimension_d(cw: ConsistentInvolution) -> int:
    """Crossings (half-lines on Black/White fixed points only) plus
    Black-before-White pairs of fixed points."""
    c = cw.coloring
    d = arc_diagram(cw.w, HalflinePolicy.COLORED_ONLY, c.values())
    fixed = set(d.fixed)
    at_infinity = sum(1 for i, j in c.black_white_pairs() if i in fixed and j in fixed)
    return crossing_count(d) + at_infinity


def restricted_rank_table(cw: ConsistentInvolution) -> dict[tuple[int, int], int]:
    """Arcs inside ``[i, j]`` for each Black ``i`` before White ``j``."""
    arcs = cw.w.arcs
    return {(i, j): sum(1 for a, b in arcs if i <= a and b <= j)
            for i, j in cw.coloring.black_white_pairs()}


def restricted_leq(cv: ConsistentInvolution, cw: ConsistentInvolution) -> bool:
    if cv.coloring != cw.coloring:
        raise ValueError(f"colorings differ: {cv.coloring} vs {cw.coloring}")
    rv, rw = restricted_rank_table(cv), restricted_rank_table(cw)
    return all(rv[key] <= rw[key] for key in rv)


def max_orbit_involution(c: Coloring) -> ConsistentInvolution:
    """Crossingless matching of Black (open) against White (close), Greys skipped."""
    stack: list[int] = []
    arcs = []
    for i, color in enumerate(c.colors, start=1):
        if color == Color.BLACK:
            stack.append(i)
        elif color == Color.WHITE and stack:
            arcs.append((stack.pop(), i))
    return ConsistentInvolution(Involution.from_arcs(c.n, arcs), c)


def min_orbit_involution(c: Coloring) -> ConsistentInvolution:
    return ConsistentInvolution(Involution.identity(c.n), c)


def all_colorings(n: int) -> Iterator[tuple[Partition, Partition, Coloring]]:
    """Every ``(lam, mu)`` for every ``k, m`` in ``0..n``, as bit-string pairs."""
    for bits_l in itertools.product((0, 1), repeat=n):
        lam = partition_from_bitstring(bits_l)
        for bits_m in itertools.product((0, 1), repeat=n):
            mu = partition_from_bitstring(bits_m)
            yield lam, mu, Coloring(tuple(a + b for a, b in zip(bits_l, bits_m)))


@dataclass
class RestrictionReport:
    n_max: int
    passed: bool = True
    cells: int = 0
    pairs: int = 0
    counterexample: tuple | None = None

    def summary(self) -> str:
        if self.passed:
            return (f"PASS: restricted order equals Melnikov order on every I_n(lam,mu), "
                    f"n <= {self.n_max} ({self.cells} cells, {self.pairs} ordered pairs)")
        lam, mu, v, w, restricted, melnikov = self.counterexample
        return (f"FAIL: lam={lam} mu={mu} v={v} w={w}: restricted_leq={restricted}, "
                f"melnikov_leq={melnikov}")


def verify_restriction_theorem(n_max: int) -> RestrictionReport:
    """Check ``restricted_leq <=> melnikov_leq`` on every I_n(lam, mu), n <= n_max."""
    if n_max > MAX_SWEEP_N:
        raise CapacityError(f"n_max={n_max} exceeds the sweep bound {MAX_SWEEP_N}")
    report = RestrictionReport(n_max)
    for n in range(1, n_max + 1):
        for lam, mu, c in all_colorings(n):
            report.cells += 1
            elements = enumerate_consistent(c)
            for cv in elements:
                for cw in elements:
                    report.pairs += 1
                    a, b = restricted_leq(cv, cw), melnikov_leq(cv.w, cw.w)
                    if a != b:
                        report.passed = False
                        report.counterexample = (lam, mu, cv.w, cw.w, a, b)
                        return report
    return report


@dataclass(frozen=True)
class BrokenCover:
    v: Involution
    w: Involution
    intermediates: tuple[Involution, ...]

    def __str__(self) -> str:
        mids = ", ".join(map(str, self.intermediates))
        return f"{self.v} < {self.w}: cover in I_n(lam,mu), intermediates in I_{self.v.n}: {mids}"


def covering_comparison(lam, mu=None) -> list[BrokenCover]:
    """Covers of the restricted poset that are not covers in (I_n, melnikov_leq)."""
    elements = enumerate_consistent(lam, mu)
    if len(elements) <= 1:
        return []
    n = elements[0].w.n
    everything = enumerate_involutions(n) if n <= MAX_N else []
    out = []
    for cv in elements:
        for cw in elements:
            if cv == cw or not restricted_leq(cv, cw):
                continue
            if any(cu != cv and cu != cw and restricted_leq(cv, cu) and restricted_leq(cu, cw)
                   for cu in elements):
                continue
            mids = tuple(u for u in everything if u != cv.w and u != cw.w
                         and melnikov_leq(cv.w, u) and melnikov_leq(u, cw.w))
            if mids:
                out.append(BrokenCover(cv.w, cw.w, mids))
    return out
