"""Involutions, arc diagrams and the adjoint (Melnikov) order on I_n.

All public indices are 1-based. An involution ``w`` is stored by its
one-line notation ``images`` with ``images[i - 1] == w(i)``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

# |I_12| = 140152; enumeration stays comfortably in memory up to here.
MAX_N = 12


class CapacityError(ValueError):
    """Requested size is above the enumeration bound."""


class ReconstructionError(ValueError):
    """A rank table does not come from any involution."""


@dataclass(frozen=True, order=True)
class Involution:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n < 1:
            raise ValueError("an involution needs n >= 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{n}")
        for i, j in enumerate(images, start=1):
            if images[j - 1] != i:
                raise ValueError(f"{images} is not self-inverse: w(w({i})) != {i}")

    @classmethod
    def identity(cls, n: int) -> "Involution":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Involution":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for i, j in arcs:
            if not (1 <= i < j <= n):
                raise ValueError(f"arc ({i},{j}) must satisfy 1 <= i < j <= {n}")
            if i in seen or j in seen:
                raise ValueError(f"arc ({i},{j}) shares an endpoint with another arc")
            seen.update((i, j))
            images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j in enumerate(self.images, start=1) if i < j)

    @property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.images, start=1) if i == j)

    def is_identity(self) -> bool:
        return not self.arcs

    def cycle_notation(self) -> str:
        """Product of transpositions, e.g. ``(17)(23)(58)``; ``Id`` for the identity."""
        if self.is_identity():
            return "Id"
        sep = "" if self.n <= 9 else ","
        return "".join(f"({i}{sep}{j})" for i, j in self.arcs)

    def __str__(self) -> str:
        return self.cycle_notation()


def enumerate_involutions(n: int) -> list[Involution]:
    """All involutions of {1..n}, lexicographic in one-line notation."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_N:
        raise CapacityError(f"n={n} exceeds the enumeration bound {MAX_N}")
    return list(_involutions(n))


@lru_cache(maxsize=None)
def _involutions(n: int) -> tuple[Involution, ...]:
    found: list[tuple[int, ...]] = []

    def extend(images: list[int], free: list[int]) -> None:
        if not free:
            found.append(tuple(images))
            return
        i, rest = free[0], free[1:]
        images[i - 1] = i
        extend(images, rest)
        for idx, j in enumerate(rest):
            images[i - 1], images[j - 1] = j, i
            extend(images, rest[:idx] + rest[idx + 1 :])
            images[j - 1] = j
        images[i - 1] = i

    extend(list(range(1, n + 1)), list(range(1, n + 1)))
    return tuple(Involution(images) for images in sorted(found))


class HalflinePolicy(enum.Enum):
    ALL_FIXED = "all-fixed"
    COLORED_ONLY = "colored-only"


@dataclass(frozen=True)
class ArcDiagram:
    n: int
    arcs: tuple[tuple[int, int], ...]
    fixed: tuple[int, ...]
    halflines: tuple[int, ...]
    policy: HalflinePolicy = HalflinePolicy.ALL_FIXED


def arc_diagram(w: Involution, policy: HalflinePolicy = HalflinePolicy.ALL_FIXED,
                coloring=None) -> ArcDiagram:
    """Arc diagram of ``w``.

    Under ``COLORED_ONLY`` the half-lines sit on fixed points whose color is
    Black or White; ``coloring`` (a sequence of 0/1/2 or a ``Coloring``) is
    then required.
    """
    fixed = w.fixed_points
    if policy is HalflinePolicy.ALL_FIXED:
        halflines = fixed
    else:
        if coloring is None:
            raise ValueError("COLORED_ONLY half-lines need a coloring")
        colors = tuple(int(c) for c in coloring)
        if len(colors) != w.n:
            raise ValueError("coloring length does not match n")
        halflines = tuple(i for i in fixed if colors[i - 1] != 1)
    return ArcDiagram(w.n, w.arcs, fixed, halflines, policy)


def crossing_count(d: ArcDiagram, halflines: Iterable[int] | None = None) -> int:
    """Arc/arc crossings plus arcs passing over a half-line.

    Two half-lines never cross each other here.
    """
    lines = d.halflines if halflines is None else tuple(halflines)
    if not set(lines) <= set(d.fixed):
        raise ValueError("half-lines must sit on fixed points")
    total = 0
    for (i, j), (k, l) in itertools.combinations(sorted(d.arcs), 2):
        if i < k < j < l:
            total += 1
    for i, j in d.arcs:
        total += sum(1 for k in lines if i < k < j)
    return total


def orbit_dimension(w: Involution) -> int:
    d = arc_diagram(w)
    arcs = len(d.arcs)
    return arcs * (arcs + len(d.halflines)) - crossing_count(d)


@dataclass(frozen=True)
class RankTable:
    """Upper-triangular table ``r[i, j]`` for ``1 <= i < j <= n``.

    Entries are stored in a full n x n tuple; reads with ``i >= j`` or out of
    range return 0.
    """

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if i >= j or i < 1 or j > self.n:
            return 0
        return self.entries[i - 1][j - 1]

    def pairs(self) -> Iterator[tuple[int, int]]:
        return itertools.combinations(range(1, self.n + 1), 2)

    def __le__(self, other: "RankTable") -> bool:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        return all(a <= b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.n, self.n)

    def delta(self, i: int, j: int) -> int:
        return self[i, j] - self[i + 1, j] - self[i, j - 1] + self[i + 1, j - 1]

    def violations(self) -> list[str]:
        """Human-readable list of broken invariants (empty when valid)."""
        out = []
        for i, j in self.pairs():
            r = self[i, j]
            if r < 0 or r > (j - i + 1) // 2:
                out.append(f"r[{i},{j}]={r} outside [0, {(j - i + 1) // 2}]")
            if r < self[i + 1, j] or r < self[i, j - 1]:
                out.append(f"r[{i},{j}]={r} is not monotone in the interval")
            if self.delta(i, j) not in (0, 1):
                out.append(f"inclusion-exclusion delta at ({i},{j}) is {self.delta(i, j)}")
        return out

    @classmethod
    def from_function(cls, n: int, f) -> "RankTable":
        return cls(n, tuple(tuple(f(i, j) if i < j else 0 for j in range(1, n + 1))
                            for i in range(1, n + 1)))


@lru_cache(maxsize=65536)
def rank_table(w: Involution) -> RankTable:
    """``r[i, j]`` = number of arcs of ``w`` lying inside ``[i, j]``."""
    arcs = w.arcs
    return RankTable.from_function(
        w.n, lambda i, j: sum(1 for a, b in arcs if i <= a and b <= j))


def involution_from_rank_table(r: RankTable) -> Involution:
    """Invert ``rank_table``: arc ``(i, j)`` is present iff the delta there is 1."""
    images = list(range(1, r.n + 1))
    used: set[int] = set()
    for i, j in r.pairs():
        delta = r.delta(i, j)
        if delta == 0:
            continue
        if delta != 1:
            raise ReconstructionError(f"delta {delta} at ({i},{j}) is not 0 or 1")
        if i in used or j in used:
            raise ReconstructionError(f"index of ({i},{j}) already lies on another arc")
        used.update((i, j))
        images[i - 1], images[j - 1] = j, i
    w = Involution(tuple(images))
    if rank_table(w) != r:
        raise ReconstructionError("table is not the rank table of any involution")
    return w


def melnikov_leq(v: Involution, w: Involution) -> bool:
    if v.n != w.n:
        raise ValueError(f"size mismatch: {v.n} vs {w.n}")
    return rank_table(v) <= rank_table(w)


def _northwest_counts(perm: Sequence[int]) -> np.ndarray:
    n = len(perm)
    m = np.zeros((n, n), dtype=np.int64)
    for i, j in enumerate(perm):
        m[i, j - 1] = 1
    return m.cumsum(axis=0).cumsum(axis=1)


def bruhat_leq(u: Sequence[int] | Involution, v: Sequence[int] | Involution) -> bool:
    """Bruhat order on S_n via northwest rank counts.

    ``u <= v`` iff ``#{a <= i : u(a) <= j} >= #{a <= i : v(a) <= j}`` for all i, j.
    """
    u = u.images if isinstance(u, Involution) else tuple(u)
    v = v.images if isinstance(v, Involution) else tuple(v)
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {len(u)} vs {len(v)}")
    return bool((_northwest_counts(u) >= _northwest_counts(v)).all())


@dataclass(frozen=True)
class OrderDisagreement:
    v: Involution
    w: Involution
    melnikov: bool
    bruhat: bool


def compare_orders(n: int) -> list[OrderDisagreement]:
    """Ordered pairs of I_n on which the Bruhat and Melnikov relations differ."""
    elements = enumerate_involutions(n)
    out = []
    for v in elements:
        for w in elements:
            m, b = melnikov_leq(v, w), bruhat_leq(v, w)
            if m != b:
                out.append(OrderDisagreement(v, w, m, b))
    return out


def parse_arcs(text: str, n: int) -> Involution:
    """Parse ``"1-7,5-9"`` into an involution of size ``n``; empty means Id."""
    text = text.strip()
    if not text or text.lower() == "id":
        return Involution.identity(n)
    arcs = []
    for chunk in text.split(","):
        try:
            a, b = chunk.split("-")
            i, j = int(a), int(b)
        except ValueError:
            raise ValueError(f"cannot parse arc {chunk!r}; expected i-j") from None
        arcs.append((i, j))
    return Involution.from_arcs(n, arcs)
