"""Exact rational matrices for both geometric settings.

Everything here is exact: entries are ``fractions.Fraction`` and ranks come
from fraction-free (integer) elimination. There are no tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .grassmann import (
    Color,
    Coloring,
    ConsistentInvolution,
    Partition,
    bitstring_from_partition,
    coloring as coloring_of,
    partition_from_bitstring,
)
from .involutions import (
    Involution,
    RankTable,
    ReconstructionError,
    involution_from_rank_table,
)


class InternalConsistencyError(RuntimeError):
    """An invariant that should hold for every valid input failed."""


class RationalMatrix:
    """Dense matrix of Fractions. Immutable; ``entry(i, j)`` is 1-based."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(x if type(x) is Fraction else Fraction(x) for x in row)
                     for row in rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        width = widths.pop() if widths else (ncols or 0)
        if ncols is not None and width != ncols:
            raise ValueError(f"expected {ncols} columns, got {width}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "RationalMatrix":
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Sequence]) -> "RationalMatrix":
        return cls([[col[i] for col in columns] for i in range(nrows)], ncols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i - 1][j - 1]

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [tuple(row[j] for row in self.rows) for j in range(self.ncols)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_columns(self.ncols, self.rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = [[Fraction(0)] * other.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            acc = out[i]
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(other.rows[k]):
                        if b:
                            acc[j] += a * b
        return RationalMatrix(out, ncols=other.ncols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        return f"RationalMatrix({[[str(x) for x in row] for row in self.rows]})"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_upper_triangular(self, strict: bool = False) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.nrows)
                   for j in range(self.ncols) if j < i or (strict and j == i))

    def submatrix(self, rows: range, cols: range) -> "RationalMatrix":
        """Rows and columns given as 1-based inclusive ranges."""
        return RationalMatrix([[self.rows[i - 1][j - 1] for j in cols] for i in rows],
                              ncols=len(cols))

    def rank(self) -> int:
        echelon = _Echelon()
        return sum(echelon.add(col) for col in _integer_columns(self))

    def to_text(self) -> str:
        return "\n".join(" ".join(f"{x.numerator}/{x.denominator}" for x in row)
                         for row in self.rows) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RationalMatrix":
        rows = []
        for line in text.splitlines():
            if line.strip():
                rows.append([Fraction(tok) for tok in line.split()])
        return cls(rows)


def _integer_columns(m: RationalMatrix) -> list[list[int]]:
    # column scaling leaves the rank of every row/column-prefix block unchanged
    out = []
    for col in m.columns():
        scale = math.lcm(*(x.denominator for x in col))
        if scale == 1:
            out.append([x.numerator for x in col])
        else:
            out.append([x.numerator * (scale // x.denominator) for x in col])
    return out


class _Echelon:
    """Incremental integer column echelon form (fraction-free elimination)."""

    def __init__(self) -> None:
        self.basis: list[tuple[int, list[int]]] = []

    def add(self, vector: Sequence[int]) -> bool:
        v = list(vector)
        for pivot, b in self.basis:
            if v[pivot]:
                bp, vp = b[pivot], v[pivot]
                v = [bp * x - vp * y for x, y in zip(v, b)]
        nonzero = [i for i, x in enumerate(v) if x]
        if not nonzero:
            return False
        g = math.gcd(*v)
        self.basis.append((nonzero[0], [x // g for x in v]))
        return True


def rank(m: RationalMatrix) -> int:
    return m.rank()


def upper_triangular_inverse(b: RationalMatrix) -> RationalMatrix:
    if not b.is_square() or not b.is_upper_triangular():
        raise ValueError("expected a square upper-triangular matrix")
    n = b.nrows
    if any(b.rows[i][i] == 0 for i in range(n)):
        raise ValueError("upper-triangular matrix with a zero diagonal entry is singular")
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for i in range(j, -1, -1):
            rhs = Fraction(int(i == j))
            rhs -= sum((b.rows[i][t] * inv[t][j] for t in range(i + 1, j + 1)), Fraction(0))
            inv[i][j] = rhs / b.rows[i][i]
    return RationalMatrix(inv)


def conjugate(b: RationalMatrix, x: RationalMatrix) -> RationalMatrix:
    """``b x b^-1`` for invertible upper-triangular ``b``."""
    if b.shape != x.shape:
        raise ValueError(f"shape mismatch {b.shape} vs {x.shape}")
    return b @ x @ upper_triangular_inverse(b)


def strict_upper_from_involution(w: Involution) -> RationalMatrix:
    n = w.n
    rows = [[0] * n for _ in range(n)]
    for i, j in w.arcs:
        rows[i - 1][j - 1] = 1
    return RationalMatrix(rows)


def is_square_zero(x: RationalMatrix) -> bool:
    if not x.is_square():
        raise ValueError(f"not square: {x.shape}")
    return (x @ x).is_zero()


def southwest_rank_table(x: RationalMatrix) -> RankTable:
    """``r[i, j]`` = rank of rows ``i..n``, columns ``1..j`` of ``x``."""
    if not x.is_square():
        raise ValueError(f"not square: {x.shape}")
    n = x.nrows
    cols = _integer_columns(x)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        echelon = _Echelon()
        r = 0
        for j in range(n):
            r += echelon.add(cols[j][i:])
            if i < j:
                table[i][j] = r
    return RankTable(n, tuple(map(tuple, table)))


def identify_orbit(x: RationalMatrix) -> Involution:
    """The involution ``w`` with ``x`` in ``B . w_<``, read off from ranks."""
    if not x.is_square() or not x.is_upper_triangular(strict=True):
        raise ValueError("expected a strictly upper-triangular square matrix")
    if not is_square_zero(x):
        raise ValueError("matrix does not square to zero")
    table = southwest_rank_table(x)
    try:
        return involution_from_rank_table(table)
    except ReconstructionError as exc:
        raise InternalConsistencyError(f"southwest ranks of a square-zero matrix "
                                       f"do not match any involution: {exc}") from exc


def random_borel(n: int, seed) -> RationalMatrix:
    """Invertible upper-triangular integer matrix, entries in [-3, 3]."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    nonzero = np.array([-3, -2, -1, 1, 2, 3])
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = int(rng.choice(nonzero))
        for j in range(i + 1, n):
            rows[i][j] = int(rng.integers(-3, 4))
    return RationalMatrix(rows)


def unit_vector(n: int, i: int) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i - 1] = Fraction(1)
    return v


@dataclass(frozen=True)
class Subspace:
    """Column span of ``basis`` inside Q^n."""

    basis: RationalMatrix

    def __post_init__(self) -> None:
        if self.basis.rank() != self.basis.ncols:
            raise ValueError("basis columns are linearly dependent")

    @classmethod
    def span(cls, n: int, vectors: Sequence[Sequence]) -> "Subspace":
        return cls(RationalMatrix.from_columns(n, vectors))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls.span(n, [unit_vector(n, i) for i in sorted(indices)])

    @property
    def ambient(self) -> int:
        return self.basis.nrows

    @property
    def dim(self) -> int:
        return self.basis.ncols

    def contains(self, other: "Subspace") -> bool:
        joined = RationalMatrix.from_columns(self.ambient,
                                             self.basis.columns() + other.basis.columns())
        return joined.rank() == self.dim

    def same_span(self, other: "Subspace") -> bool:
        return (self.ambient == other.ambient and self.dim == other.dim
                and self.contains(other))

    def flag_profile(self) -> tuple[int, ...]:
        """``dim(V cap <e_1..e_j>)`` for ``j = 0..n``."""
        n = self.ambient
        return tuple(self.dim - self.basis.submatrix(range(j + 1, n + 1), range(1, self.dim + 1)).rank()
                     for j in range(n + 1))


def schubert_cell_subspace(p: Partition) -> Subspace:
    """The coordinate subspace ``U_lam``."""
    bits = bitstring_from_partition(p)
    return Subspace.coordinate(p.n, [i for i, b in enumerate(bits, start=1) if b])


def schubert_profile(v: Subspace) -> Partition:
    """The partition ``lam`` with ``v`` in the Schubert cell ``B . U_lam``."""
    prof = v.flag_profile()
    bits = [prof[j] - prof[j - 1] for j in range(1, v.ambient + 1)]
    return partition_from_bitstring(bits, v.dim, v.ambient)


def _check_coloring(c: Coloring, lam: Partition, mu: Partition) -> None:
    if coloring_of(lam, mu) != c:
        raise ValueError(f"coloring {c} does not come from lam={lam}, mu={mu}")


def canonical_pair(cw: ConsistentInvolution, lam: Partition,
                   mu: Partition) -> tuple[Subspace, Subspace]:
    """The T-stable-style representative ``(U, W)`` of the orbit labelled by ``cw``."""
    _check_coloring(cw.coloring, lam, mu)
    n, w = lam.n, cw.w
    vectors = []
    for j, bit in enumerate(bitstring_from_partition(lam), start=1):
        if not bit:
            continue
        v = unit_vector(n, j)
        if w(j) != j:
            v[w(j) - 1] += 1
        vectors.append(v)
    return Subspace.span(n, vectors), schubert_cell_subspace(mu)


@dataclass(frozen=True)
class SlicePoint:
    coloring: Coloring
    params: tuple[tuple[tuple[int, int], Fraction], ...]

    def __post_init__(self) -> None:
        params = tuple(sorted(((tuple(k), Fraction(v)) for k, v in dict(self.params).items())))
        keys = tuple(k for k, _ in params)
        if keys != self.coloring.black_white_pairs():
            raise ValueError(f"slice parameters must be indexed by the Black-White pairs "
                             f"{self.coloring.black_white_pairs()}, got {keys}")
        object.__setattr__(self, "params", params)

    @classmethod
    def from_mapping(cls, c: Coloring, values: dict) -> "SlicePoint":
        return cls(c, tuple(values.items()))

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.params)


def zero_point(c: Coloring) -> SlicePoint:
    return SlicePoint.from_mapping(c, {key: 0 for key in c.black_white_pairs()})


def arc_indicator_point(cw: ConsistentInvolution) -> SlicePoint:
    arcs = set(cw.w.arcs)
    c = cw.coloring
    return SlicePoint.from_mapping(c, {key: int(key in arcs) for key in c.black_white_pairs()})


def _primes(count: int) -> list[int]:
    out, candidate = [], 2
    while len(out) < count:
        if all(candidate % p for p in out):
            out.append(candidate)
        candidate += 1
    return out


def generic_point(c: Coloring) -> SlicePoint:
    """Distinct primes 2, 3, 5, ... on the parameter slots in lexicographic order."""
    keys = c.black_white_pairs()
    return SlicePoint.from_mapping(c, dict(zip(keys, _primes(len(keys)))))


def random_point(c: Coloring, rng: np.random.Generator) -> SlicePoint:
    """Small random rationals; zeros are drawn on purpose to reach smaller orbits."""
    values = {}
    for key in c.black_white_pairs():
        num = int(rng.integers(-4, 5))
        den = int(rng.integers(1, 4))
        values[key] = Fraction(num, den)
    return SlicePoint.from_mapping(c, values)


def slice_subspaces(p: SlicePoint, lam: Partition, mu: Partition) -> tuple[Subspace, Subspace]:
    _check_coloring(p.coloring, lam, mu)
    n, c, t = lam.n, p.coloring, p.as_dict()
    bits = bitstring_from_partition(lam)
    vectors = []
    for pos in range(1, n + 1):
        if c[pos] == Color.GREY and bits[pos - 1]:
            vectors.append(unit_vector(n, pos))
        elif c[pos] == Color.WHITE:
            v = unit_vector(n, pos)
            for i in c.blacks:
                if i < pos:
                    v[i - 1] = t[(i, pos)]
            vectors.append(v)
    return Subspace.span(n, vectors), schubert_cell_subspace(mu)


def slice_embed(p: SlicePoint) -> RationalMatrix:
    n = p.coloring.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), value in p.params:
        rows[i - 1][j - 1] = value
    return RationalMatrix(rows)


def parameter_name(i: int, j: int, n: int) -> str:
    return f"t{i}{j}" if n <= 9 else f"t{i}_{j}"


def symbolic_slice_matrix(c: Coloring) -> list[list[str]]:
    """Image of the slice with parameter names in place of values."""
    n = c.n
    cells = [["0"] * n for _ in range(n)]
    for i, j in c.black_white_pairs():
        cells[i - 1][j - 1] = parameter_name(i, j, n)
    return cells
