"""Finite posets: validated order tables, Hasse diagrams, DOT and JSON export."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

import numpy as np

from .grassmann import (
    ConsistentInvolution,
    Partition,
    codimension_d,
    coloring,
    enumerate_consistent,
    restricted_leq,
)
from .involutions import Involution, enumerate_involutions, orbit_dimension, rank_table


class PosetAxiomError(ValueError):
    """The relation handed to ``Poset`` is not a partial order."""


class Poset:
    """Elements plus a boolean ``leq`` table and its transitive reduction.

    ``leq[a, b]`` is True iff ``elements[a] <= elements[b]``. The table is
    validated on construction and frozen afterwards.
    """

    def __init__(self, elements: Sequence[Hashable], leq: np.ndarray):
        self.elements = tuple(elements)
        leq = np.array(leq, dtype=bool)
        size = len(self.elements)
        if leq.shape != (size, size):
            raise ValueError(f"order table has shape {leq.shape}, expected {(size, size)}")
        self._index = {x: a for a, x in enumerate(self.elements)}
        if len(self._index) != size:
            raise ValueError("poset elements must be distinct")
        _validate(self.elements, leq)
        leq.setflags(write=False)
        self.leq_table = leq
        self.covers = _transitive_reduction(leq)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        return self._index[x]

    def leq(self, x, y) -> bool:
        return bool(self.leq_table[self._index[x], self._index[y]])

    def is_cover(self, x, y) -> bool:
        return (self._index[x], self._index[y]) in set(self.covers)

    def cover_labels(self) -> list[tuple]:
        return [(self.elements[a], self.elements[b]) for a, b in self.covers]

    def maximal(self) -> list:
        strict = self.leq_table & ~np.eye(len(self), dtype=bool)
        return [x for a, x in enumerate(self.elements) if not strict[a].any()]

    def minimal(self) -> list:
        strict = self.leq_table & ~np.eye(len(self), dtype=bool)
        return [x for a, x in enumerate(self.elements) if not strict[:, a].any()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return (self.elements == other.elements
                and np.array_equal(self.leq_table, other.leq_table)
                and self.covers == other.covers)

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, {len(self.covers)} covers)"


def _validate(elements, leq: np.ndarray) -> None:
    if not leq.diagonal().all():
        a = int(np.flatnonzero(~leq.diagonal())[0])
        raise PosetAxiomError(f"not reflexive: {elements[a]} <= {elements[a]} fails")
    both = leq & leq.T & ~np.eye(len(elements), dtype=bool)
    if both.any():
        a, b = map(int, np.argwhere(both)[0])
        raise PosetAxiomError(f"not antisymmetric: {elements[a]} <= {elements[b]} "
                              f"and {elements[b]} <= {elements[a]}")
    through = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    broken = through & ~leq
    if broken.any():
        a, c = map(int, np.argwhere(broken)[0])
        b = int(np.flatnonzero(leq[a] & leq[:, c])[0])
        raise PosetAxiomError(f"not transitive: {elements[a]} <= {elements[b]} <= "
                              f"{elements[c]} but not {elements[a]} <= {elements[c]}")


def _transitive_reduction(leq: np.ndarray) -> list[tuple[int, int]]:
    strict = (leq & ~np.eye(len(leq), dtype=bool)).astype(np.int64)
    implied = (strict @ strict) > 0
    covers = (strict > 0) & ~implied
    return [(int(a), int(b)) for a, b in np.argwhere(covers)]


def transitive_closure(size: int, edges: Sequence[tuple[int, int]]) -> np.ndarray:
    """Reflexive-transitive closure of a digraph on ``range(size)``."""
    m = np.eye(size, dtype=bool)
    for a, b in edges:
        m[a, b] = True
    for k in range(size):
        m |= np.outer(m[:, k], m[k, :])
    return m


def build_poset(elements: Sequence[Hashable], comparator: Callable[[object, object], bool]) -> Poset:
    elements = tuple(elements)
    table = np.array([[bool(comparator(x, y)) for y in elements] for x in elements],
                     dtype=bool).reshape(len(elements), len(elements))
    return Poset(elements, table)


def hasse(poset: Poset) -> list[tuple]:
    return poset.cover_labels()


def melnikov_poset(n: int) -> Poset:
    """I_n ordered by entrywise comparison of rank tables (vectorised)."""
    elements = enumerate_involutions(n)
    tables = np.stack([rank_table(w).as_array().ravel() for w in elements])
    leq = (tables[:, None, :] <= tables[None, :, :]).all(axis=2)
    return Poset(elements, leq)


def restricted_poset(lam, mu=None) -> Poset:
    return build_poset(enumerate_consistent(lam, mu), restricted_leq)


def levels(poset: Poset, statistic: Callable) -> dict[int, list]:
    out: dict[int, list] = {}
    for x in poset.elements:
        out.setdefault(statistic(x), []).append(x)
    return dict(sorted(out.items()))


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(poset: Poset, labeler: Callable[[object], str] = str,
               level: Callable[[object], int] | None = None, name: str = "poset") -> str:
    """DOT digraph of the Hasse diagram, edges oriented small -> large.

    With ``level`` given, elements of equal level share a rank row.
    """
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for a, x in enumerate(poset.elements):
        lines.append(f"  n{a} [label={_dot_quote(labeler(x))}];")
    if level is not None:
        for value, members in levels(poset, level).items():
            ids = " ".join(f"n{poset.index(x)};" for x in members)
            lines.append(f"  {{ rank=same; {ids} }}  // level {value}")
    for a, b in poset.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_label(x) -> str:
    if isinstance(x, ConsistentInvolution):
        return f"{x.w} | d={codimension_d(x)}"
    if isinstance(x, Involution):
        return f"{x} | dim={orbit_dimension(x)}"
    return str(x)


@dataclass(frozen=True)
class PosetMeta:
    setting: str
    n: int
    lam: Partition | None = None
    mu: Partition | None = None
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.setting not in ("nilpotent", "grassmannian"):
            raise ValueError(f"unknown setting {self.setting!r}")
        if self.setting == "grassmannian" and (self.lam is None or self.mu is None):
            raise ValueError("grassmannian metadata needs lam and mu")


JSON_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["setting", "n", "elements", "covers"],
    "properties": {
        "setting": {"enum": ["nilpotent", "grassmannian"]},
        "n": {"type": "integer", "minimum": 1},
        "lambda": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "mu": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "elements": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "pairs"],
                "properties": {
                    "id": {"type": "integer", "minimum": 0},
                    "pairs": {"type": "array",
                              "items": {"type": "array", "items": {"type": "integer"},
                                        "minItems": 2, "maxItems": 2}},
                    "dim": {"type": "integer", "minimum": 0},
                    "codim": {"type": "integer", "minimum": 0},
                },
                "oneOf": [{"required": ["dim"]}, {"required": ["codim"]}],
            },
        },
        "covers": {"type": "array",
                   "items": {"type": "array", "items": {"type": "integer"},
                             "minItems": 2, "maxItems": 2}},
    },
    "if": {"properties": {"setting": {"const": "grassmannian"}}},
    "then": {"required": ["lambda", "mu"]},
}


def export_json(poset: Poset, meta: PosetMeta) -> str:
    """Involution poset as JSON; ``lambda``/``mu`` are padded to length k/m."""
    doc: dict = {"setting": meta.setting, "n": meta.n}
    if meta.setting == "grassmannian":
        doc["lambda"] = list(meta.lam.parts)
        doc["mu"] = list(meta.mu.parts)
    elements = []
    for a, x in enumerate(poset.elements):
        if meta.setting == "grassmannian":
            w = x.w
            entry = {"id": a, "pairs": [list(p) for p in w.arcs], "codim": codimension_d(x)}
        else:
            w = x
            entry = {"id": a, "pairs": [list(p) for p in w.arcs], "dim": orbit_dimension(w)}
        elements.append(entry)
    doc["elements"] = elements
    doc["covers"] = [[a, b] for a, b in poset.covers]
    return json.dumps(doc, indent=2) + "\n"


def parse_json(text: str) -> tuple[Poset, PosetMeta]:
    """Inverse of ``export_json``; the order is rebuilt from the covers."""
    doc = json.loads(text)
    n = doc["n"]
    if doc["setting"] == "grassmannian":
        lam = Partition(tuple(doc["lambda"]), len(doc["lambda"]), n)
        mu = Partition(tuple(doc["mu"]), len(doc["mu"]), n)
        c = coloring(lam, mu)
        meta = PosetMeta("grassmannian", n, lam, mu)
        make = lambda arcs: ConsistentInvolution(Involution.from_arcs(n, arcs), c)
    else:
        meta = PosetMeta("nilpotent", n)
        make = lambda arcs: Involution.from_arcs(n, arcs)
    ordered = sorted(doc["elements"], key=lambda e: e["id"])
    if [e["id"] for e in ordered] != list(range(len(ordered))):
        raise ValueError("element ids must be 0..N-1")
    elements = [make([tuple(p) for p in e["pairs"]]) for e in ordered]
    leq = transitive_closure(len(elements), [tuple(c) for c in doc["covers"]])
    poset = Poset(elements, leq)
    if sorted(map(tuple, doc["covers"])) != poset.covers:
        raise ValueError("cover list is not a transitive reduction")
    return poset, meta
