"""Cells, diagrams, hypermatrices and d-dimensional partitions.

Cells are plain tuples of positive ints, 1-based. A partition of dimension
``d`` is indexed by ``d``-tuples; its diagram lives in ``d + 1`` coordinates.
Sparse containers never store zeros.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Mapping

Cell = tuple[int, ...]


class MalformedInputError(ValueError):
    """Cells of inconsistent length or with non-positive coordinates."""


def _check_cells(cells: Iterable[Cell], length: int) -> None:
    for c in cells:
        if len(c) != length:
            raise MalformedInputError(f"cell {c!r} has length {len(c)}, expected {length}")
        if any(x < 1 for x in c):
            raise MalformedInputError(f"cell {c!r} has a coordinate < 1")


def predecessors(cell: Cell) -> Iterator[Cell]:
    """Cells ``cell - e_l`` that stay in the positive orthant."""
    for axis, x in enumerate(cell):
        if x >= 2:
            yield cell[:axis] + (x - 1,) + cell[axis + 1:]


def successors(cell: Cell) -> Iterator[Cell]:
    for axis, x in enumerate(cell):
        yield cell[:axis] + (x + 1,) + cell[axis + 1:]


def validate_downset(cells: Iterable[Cell], d: int) -> bool:
    """True iff ``cells`` (each of length d+1) is closed under c -> c - e_l."""
    cells = set(cells)
    _check_cells(cells, d + 1)
    return all(p in cells for c in cells for p in predecessors(c))


@dataclass(frozen=True)
class Diagram:
    dim: int
    cells: frozenset[Cell] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(self.cells))
        if not validate_downset(self.cells, self.dim):
            raise ValueError("cell set is not a downset")

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells))

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in sorted(self.cells)]

    @classmethod
    def from_json(cls, dim: int, data) -> "Diagram":
        return cls(dim, frozenset(tuple(c) for c in data))


@dataclass(frozen=True)
class _SparseArray:
    """Finitely supported map from d-tuples to positive ints, zeros dropped."""

    dim: int
    entries: Mapping[Cell, int] = field(default_factory=dict)

    def __post_init__(self):
        items = {tuple(k): int(v) for k, v in dict(self.entries).items() if v != 0}
        _check_cells(items, self.dim)
        if any(v < 0 for v in items.values()):
            raise ValueError("entries must be nonnegative")
        object.__setattr__(self, "entries", dict(sorted(items.items())))

    def __getitem__(self, pos: Cell) -> int:
        return self.entries.get(pos, 0)

    def __eq__(self, other) -> bool:
        return (
            type(self) is type(other)
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.dim, tuple(self.entries.items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.dim}, {self.entries})"

    @property
    def support(self) -> list[Cell]:
        return list(self.entries)

    def total(self) -> int:
        return sum(self.entries.values())

    def to_json(self) -> list[list[int]]:
        return [list(k) + [v] for k, v in self.entries.items()]

    @classmethod
    def from_json(cls, dim: int, data):
        return cls(dim, {tuple(row[:-1]): row[-1] for row in data})


class Hypermatrix(_SparseArray):
    """A finitely supported N-valued array on the positive d-lattice."""


class Partition(_SparseArray):
    """A d-dimensional partition: entries weakly decrease along every axis."""

    def __post_init__(self):
        super().__post_init__()
        for pos, v in self.entries.items():
            for q in predecessors(pos):
                if self[q] < v:
                    raise ValueError(f"not monotone at {q} -> {pos}")

    @classmethod
    def from_sequence(cls, parts: Iterable[int]) -> "Partition":
        """1-dimensional partition from its parts, e.g. ``(3, 2)``."""
        return cls(1, {(i,): p for i, p in enumerate(parts, start=1)})

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Partition":
        """Plane partition from a list of rows."""
        return cls(2, {
            (i, j): v
            for i, row in enumerate(rows, start=1)
            for j, v in enumerate(row, start=1)
        })


def volume(partition: Partition) -> int:
    return partition.total()


def partition_from_diagram(diagram: Diagram) -> Partition:
    heights: dict[Cell, int] = {}
    for c in diagram.cells:
        pos, h = c[:-1], c[-1]
        if h > heights.get(pos, 0):
            heights[pos] = h
    return Partition(diagram.dim, heights)


def diagram_from_partition(partition: Partition) -> Diagram:
    cells = frozenset(
        pos + (h,)
        for pos, v in partition.entries.items()
        for h in range(1, v + 1)
    )
    return Diagram(partition.dim, cells)


def simplex_cells(length: int, k: int) -> list[Cell]:
    """Positive integer points of ``length`` coordinates with sum <= k, lex order."""
    if length == 0:
        return [()]
    out = []

    def rec(prefix: Cell, room: int):
        left = length - len(prefix)
        if left == 0:
            out.append(prefix)
            return
        # leave at least 1 for each remaining coordinate
        for x in range(1, room - (left - 1) + 1):
            rec(prefix + (x,), room - x)

    rec((), k)
    return out


def simplex_diagram(d: int, k: int) -> Diagram:
    """The simplex Delta_d(k); has comb(k, d + 1) cells."""
    cells = frozenset(simplex_cells(d + 1, k))
    assert len(cells) == comb(max(k, 0), d + 1)
    return Diagram(d, cells)


def box_cells(bounds: tuple[int, ...]) -> Iterator[Cell]:
    return itertools.product(*(range(1, b + 1) for b in bounds))


def dumps(obj) -> str:
    """Deterministic JSON for diagrams and sparse arrays."""
    if isinstance(obj, Diagram):
        payload = {"type": "diagram", "dim": obj.dim, "cells": obj.to_json()}
    elif isinstance(obj, Partition):
        payload = {"type": "partition", "dim": obj.dim, "entries": obj.to_json()}
    elif isinstance(obj, Hypermatrix):
        payload = {"type": "hypermatrix", "dim": obj.dim, "entries": obj.to_json()}
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(payload, sort_keys=True)


def loads(text: str):
    payload = json.loads(text)
    kind = payload["type"]
    if kind == "diagram":
        return Diagram.from_json(payload["dim"], payload["cells"])
    cls = {"partition": Partition, "hypermatrix": Hypermatrix}[kind]
    return cls.from_json(payload["dim"], payload["entries"])
