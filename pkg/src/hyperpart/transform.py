"""The max-path map from hypermatrices to partitions, corners, and its inverse."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Cell, Hypermatrix, Partition, box_cells, successors


@dataclass(frozen=True)
class CornerSet:
    dim: int
    cells: frozenset[Cell]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))


def downward_closure(support) -> set[Cell]:
    closure: set[Cell] = set()
    for pos in support:
        if pos not in closure:
            closure.update(box_cells(pos))
    return closure


def phi(A: Hypermatrix) -> Partition:
    """pi_i = a_i + max over axes of pi_{i + e_l}, zero outside the closure of supp A.

    Every position j + e_l is lex-greater than j, so reverse lex order over
    the downward closure is a valid evaluation order.
    """
    pi: dict[Cell, int] = {}
    for pos in sorted(downward_closure(A.support), reverse=True):
        pi[pos] = A[pos] + max(pi.get(nxt, 0) for nxt in successors(pos))
    return Partition(A.dim, pi)


def corners(pi: Partition) -> CornerSet:
    """Cells (i, h) of the diagram with (i + e_l, h) outside it for every l <= d.

    At a fixed position these are exactly the heights h with
    max_l pi_{i+e_l} < h <= pi_i.
    """
    cells = set()
    for pos, v in pi.entries.items():
        floor = max(pi[nxt] for nxt in successors(pos))
        cells.update(pos + (h,) for h in range(floor + 1, v + 1))
    return CornerSet(pi.dim, frozenset(cells))


def phi_inverse(pi: Partition) -> Hypermatrix:
    """Count corners over each vertical fibre."""
    counts: dict[Cell, int] = {}
    for c in corners(pi).cells:
        counts[c[:-1]] = counts.get(c[:-1], 0) + 1
    return Hypermatrix(pi.dim, counts)
