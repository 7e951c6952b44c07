"""Corner statistics: the c-vector and the corner-hook volume."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Partition
from .transform import corners


@dataclass(frozen=True)
class StatVector:
    dim: int
    values: tuple[int, ...]
    corner_count: int
    corner_hook: int

    def __post_init__(self):
        assert len(self.values) == self.dim
        assert self.corner_hook == sum(self.values) - (self.dim - 1) * self.corner_count


def c_statistic(pi: Partition, axis: int) -> int:
    """Sum of the ``axis``-th coordinate (1-based, axis <= d) over all corners."""
    if not 1 <= axis <= pi.dim:
        raise ValueError(f"axis must lie in [1, {pi.dim}], got {axis}")
    return sum(c[axis - 1] for c in corners(pi).cells)


def corner_hook_volume(pi: Partition) -> int:
    d = pi.dim
    return sum(sum(c[:d]) - d + 1 for c in corners(pi).cells)


def stat_vector(pi: Partition) -> StatVector:
    d = pi.dim
    cells = corners(pi).cells
    values = tuple(sum(c[axis] for c in cells) for axis in range(d))
    hook = sum(sum(c[:d]) - d + 1 for c in cells)
    return StatVector(d, values, len(cells), hook)
