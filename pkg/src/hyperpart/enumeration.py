"""Exhaustive generation and exact counting of d-dimensional partitions.

Downsets are generated by a DFS that only ever adds an addable cell which is
lexicographically larger than the previously added one. Sorting any downset
lexicographically yields a build order whose prefixes are all downsets, so
each downset is produced exactly once.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb, prod
from typing import Callable, Iterator, Sequence

from .core import (
    Cell, Diagram, Hypermatrix, box_cells, predecessors, simplex_cells, successors,
)
from .statistics import stat_vector
from .transform import phi

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """Raised when a search visits more nodes than its budget allows."""

    def __init__(self, budget: int, what: str = "search"):
        super().__init__(f"{what} exceeded its budget of {budget} nodes")
        self.budget = budget


@dataclass(frozen=True)
class RegionConstraint:
    """Finite family of diagrams: ``volume`` (|D| <= n), ``simplex`` or ``box``."""

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("volume", "simplex", "box"):
            raise ValueError(f"unknown constraint kind {self.kind!r}")
        if any(p < 0 for p in self.params):
            raise ValueError("constraint parameters must be >= 0")

    def cell_allowed(self, cell: Cell) -> bool:
        if self.kind == "volume":
            # the smallest downset containing a cell is its box
            return prod(cell) <= self.params[0]
        if self.kind == "simplex":
            return sum(cell) <= self.params[0]
        return all(x <= b for x, b in zip(cell, self.params))

    @property
    def max_size(self) -> int | None:
        return self.params[0] if self.kind == "volume" else None


def VolumeBudget(n: int) -> RegionConstraint:
    return RegionConstraint("volume", (n,))


def Simplex(k: int) -> RegionConstraint:
    return RegionConstraint("simplex", (k,))


def Box(*bounds: int) -> RegionConstraint:
    return RegionConstraint("box", tuple(bounds))


@dataclass(frozen=True)
class CountTable:
    family: str
    d: int
    index: int | tuple[int, ...]
    value: int

    def __post_init__(self):
        assert self.value >= 0


class _Walker:
    """Stateful lex-increasing DFS over downsets; one instance per subtree."""

    def __init__(self, d: int, constraint: RegionConstraint, budget: int):
        self.length = d + 1
        self.constraint = constraint
        self.allowed = constraint.cell_allowed
        self.max_size = constraint.max_size
        self.budget = budget
        self.nodes = 0
        self.cells: set[Cell] = set()
        self.order: list[Cell] = []
        self.addable: set[Cell] = set()

    def reset(self, prefix: Sequence[Cell]) -> None:
        self.cells = set(prefix)
        self.order = list(prefix)
        origin = (1,) * self.length
        cand = {origin} | {s for c in self.cells for s in successors(c)}
        self.addable = {
            c for c in cand
            if c not in self.cells and self.allowed(c)
            and all(p in self.cells for p in predecessors(c))
        }

    def _push(self, c: Cell) -> list[Cell]:
        self.cells.add(c)
        self.order.append(c)
        self.addable.discard(c)
        new = [
            s for s in successors(c)
            if self.allowed(s) and all(p in self.cells for p in predecessors(s))
        ]
        self.addable.update(new)
        return new

    def _pop(self, c: Cell, new: list[Cell]) -> None:
        self.addable.difference_update(new)
        self.addable.add(c)
        self.order.pop()
        self.cells.discard(c)

    def children(self) -> list[Cell]:
        if self.max_size is not None and len(self.cells) >= self.max_size:
            return []
        last = self.order[-1] if self.order else ()
        return sorted(c for c in self.addable if c > last)

    def walk(self, visit: Callable[[set[Cell]], None], max_depth: int | None = None,
             at_limit: Callable[[list[Cell]], None] | None = None) -> None:
        """Visit the current node and its subtree.

        With ``max_depth``, nodes at that depth are handed to ``at_limit``
        instead of being visited; this is how subtrees are split off.
        """
        if max_depth is not None and len(self.order) == max_depth:
            at_limit(list(self.order))
            return
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget, "downset enumeration")
        visit(self.cells)
        for c in self.children():
            new = self._push(c)
            self.walk(visit, max_depth, at_limit)
            self._pop(c, new)


def enumerate_downsets(d: int, constraint: RegionConstraint,
                       budget: int = DEFAULT_BUDGET) -> Iterator[Diagram]:
    """Yield every diagram in the region exactly once, the empty one first."""
    walker = _Walker(d, constraint, budget)
    walker.reset(())
    stack = [(None, None, iter(walker.children()))]
    walker.nodes = 1
    yield Diagram(d, frozenset())
    while stack:
        c, new, it = stack[-1]
        nxt = next(it, None)
        if nxt is None:
            stack.pop()
            if c is not None:
                walker._pop(c, new)
            continue
        added = walker._push(nxt)
        walker.nodes += 1
        if walker.nodes > budget:
            raise BudgetExceeded(budget, "downset enumeration")
        yield Diagram(d, frozenset(walker.cells))
        stack.append((nxt, added, iter(walker.children())))


def _size_histogram_task(args) -> tuple[list[int], int]:
    d, constraint, budget, prefix = args
    walker = _Walker(d, constraint, budget)
    walker.reset(prefix)
    hist: dict[int, int] = {}

    def visit(cells):
        hist[len(cells)] = hist.get(len(cells), 0) + 1

    walker.walk(visit)
    top = max(hist) if hist else 0
    return [hist.get(i, 0) for i in range(top + 1)], walker.nodes


def size_histogram(d: int, constraint: RegionConstraint, budget: int = DEFAULT_BUDGET,
                   jobs: int = 1, split_depth: int = 3) -> list[int]:
    """Number of diagrams in the region by cardinality.

    With ``jobs > 1`` the subtrees rooted at depth ``split_depth`` are counted
    in worker processes; totals do not depend on the split.
    """
    if jobs <= 1:
        hist, _ = _size_histogram_task((d, constraint, budget, ()))
        return hist
    walker = _Walker(d, constraint, budget)
    walker.reset(())
    head: dict[int, int] = {}
    prefixes: list[list[Cell]] = []

    def visit(cells):
        head[len(cells)] = head.get(len(cells), 0) + 1

    walker.walk(visit, max_depth=split_depth, at_limit=prefixes.append)
    total_nodes = walker.nodes
    tasks = [(d, constraint, budget, tuple(p)) for p in prefixes]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_size_histogram_task, tasks))
    merged = dict(head)
    for hist, nodes in results:
        total_nodes += nodes
        for size, cnt in enumerate(hist):
            if cnt:
                merged[size] = merged.get(size, 0) + cnt
    if total_nodes > budget:
        raise BudgetExceeded(budget, "downset enumeration")
    top = max(merged) if merged else 0
    return [merged.get(i, 0) for i in range(top + 1)]


_p_hist_cache: dict[int, list[int]] = {}


def _p_histogram(d: int, n: int, budget: int, jobs: int) -> list[int]:
    hist = _p_hist_cache.get(d)
    if hist is None or len(hist) <= n:
        hist = size_histogram(d, VolumeBudget(n), budget, jobs)
        hist += [0] * (n + 1 - len(hist))
        _p_hist_cache[d] = hist
    return hist


def count_p(d: int, n: int, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> int:
    """Number of d-dimensional partitions of volume exactly n."""
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    return _p_histogram(d, n, budget, jobs)[n]


def count_p_tilde(d: int, n: int, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> int:
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    return sum(_p_histogram(d, n, budget, jobs)[: n + 1])


def count_a_dfs(d: int, k: int, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> int:
    """a_d(k) by enumerating every downset of the simplex."""
    return sum(size_histogram(d, Simplex(k), budget, jobs))


def _max_coordinate_sum(cells) -> int:
    return max((sum(c) for c in cells), default=0)


def count_a(d: int, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of d-dimensional partitions with diagram inside Delta_d(k).

    Slicing such a diagram along the first axis gives a weakly shrinking chain
    of (d-1)-dimensional diagrams, slice i lying in Delta_{d-1}(k - i). The
    slice families are enumerated by the DFS; chains are counted by a
    backward pass over consecutive slices.
    """
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    if k <= d:
        return 1
    members = [frozenset(D.cells) for D in enumerate_downsets(d - 1, Simplex(k - 1), budget)]
    heights = [_max_coordinate_sum(m) for m in members]
    levels = [
        [m for m, h in zip(members, heights) if h <= k - i]
        for i in range(1, k - d + 1)
    ]
    work = len(members)
    ways = {m: 1 for m in levels[-1]}
    for level in reversed(levels[:-1]):
        work += len(level) * len(ways)
        if work > budget:
            raise BudgetExceeded(budget, "simplex chain count")
        ways = {s: sum(w for t, w in ways.items() if t <= s) for s in level}
    return sum(ways.values())


def _b_support(d: int, k: int) -> tuple[list[Cell], list[tuple[int, ...] | None]]:
    """Positions of Delta_{d-1}(k-1) in lex order and, for each, the indices of
    its d successors when all of them lie in the support (else None)."""
    positions = simplex_cells(d, k - 1)
    index = {p: i for i, p in enumerate(positions)}
    succ = []
    for p in positions:
        nxt = [index.get(s) for s in successors(p)]
        succ.append(None if None in nxt else tuple(nxt))
    return positions, succ


def count_b(d: int, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """|B_d(k)|: {0,1,2}-arrays on Delta_{d-1}(k-1) where every 2 has all its
    successors inside the support and equal to 0.

    Exhaustive search over positions in lex order, memoized on the set of
    not-yet-assigned positions that an earlier 2 has forced to 0.
    """
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    positions, succ = _b_support(d, k)
    n = len(positions)
    memo: dict[tuple[int, frozenset[int]], int] = {}
    calls = 0

    def go(i: int, forced: frozenset[int]) -> int:
        nonlocal calls
        if i == n:
            return 1
        key = (i, forced)
        if key in memo:
            return memo[key]
        calls += 1
        if calls > budget:
            raise BudgetExceeded(budget, "B_d(k) search")
        if i in forced:
            r = go(i + 1, forced - {i})
        else:
            r = 2 * go(i + 1, forced)
            if succ[i] is not None:
                r += go(i + 1, forced | frozenset(succ[i]))
        memo[key] = r
        return r

    return go(0, frozenset())


def b_lower_bound(d: int, k: int) -> int:
    """(3 * 2^(3^d - 1))^C(floor((k-1)/3), d) from the 3x..x3 block construction."""
    e = comb((k - 1) // 3, d)
    return (3 * 2 ** (3**d - 1)) ** e if e else 1


def b_weak_lower_bound(d: int, k: int) -> int:
    return 2 ** comb(k - 1, d)


def a_upper_bound(d: int, k: int) -> int:
    return 2 ** (2 * comb(k - 1, d))


def a_slice_product_bound(d: int, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """prod_{j=d}^{k-1} a_{d-1}(j); requires d >= 2 and k >= d."""
    if d < 2 or k < d:
        raise ValueError("slice product bound needs d >= 2 and k >= d")
    return prod(count_a(d - 1, j, budget) for j in range(d, k))


def lempa_k(d: int, n: int) -> int:
    """floor(((d+1)! n)^(1/(d+1))) in exact integer arithmetic."""
    target = prod(range(1, d + 2)) * n
    k = int(round(target ** (1 / (d + 1))))
    while k ** (d + 1) > target:
        k -= 1
    while (k + 1) ** (d + 1) <= target:
        k += 1
    return k


def _multisets(parts: Sequence, fits: Callable, take: Callable, done: Callable,
               remaining, budget: int) -> Iterator[dict]:
    """Multisets of ``parts`` (used in nonincreasing list order) exhausting ``remaining``."""
    chosen: dict = {}
    nodes = 0

    def rec(start, rem):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(budget, "multiset enumeration")
        if done(rem):
            yield dict(chosen)
            return
        for j in range(start, len(parts)):
            v = parts[j]
            if fits(v, rem):
                chosen[v] = chosen.get(v, 0) + 1
                yield from rec(j, take(rem, v))
                chosen[v] -= 1
                if not chosen[v]:
                    del chosen[v]

    yield from rec(0, remaining)


def count_by_cvector(d: int, target: Sequence[int], budget: int = DEFAULT_BUDGET) -> int:
    """Number of partitions whose c-vector equals ``target``.

    Runs over vector partitions of the target, each read as a hypermatrix of
    multiplicities and pushed through phi; every image is checked.
    """
    target = tuple(target)
    if len(target) != d or any(t < 0 for t in target):
        raise ValueError("target must be d nonnegative ints")
    parts = sorted(box_cells(target), reverse=True)
    count = 0
    for mult in _multisets(
        parts,
        fits=lambda v, rem: all(x <= r for x, r in zip(v, rem)),
        take=lambda rem, v: tuple(r - x for r, x in zip(rem, v)),
        done=lambda rem: not any(rem),
        remaining=target,
        budget=budget,
    ):
        pi = phi(Hypermatrix(d, mult))
        got = stat_vector(pi).values
        assert got == target, f"phi image has c-vector {got}, expected {target}"
        count += 1
    return count


def count_by_corner_hook(d: int, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of partitions with corner-hook volume n, via hypermatrices of that weight.

    A position i carries weight i_1 + ... + i_d - d + 1 >= 1, so the family
    of hypermatrices with total weight n is finite.
    """
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    weight = {p: sum(p) - d + 1 for p in simplex_cells(d, n + d - 1)}
    parts = sorted(weight, key=lambda p: (weight[p], p), reverse=True)
    count = 0
    for mult in _multisets(
        parts,
        fits=lambda p, rem: weight[p] <= rem,
        take=lambda rem, p: rem - weight[p],
        done=lambda rem: rem == 0,
        remaining=n,
        budget=budget,
    ):
        pi = phi(Hypermatrix(d, mult))
        got = stat_vector(pi).corner_hook
        assert got == n, f"phi image has corner-hook volume {got}, expected {n}"
        count += 1
    return count
