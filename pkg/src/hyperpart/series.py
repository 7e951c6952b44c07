"""Exact truncated power series: Euler products, MacMahon numbers, vector partitions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, prod
from typing import Callable, Iterable, Sequence


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of x^0..x^order; nothing is known beyond x^order."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order) + 1
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: order + 1 - i]):
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])


def euler_product(exponent: Callable[[int], int], order: int) -> TruncatedSeries:
    """prod_{n=1..order} (1 - x^n)^(-exponent(n)) mod x^(order+1).

    Each factor is expanded as sum_k C(e+k-1, k) x^(nk); the binomials are
    built incrementally.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [1] + [0] * order
    for n in range(1, order + 1):
        e = exponent(n)
        if e < 0:
            raise ValueError(f"exponent({n}) = {e} is negative")
        if e == 0:
            continue
        factor = [0] * (order // n + 1)
        c = 1
        for k in range(len(factor)):
            factor[k] = c
            c = c * (e + k) // (k + 1)
        new = [0] * (order + 1)
        for i, a in enumerate(coeffs):
            if a:
                for k in range((order - i) // n + 1):
                    new[i + n * k] += a * factor[k]
        coeffs = new
    return TruncatedSeries(tuple(coeffs))


def macmahon_numbers(d: int, order: int) -> TruncatedSeries:
    if d < 1:
        raise ValueError("d must be >= 1")
    return euler_product(lambda n: comb(n + d - 2, d - 1), order)


def partition_numbers_oracle(order: int) -> TruncatedSeries:
    """p(0..order) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * order
    for n in range(1, order + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = g1 + k
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return TruncatedSeries(tuple(p))


@dataclass(frozen=True)
class VectorPartitionTable:
    """Dense table of p(n_1..n_d) for 0 <= n_i <= caps[i], stored row-major."""

    dim: int
    caps: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        assert len(self.caps) == self.dim
        assert len(self.values) == prod(c + 1 for c in self.caps)

    @property
    def strides(self) -> tuple[int, ...]:
        out, s = [], 1
        for c in reversed(self.caps):
            out.append(s)
            s *= c + 1
        return tuple(reversed(out))

    def __getitem__(self, index: Sequence[int]) -> int:
        index = tuple(index)
        if len(index) != self.dim or any(not 0 <= n <= c for n, c in zip(index, self.caps)):
            raise IndexError(f"{index} outside caps {self.caps}")
        return self.values[sum(n * s for n, s in zip(index, self.strides))]

    def indices(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(*(range(c + 1) for c in self.caps))

    def items(self):
        return zip(self.indices(), self.values)


def vector_partition_table(d: int, caps: Sequence[int], part_order=None) -> VectorPartitionTable:
    """Count multisets of positive d-vectors summing to each index within caps.

    Unbounded-knapsack DP: for each part v, sweep indices in increasing lex
    order doing table[n] += table[n - v]. ``part_order`` may permute the parts;
    the result does not depend on it.
    """
    caps = tuple(caps)
    if len(caps) != d or any(c < 0 for c in caps):
        raise ValueError("caps must be d nonnegative ints")
    shape = tuple(c + 1 for c in caps)
    strides = VectorPartitionTable(d, caps, (0,) * prod(shape)).strides
    table = [0] * prod(shape)
    table[0] = 1
    parts = list(itertools.product(*(range(1, c + 1) for c in caps))) if d else []
    if part_order is not None:
        parts = part_order(parts)
    for v in parts:
        shift = sum(x * s for x, s in zip(v, strides))
        for n in itertools.product(*(range(x, c + 1) for x, c in zip(v, caps))):
            i = sum(x * s for x, s in zip(n, strides))
            table[i] += table[i - shift]
    return VectorPartitionTable(d, caps, tuple(table))


def vector_partition_diagonal(d: int, n: int) -> int:
    return vector_partition_table(d, (n,) * d)[(n,) * d]


def tilde_sum(obj):
    """Prefix sums: running sum of a series, or along every axis of a table."""
    if isinstance(obj, TruncatedSeries):
        return TruncatedSeries(tuple(itertools.accumulate(obj.coeffs)))
    if isinstance(obj, VectorPartitionTable):
        vals = list(obj.values)
        strides = obj.strides
        for axis, stride in enumerate(strides):
            for idx in obj.indices():
                if idx[axis] > 0:
                    i = sum(x * s for x, s in zip(idx, strides))
                    vals[i] += vals[i - stride]
        return VectorPartitionTable(obj.dim, obj.caps, tuple(vals))
    if isinstance(obj, (list, tuple)):
        return list(itertools.accumulate(obj))
    raise TypeError(f"cannot prefix-sum {type(obj).__name__}")
