"""Growth constants and finite-instance checks of the partition inequalities.

Reals are doubles carried together with an absolute error bound. Integer
comparisons are always exact.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable

from .enumeration import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    a_slice_product_bound,
    a_upper_bound,
    b_lower_bound,
    b_weak_lower_bound,
    count_a,
    count_b,
    count_p,
    count_p_tilde,
    lempa_k,
)
from .series import macmahon_numbers, tilde_sum, vector_partition_table

EPS = 2.0**-52
# relative slack for a short chain of correctly rounded float operations
ROUNDING = 64 * EPS


def zeta(s: int, abs_tol: float = 1e-12) -> float:
    """Riemann zeta at an integer s >= 2, within ``abs_tol``.

    Sums n^-s for n < N and brackets the tail of the convex summand between
    the trapezoid and midpoint estimates:
        int_N^oo + N^-s / 2  <=  sum_{n >= N} n^-s  <=  int_{N-1/2}^oo
    N doubles until half the bracket width fits in the tolerance.
    """
    if s < 2 or int(s) != s:
        raise ValueError("zeta needs an integer s >= 2")
    if abs_tol <= 0:
        raise ValueError("abs_tol must be positive")

    def tail_integral(x: float) -> float:
        return x ** (1 - s) / (s - 1)

    N = 16
    while True:
        lo = tail_integral(N) + N**-s / 2
        hi = tail_integral(N - 0.5)
        if (hi - lo) / 2 <= abs_tol / 4:
            break
        N *= 2
    head = math.fsum(n**-s for n in range(1, N))
    return head + (lo + hi) / 2


@dataclass(frozen=True)
class Real:
    value: float
    error: float

    def __float__(self) -> float:
        return self.value

    def definitely_less(self, other: "Real") -> bool:
        return other.value - self.value > self.error + other.error


@dataclass(frozen=True)
class ConstantSet:
    d: int
    zeta_value: Real
    gamma: Real
    beta: Real
    alpha: Real
    delta_lower: Real

    def as_dict(self) -> dict:
        out = {"d": self.d}
        for name in ("zeta_value", "gamma", "beta", "alpha", "delta_lower"):
            r = getattr(self, name)
            out[name] = r.value
            out[name + "_error"] = r.error
        return out


ZETA_TOL = 1e-12


def constants(d: int) -> ConstantSet:
    """zeta(d+1), gamma_d, beta_d, the delta_d lower bound and alpha_d, with error bounds."""
    if d < 1:
        raise ValueError("d must be >= 1")
    z = zeta(d + 1, ZETA_TOL)
    # z > 1, so z^(1/(d+1)) has derivative below 1/(d+1)
    root = z ** (1 / (d + 1))
    root_err = ZETA_TOL / (d + 1) + ROUNDING * root
    beta = (d + 1) * root
    beta_err = (d + 1) * root_err + ROUNDING * beta
    scale = d ** (-d / (d + 1))
    gamma = scale * beta
    gamma_err = scale * beta_err + ROUNDING * gamma
    delta = math.log(2) + 3.0**-d * math.log(1.5)
    alpha = (d + 1) / factorial(d + 1) ** (1 / (d + 1)) * delta
    return ConstantSet(
        d=d,
        zeta_value=Real(z, ZETA_TOL),
        gamma=Real(gamma, gamma_err),
        beta=Real(beta, beta_err),
        alpha=Real(alpha, ROUNDING * alpha),
        delta_lower=Real(delta, ROUNDING * delta),
    )


def log_int(n: int) -> Real:
    """Natural log of a positive (possibly huge) int; math.log handles big ints."""
    if n < 1:
        raise ValueError("log of a non-positive integer")
    value = math.log(n)
    return Real(value, ROUNDING * abs(value) + (0.0 if n == 1 else EPS))


def delta_empirical(d: int, k: int, budget: int = DEFAULT_BUDGET) -> float:
    """log a_d(k) / (k^d / d!)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return math.log(count_a(d, k, budget)) / (k**d / factorial(d))


def crossing_table(d_max: int) -> list[tuple[int, float, float, bool]]:
    """Rows (d, alpha_d, gamma_d, alpha_d > gamma_d) for d = 1..d_max."""
    rows = []
    for d in range(1, d_max + 1):
        c = constants(d)
        if c.gamma.definitely_less(c.alpha):
            above = True
        elif c.alpha.definitely_less(c.gamma):
            above = False
        else:
            raise ArithmeticError(f"alpha_{d} and gamma_{d} agree within error bounds")
        rows.append((d, c.alpha.value, c.gamma.value, above))
    return rows


@dataclass
class Instance:
    name: str
    params: dict
    relation: str
    lhs: int | float | None = None
    rhs: int | float | None = None
    verdict: str = "skipped"
    error_bound: float = 0.0

    def sort_key(self):
        return (self.name, sorted(self.params.items()))

    def as_dict(self) -> dict:
        def fmt(x):
            return str(x) if isinstance(x, int) else x

        return {
            "instance": self.name,
            "params": self.params,
            "relation": self.relation,
            "lhs": fmt(self.lhs),
            "rhs": fmt(self.rhs),
            "verdict": self.verdict,
            "error_bound": self.error_bound,
        }


@dataclass
class BoundsReport:
    d: int
    constants: ConstantSet
    instances: list[Instance] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures()

    def failures(self) -> list[Instance]:
        return [i for i in self.instances if i.verdict == "fail"]

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for i in self.instances:
            out[i.verdict] += 1
        return out

    def to_json(self) -> str:
        return json.dumps({
            "d": self.d,
            "constants": self.constants.as_dict(),
            "instances": [i.as_dict() for i in self.instances],
            "summary": self.counts(),
        }, sort_keys=True, indent=1)

    def to_text(self) -> str:
        lines = []
        for i in self.instances:
            params = " ".join(f"{k}={v}" for k, v in sorted(i.params.items()))
            lines.append(f"{i.verdict.upper():7s} {i.name} [{params}] {i.lhs} {i.relation} {i.rhs}")
        c = self.counts()
        lines.append(f"d={self.d}: {c['pass']} pass, {c['fail']} fail, {c['skipped']} skipped")
        return "\n".join(lines)


_RELATIONS: dict[str, Callable[[int, int], bool]] = {
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
}


def _exact(name: str, params: dict, lhs: Callable[[], int], relation: str,
           rhs: Callable[[], int]) -> Instance:
    inst = Instance(name, params, relation)
    try:
        inst.lhs, inst.rhs = lhs(), rhs()
    except BudgetExceeded:
        return inst
    inst.verdict = "pass" if _RELATIONS[relation](inst.lhs, inst.rhs) else "fail"
    return inst


def _real_le(name: str, params: dict, lhs: Callable[[], Real], rhs: Callable[[], Real]) -> Instance:
    inst = Instance(name, params, "<=")
    try:
        left, right = lhs(), rhs()
    except BudgetExceeded:
        return inst
    inst.lhs, inst.rhs = left.value, right.value
    inst.error_bound = left.error + right.error
    inst.verdict = "pass" if left.definitely_less(right) else "fail"
    return inst


def _lembv_rhs(beta: Real, index) -> Real:
    root = math.prod(index) ** (1 / (len(index) + 1))
    value = beta.value * root
    return Real(value, beta.error * root + ROUNDING * value)


def verify_suite(d: int, n_max: int, k_max: int, budget: int = DEFAULT_BUDGET) -> BoundsReport:
    """Evaluate every finite instance of the volume, simplex and MacMahon bounds."""
    if d < 1 or n_max < 1 or k_max < 1:
        raise ValueError("need d, n_max, k_max >= 1")
    consts = constants(d)
    report = BoundsReport(d, consts)
    add = report.instances.append

    vp = vector_partition_table(d, (n_max,) * d)
    vp_tilde = tilde_sum(vp)
    m = macmahon_numbers(d, max(d * n_max - d + 1, 6))
    m_tilde = tilde_sum(m)

    def p(n):
        return count_p(d, n, budget)

    def pt(n):
        return count_p_tilde(d, n, budget)

    for n in range(1, n_max + 1):
        diag = (n,) * d
        hook = d * n - d + 1
        params = {"d": d, "n": n}
        add(_exact("thmc", params, lambda: p(n), "<=", lambda: n**d * vp[diag]))
        add(_exact("lempp", params, lambda: pt(n), "<=", lambda: vp_tilde[diag]))
        add(_exact("corner-hook-tilde", params, lambda: pt(n), "<=", lambda: m_tilde[hook]))
        add(_exact("corner-hook", params, lambda: p(n), "<=", lambda: hook * m[hook]))
        if n > 1:
            add(_exact("ptilde-upper", params, lambda: pt(n), "<=", lambda: n * p(n)))
            add(_exact("ptilde-lower", params, lambda: pt(n), ">=", lambda: p(n) + 1))
        add(_exact("lempa", {**params, "k": lempa_k(d, n)},
                   lambda: pt(n), ">=", lambda: count_a(d, lempa_k(d, n), budget)))

    for index, value in vp.items():
        if min(index) >= 1:
            add(_real_le(
                "lembv", {"d": d, "index": list(index)},
                lambda: log_int(value),
                lambda: _lembv_rhs(consts.beta, index),
            ))

    for k in range(1, k_max + 1):
        params = {"d": d, "k": k}
        a = lambda: count_a(d, k, budget)  # noqa: E731
        b = lambda: count_b(d, k, budget)  # noqa: E731
        add(_exact("a-ge-b", params, a, ">=", b))
        add(_exact("lemlb", params, b, ">=", lambda: b_lower_bound(d, k)))
        add(_exact("lemlb-weak", params, b, ">=", lambda: b_weak_lower_bound(d, k)))
        add(_exact("aup", params, a, "<=", lambda: a_upper_bound(d, k)))
        if d >= 2 and k >= d:
            add(_exact("aup-slices", params, a, "<=", lambda: a_slice_product_bound(d, k, budget)))

    add(_exact("macmahon-6", {"d": d}, lambda: m[6] - p(6), "==",
               lambda: comb(d, 3) + comb(d, 4)))

    report.instances.sort(key=Instance.sort_key)
    return report
