"""Exact a_d(k), b_d(k) and the empirical rate log(a_d(k)) / (k^d / d!).

For d = 1 the rate drifts toward log 4 from below; the closed-form lower
constant is printed alongside for comparison.
"""
import argparse
import math

from hyperpart.bounds import constants, delta_empirical
from hyperpart.enumeration import count_a, count_b


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--k-max", type=int, default=8)
    ap.add_argument("--skip-b", action="store_true", help="b is much slower for d >= 2")
    args = ap.parse_args()

    lower = constants(args.d).delta_lower.value
    print(f"d={args.d}  delta lower constant = {lower:.6f}  log 4 = {math.log(4):.6f}")
    print(f"{'k':>3} {'a_d(k)':>16} {'b_d(k)':>16} {'rate':>9}")
    for k in range(1, args.k_max + 1):
        a = count_a(args.d, k)
        b = "-" if args.skip_b else count_b(args.d, k)
        print(f"{k:>3} {a:>16} {b:>16} {delta_empirical(args.d, k):>9.5f}")


if __name__ == "__main__":
    main()
