"""Compare the Euler-product numbers m_d(n) with exhaustive counts p_d(n).

    python3 scripts/discrepancy_table.py --d-max 5 --n-max 7
"""
import argparse
import time
from math import comb

from hyperpart.enumeration import count_p
from hyperpart.series import macmahon_numbers


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d-max", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    print(f"{'d':>2} {'n':>3} {'m_d(n)':>10} {'p_d(n)':>10} {'diff':>6}")
    for d in range(1, args.d_max + 1):
        m = macmahon_numbers(d, args.n_max)
        t0 = time.perf_counter()
        for n in range(args.n_max + 1):
            p = count_p(d, n, jobs=args.jobs)
            print(f"{d:>2} {n:>3} {m[n]:>10} {p:>10} {m[n] - p:>6}")
        print(f"   (d={d}: {time.perf_counter() - t0:.2f}s; "
              f"C(d,3)+C(d,4) = {comb(d, 3) + comb(d, 4)})")


if __name__ == "__main__":
    main()
