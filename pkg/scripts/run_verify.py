"""Run the finite inequality suite over several dimensions and write JSON reports.

    python3 scripts/run_verify.py --d 1 2 3 --n-max 6 --k-max 6 --out reports/
"""
import argparse
import pathlib
import sys
import time

from hyperpart.bounds import verify_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--out", type=pathlib.Path)
    args = ap.parse_args()

    ok = True
    for d in args.d:
        t0 = time.perf_counter()
        report = verify_suite(d, args.n_max, args.k_max)
        counts = report.counts()
        print(f"d={d}: {counts['pass']} pass, {counts['fail']} fail, "
              f"{counts['skipped']} skipped ({time.perf_counter() - t0:.1f}s)")
        for inst in report.failures():
            print("  FAIL", inst.as_dict())
        ok &= report.passed
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"verify_d{d}.json").write_text(report.to_json() + "\n")
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
