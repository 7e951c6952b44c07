"""Print the growth constants for a range of dimensions and where alpha overtakes gamma."""
import argparse

from hyperpart.bounds import constants, crossing_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-max", type=int, default=10)
    args = ap.parse_args()

    print(f"{'d':>2} {'gamma':>10} {'beta':>10} {'alpha':>10} {'err':>9}  alpha>gamma")
    for d, alpha, gamma, above in crossing_table(args.d_max):
        c = constants(d)
        err = max(c.alpha.error, c.gamma.error, c.beta.error)
        print(f"{d:>2} {gamma:>10.6f} {c.beta.value:>10.6f} {alpha:>10.6f} {err:>9.1e}  {above}")


if __name__ == "__main__":
    main()
