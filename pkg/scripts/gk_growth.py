"""Print dim V_i of the standard filtration and the fitted log-log slope.

    python3 scripts/gk_growth.py --n 1 --imax 16
"""

import argparse
import time

from intdiff.growth import GUARD, filtration_dims, growth_slope


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1)
    ap.add_argument("--imax", type=int, default=None, help="defaults to the resource guard for n")
    args = ap.parse_args()
    imax = GUARD[args.n] if args.imax is None else args.imax
    t = time.perf_counter()
    dims = filtration_dims(args.n, imax)
    for i, dim in enumerate(dims):
        print(f"{i:3d} {dim:8d}")
    lo = max(1, imax // 2)
    if imax > lo:
        print(f"slope over {lo}..{imax}: {growth_slope(dims, lo, imax):.4f}  (GK dimension {2 * args.n})")
    print(f"{time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main()
