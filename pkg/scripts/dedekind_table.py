"""Ideal counts of I_n against the lower and upper bounds, with prime counts.

    python3 scripts/dedekind_table.py --nmax 5
"""

import argparse
import time

from intdiff.ideals import dedekind_bounds, enumerate_ideals, is_prime


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=4)
    args = ap.parse_args()
    print(f"{'n':>2} {'lower':>8} {'ideals':>8} {'upper':>12} {'primes':>7} {'time':>7}")
    for n in range(1, args.nmax + 1):
        t = time.perf_counter()
        found = enumerate_ideals(n)
        primes = sum(is_prime(a) is not None for a in found)
        lo, hi = dedekind_bounds(n)
        print(f"{n:>2} {lo:>8} {len(found):>8} {hi:>12} {primes:>7} {time.perf_counter() - t:>6.2f}s")


if __name__ == "__main__":
    main()
