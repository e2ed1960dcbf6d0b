"""Long-running fuzz of the rewrite engine against the polynomial action.

Each trial draws a random word and a partner (a relation-rewritten copy or an
unrelated word) and checks that the canonical zero test on their difference
matches the action oracle. Prints a line for every disagreement.

    python3 scripts/fuzz_oracle.py --trials 100000 --seed 1 --max-len 10
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from strategies import random_word, rewrite_word  # noqa: E402

from intdiff.action import zero_oracle  # noqa: E402
from intdiff.algebra import from_word  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-len", type=int, default=8)
    ap.add_argument("--nmax", type=int, default=2)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    t = time.perf_counter()
    bad = zeros = 0
    for _ in range(args.trials):
        n = rng.randint(1, args.nmax)
        w = random_word(rng, n, args.max_len)
        v = rewrite_word(rng, w, args.max_len) if rng.random() < 0.4 else random_word(rng, n, args.max_len)
        oracle = zero_oracle(n, [(1, w), (-1, v)])
        zeros += oracle
        if (from_word(n, w) - from_word(n, v)).is_zero() != oracle:
            bad += 1
            print(f"disagreement n={n}: {w} vs {v}")
    print(f"{args.trials} trials, {zeros} equal pairs, {bad} disagreements, {time.perf_counter() - t:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
