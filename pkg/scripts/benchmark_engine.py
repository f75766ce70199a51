"""Time handle reduction and order comparison across word sizes.

Usage: python3 scripts/benchmark_engine.py [--seed 0] [--repeats 3]
"""

from __future__ import annotations

import argparse
import random
import time

from braidtwist import BraidWord, compare, handle_reduce


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    gens = [g for g in range(-(n - 1), n) if g]
    return BraidWord(n, [rng.choice(gens) for _ in range(length)])


def bench(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    grid = [(3, 100), (3, 1000), (5, 1000), (10, 1000), (10, 3000)]
    print(f"{'strands':>8} {'length':>8} {'reduce (s)':>12} {'compare (s)':>12}")
    for n, length in grid:
        w = random_word(rng, n, length)
        a = random_word(rng, n, length)
        b = random_word(rng, n, length)
        t_reduce = bench(lambda: handle_reduce(w), args.repeats)
        t_compare = bench(lambda: compare(a, b), args.repeats)
        print(f"{n:>8} {length:>8} {t_reduce:>12.4f} {t_compare:>12.4f}")


if __name__ == "__main__":
    main()
