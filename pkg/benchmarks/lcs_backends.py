"""Time the compiled LCS kernel against the pure-Python fallback.

Generates seeded random token-id pairs, checks both backends agree on every
pair, then reports seconds per call for each sequence length.  Runs fine
when the extension is missing; the compiled column just reads n/a.

Usage: python benchmarks/lcs_backends.py [--seed N] [--repeat N]
"""

import argparse
import random
import time

from simscan import kernels

LENGTHS = (16, 64, 256, 1024)
VOCAB = 50


def make_pairs(rng: random.Random, length: int, count: int):
    pairs = []
    for _ in range(count):
        xs = [rng.randrange(VOCAB) for _ in range(length)]
        ys = [rng.randrange(VOCAB) for _ in range(length)]
        pairs.append(kernels.encode_pair(xs, ys))
    return pairs


def time_backend(fn, pairs, repeat: int) -> float:
    start = time.perf_counter()
    for _ in range(repeat):
        for a, b in pairs:
            fn(a, b)
    return (time.perf_counter() - start) / (repeat * len(pairs))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=1337)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--pairs", type=int, default=8, help="pairs per length")
    args = parser.parse_args()

    compiled = getattr(kernels, "_lcs_length_ids_compiled", None)
    print(f"active backend: {kernels.LCS_BACKEND}")
    header = f"{'length':>8} {'pure s/call':>14} {'compiled s/call':>16} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    rng = random.Random(args.seed)
    for length in LENGTHS:
        pairs = make_pairs(rng, length, args.pairs)
        for a, b in pairs:
            expect = kernels.lcs_length_ids_py(a, b)
            if compiled is not None and compiled(a, b) != expect:
                raise AssertionError(f"backend disagreement at length {length}")
        pure = time_backend(kernels.lcs_length_ids_py, pairs, args.repeat)
        if compiled is None:
            print(f"{length:>8} {pure:>14.6f} {'n/a':>16} {'n/a':>8}")
        else:
            fast = time_backend(compiled, pairs, args.repeat)
            ratio = pure / fast if fast > 0 else float("inf")
            print(f"{length:>8} {pure:>14.6f} {fast:>16.6f} {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
