"""Scan a search space for ideals whose two radical computations disagree.

The powers form collects elements some g-power of which has support inside I;
the primes form intersects the prime ideals containing I. Structures without a
scalar identity are reported separately since only the binary powers form is
defined there.
"""
import argparse
import time

from krasner.ideals import enumerate_ideals, f_radical, has_powers
from krasner.search import SearchSpace, enumerate_structures


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=3)
    ap.add_argument("--policy", default="any-nonempty")
    ap.add_argument("--candidates", type=int, default=20_000)
    ap.add_argument("--show", type=int, default=3, help="disagreements to print")
    args = ap.parse_args()
    t = time.perf_counter()
    stream = enumerate_structures(SearchSpace(args.size, support_policy=args.policy,
                                              budget=args.candidates))
    seen = {"with e'": [0, 0], "without e'": [0, 0]}
    shown = 0
    for R in stream:
        if not has_powers(R):
            continue
        key = "with e'" if R.ep is not None else "without e'"
        seen[key][0] += 1
        for I in enumerate_ideals(R).ideals:
            a, b = f_radical(R, I, "powers"), f_radical(R, I, "primes")
            if a != b:
                seen[key][1] += 1
                if shown < args.show:
                    shown += 1
                    print(f"{R.name} ({key}) I={sorted(I)} powers={sorted(a)} primes={sorted(b)}")
    for key, (count, bad) in seen.items():
        print(f"{key:<11} structures={count:<6} disagreements={bad}")
    print(f"candidates={stream.candidates} truncated={stream.truncated} secs={time.perf_counter() - t:.1f}")


if __name__ == "__main__":
    main()
