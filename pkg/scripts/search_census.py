"""Exhaustive structure counts for small search spaces.

With --write, the size-2 baseline is stored in tests/data/search_regression.json,
which the acceptance suite compares against.
"""
import argparse
import json
import time
from pathlib import Path

from krasner.document import digest
from krasner.search import SearchSpace, enumerate_structures

REGRESSION = Path(__file__).resolve().parent.parent / "tests" / "data" / "search_regression.json"
SPACES = [
    SearchSpace(1),
    SearchSpace(2),
    SearchSpace(2, m=3),
    SearchSpace(2, n=3),
    SearchSpace(2, grade_grid=("1", "1/2")),
    SearchSpace(3),
]


def run(space):
    t = time.perf_counter()
    stream = enumerate_structures(space)
    found = list(stream)
    return found, stream, time.perf_counter() - t


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--write", action="store_true", help="store the size-2 baseline")
    args = ap.parse_args()
    print(f"{'size':>4} {'m':>2} {'n':>2} {'grid':<10} {'count':>6} {'candidates':>10} {'secs':>6}")
    for sp in SPACES:
        found, stream, secs = run(sp)
        grid = ",".join(str(g) for g in sp.grade_grid)
        print(f"{sp.carrier_size:>4} {sp.m:>2} {sp.n:>2} {grid:<10} {len(found):>6} "
              f"{stream.candidates:>10} {secs:>6.2f}")
    if args.write:
        found, stream, _ = run(SearchSpace(2))
        REGRESSION.parent.mkdir(exist_ok=True)
        REGRESSION.write_text(json.dumps({
            "space": {"carrier_size": 2, "m": 2, "n": 2, "grade_grid": ["1"], "support_policy": "singleton-only"},
            "count": len(found),
            "digests": [digest(R) for R in found],
        }, indent=2) + "\n")
        print(f"wrote {REGRESSION}")


if __name__ == "__main__":
    main()
