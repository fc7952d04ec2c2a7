"""Search the corpus and small enumerated spaces for each registered predicate."""
import time

from krasner.corpus import corpus, lift, lifts
from krasner.search import PREDICATES, SearchSpace, find_witness

SOURCES = [
    ("Z12 lift", lambda: [lift(12)]),
    ("lifts", lifts),
    ("corpus", corpus),
    ("|G|=3 any support", lambda: SearchSpace(3, support_policy="any-nonempty", budget=20_000)),
]


def main():
    for pred in sorted(PREDICATES):
        for label, make in SOURCES:
            t = time.perf_counter()
            w = find_witness(make(), pred)
            hit = f"{w.structure.name} {sorted(w.ideal, key=str)}" if w.found else "none"
            print(f"{pred:<18} {label:<18} {hit:<28} examined={w.examined:<4} "
                  f"truncated={w.truncated} {time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main()
