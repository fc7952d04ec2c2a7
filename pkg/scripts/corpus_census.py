"""Ideal census over the standard corpus: counts, primes, maximals, primaries, timing."""
import argparse
import time

from krasner.corpus import corpus
from krasner.hyperstructure import validate_structure
from krasner.ideals import enumerate_ideals, jacobson_radical


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--table", metavar="NAME", help="print the classification table of one structure")
    args = ap.parse_args()
    print(f"{'structure':<14} {'|G|':>4} {'(m,n)':>6} {'ideals':>6} {'prime':>5} {'max':>4} "
          f"{'primary':>7} {'|J|':>4} {'secs':>6}")
    for R in corpus():
        t = time.perf_counter()
        assert validate_structure(R).ok, R.name
        lat = enumerate_ideals(R)
        rows = lat.classify()
        J = jacobson_radical(R, lat)
        secs = time.perf_counter() - t
        primary = sum(bool(r.is_primary) for r in rows) if rows[0].is_primary is not None else "-"
        print(f"{R.name:<14} {R.size:>4} {f'({R.m},{R.n})':>6} {len(lat):>6} "
              f"{sum(r.is_prime for r in rows):>5} {sum(r.is_maximal for r in rows):>4} "
              f"{primary:>7} {len(J):>4} {secs:>6.2f}")
        if args.table == R.name:
            for r in rows:
                order = [a for a in R.carrier.labels]
                fmt = lambda s: "{" + ",".join(a for a in order if a in s) + "}"
                print(f"    {fmt(r.ideal):<30} prime={r.is_prime} maximal={r.is_maximal} "
                      f"primary={r.is_primary} radical={fmt(r.radical)}")


if __name__ == "__main__":
    main()
