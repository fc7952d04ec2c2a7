"""Finite chain analogue of the interval hyperring with max/[0,a] addition.

On the chain 0 < 1 < ... < k-1 let f(a,b) be the point max(a,b) when a != b and
the down-set [0,a] when a = b; g is the n-fold minimum. The script validates
the result and prints every failing axiom with its witness.
"""
import argparse
import json

from krasner.fuzzy import Carrier, characteristic
from krasner.hyperstructure import HyperOperationTable, KrasnerStructure, validate_structure


def chain(k: int, n: int) -> KrasnerStructure:
    G = Carrier(tuple(str(i) for i in range(k)))

    def f(a, b):
        x, y = int(a), int(b)
        return characteristic(G, {str(max(x, y))} if x != y else {str(i) for i in range(x + 1)})

    def g(*args):
        return characteristic(G, {str(min(int(a) for a in args))})

    return KrasnerStructure(G, HyperOperationTable.from_function(G, 2, f),
                            HyperOperationTable.from_function(G, n, g),
                            "0", {a: a for a in G.labels}, str(k - 1), name=f"chain{k}(n={n})")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()
    R = chain(args.k, args.n)
    report = validate_structure(R)
    print(f"{R.name}: {'valid' if report.ok else 'invalid'}")
    for v in report.failures():
        print(f"  {v.name}: {json.dumps(v.witness, sort_keys=True)}")


if __name__ == "__main__":
    main()
