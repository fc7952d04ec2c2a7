"""Acceptance criteria, one test each, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""
import contextlib
import io
import json
import random
import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path

import pytest

from krasner.cli import main as cli_main
from krasner.constructions import (
    is_hyperintegral_f_domain, natural_projection, check_homomorphism, preimage_ideal, product,
    product_ideal, quotient,
)
from krasner.corpus import corpus, lift
from krasner.document import digest, parse, serialize
from krasner.fuzzy import fuzzy_point, support
from krasner.hyperstructure import KrasnerStructure, bits, ext_mask, validate_structure
from krasner.ideals import (
    enumerate_ideals, f_radical, g_closed_subsets, has_powers, is_f_invertible, is_maximal,
    is_prime, is_prime_by_subsets, is_primary, jacobson_radical, maximal_ideals, naive_ideals,
    prime_disjoint_from,
)
from krasner.search import SearchSpace, enumerate_structures

LIMIT = 60.0
HALF, THIRD = Fraction(1, 2), Fraction(1, 3)
REGRESSION = Path(__file__).parent / "data" / "search_regression.json"
_CORPUS = None


def structures():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = corpus()
    return _CORPUS


def ideals_of(R):
    return enumerate_ideals(R).ideals


def S(*xs):
    return frozenset(str(x) for x in xs)


class Failure(Exception):
    pass


def need(cond, msg):
    if not cond:
        raise Failure(msg)


# -- criteria ---------------------------------------------------------------

def c1_axiom_soundness():
    z6 = lift(6, t1=HALF, t2=THIRD)
    need(validate_structure(z6, "support").ok, "Z6 fails in support mode")
    strict = validate_structure(z6, "strict")
    names = [v.name for v in strict.failures()]
    need(names == ["distributive"], f"strict failures {names}")
    v = strict["distributive"]
    sides = {max(v.lhs.grades), max(v.rhs.grades)}
    need(sides == {THIRD, HALF}, f"witness grades {sides}")
    rng = random.Random(20240601)
    labels = z6.carrier.labels
    for i in range(50):
        which = rng.choice("fg")
        T = getattr(z6, which)
        args = tuple(rng.choice(labels) for _ in range(T.arity))
        old = support(T[args])
        new = rng.choice([x for x in labels if x not in old])
        T2 = T.replace(args, fuzzy_point(z6.carrier, new, max(T[args].grades)))
        M = KrasnerStructure(z6.carrier, T2 if which == "f" else z6.f, T2 if which == "g" else z6.g,
                             z6.identity, z6.negation, z6.scalar_identity)
        need(not validate_structure(M).ok, f"mutation {which}{args}->{new} not caught")
    return f"strict fails only distributivity ({format(THIRD)} vs {format(HALF)}); 50/50 mutations caught"


def c2_ideal_enumeration():
    n = 0
    for R in structures():
        if R.size <= 8:
            need(list(enumerate_ideals(R).masks) == naive_ideals(R), f"{R.name} disagrees with naive filter")
            n += 1
    need(len(ideals_of(lift(6))) == 4, "Z6 ideal count")
    need(len(ideals_of(lift(12))) == 6, "Z12 ideal count")
    return f"{n} structures match the naive filter; Z6 has 4 ideals, Z12 has 6"


def c3_prime_characterization():
    n = 0
    for R in structures():
        for I in ideals_of(R):
            for proper in (True, False):
                a, b = bool(is_prime(R, I, proper)), bool(is_prime_by_subsets(R, I, proper))
                need(a == b, f"{R.name} {sorted(I)} proper={proper}: {a} vs {b}")
            n += 1
    return f"{n} ideals, both readings, exact agreement"


def c4_prime_iff_domain_quotient():
    n = 0
    for R in structures():
        for P in ideals_of(R):
            prime = bool(is_prime(R, P, require_proper=False))
            dom = is_hyperintegral_f_domain(quotient(R, P))
            need(prime == dom, f"{R.name} {sorted(P)}: prime={prime} domain={dom}")
            n += 1
    return f"{n} ideals agree (whole ring counted under the literal reading)"


def c5_prime_implies_primary():
    n = 0
    for R in structures():
        if not has_powers(R):
            continue
        for I in ideals_of(R):
            if is_prime(R, I):
                need(is_primary(R, I), f"{R.name} {sorted(I)} prime but not primary")
                n += 1
    z12 = lift(12)
    Q = S(0, 4, 8)
    need(is_primary(z12, Q) and not is_prime(z12, Q), "Z12 {0,4,8} row")
    return f"{n} prime ideals all primary; Z12 {{0,4,8}} primary and not prime"


def c6_radical_agreement():
    n = k = 0
    for R in structures():
        for I in ideals_of(R):
            a, b = f_radical(R, I, "powers"), f_radical(R, I, "primes")
            need(a == b, f"{R.name} {sorted(I)}: powers {sorted(a)} primes {sorted(b)}")
            n += 1
            if R.ep is not None and is_primary(R, I):
                need(is_prime(R, a), f"{R.name} radical of primary {sorted(I)} not prime")
                k += 1
    got = f_radical(lift(12), S(0, 4, 8))
    need(got == S(0, 2, 4, 6, 8, 10), f"Z12 radical {sorted(got)}")
    return f"{n} radicals agree; {k} primary radicals prime; Z12 value matches"


def c7_homomorphisms():
    n = p = 0
    for R in structures():
        for I in ideals_of(R):
            pi = natural_projection(R, I)
            need(check_homomorphism(pi), f"{R.name} pi_{sorted(I)} not a homomorphism")
            n += 1
            Q = pi.target
            for P in ideals_of(Q):
                if is_prime(Q, P):
                    pre = preimage_ideal(pi, P)
                    need(is_prime(R, pre), f"{R.name}/{sorted(I)} preimage of {sorted(P)}")
                    p += 1
    return f"{n} projections are homomorphisms; {p} prime preimages prime"


def c8_product_theorem():
    n = 0
    for R1 in (lift(2), lift(3), lift(2, 3, 2)):
        for R2 in (lift(k) for k in (2, 3, 4, 5, 6)) if R1.m == 2 else [lift(2, 3, 2)]:
            if R1.size * R2.size > 16:
                continue
            Pr = product(R1, R2)
            need(validate_structure(Pr).ok, f"{Pr.name} invalid")
            for P1 in ideals_of(R1):
                if is_prime(R1, P1):
                    X = product_ideal(R1, R2, Pr, P1, R2.carrier.labels)
                    need(is_prime(Pr, X), f"{sorted(P1)} x {R2.name} not prime")
                    n += 1
    return f"{n} products P1 x R2 prime, all products validate"


def c9_invertibility():
    n = 0
    for R in structures():
        if R.ep is None:
            continue
        J = jacobson_radical(R)
        pad = [1 << R.e] * (R.m - 2)
        lat = enumerate_ideals(R)
        for mask, I in zip(lat.masks, lat.ideals):
            coset = ext_mask(R.f, [1 << R.ep, mask] + pad)
            lhs = all(is_f_invertible(R, R.carrier.labels[x]) for x in bits(coset))
            need(lhs == (I <= J), f"{R.name} {sorted(I)}: invertible={lhs} in J={I <= J}")
            n += 1
    z4 = lift(4)
    M = S(0, 2)
    hyp = is_maximal(z4, M) and all(is_f_invertible(z4, x) for x in z4.carrier.labels if x not in M)
    need(hyp, "Z4 hypothesis")
    need(maximal_ideals(z4) == [M], "Z4 conclusion")
    return f"{n} ideals satisfy the biconditional; Z4 {{0,2}} is the unique maximal ideal"


def c10_prime_avoidance():
    n = 0
    for R in structures():
        # exhaustive up to |T| = 4 on small carriers, pairs elsewhere
        closed = g_closed_subsets(R, 4 if R.size <= 6 else 2)
        for I in ideals_of(R):
            for T in closed:
                if I & T:
                    continue
                P = prime_disjoint_from(R, I, T)
                need(P is not None and I <= P and not P & T, f"{R.name} {sorted(I)} {sorted(T)}")
                need(is_prime(R, P), f"{R.name} {sorted(P)} not prime")
                n += 1
    return f"{n} (I, T) pairs yield a prime avoiding T"


def c11_search_regression():
    stored = json.loads(REGRESSION.read_text())
    runs = []
    for _ in range(2):
        stream = enumerate_structures(SearchSpace(2))
        found = list(stream)
        need(not stream.truncated, "search truncated")
        runs.append([digest(R) for R in found])
    need(runs[0] == runs[1], "unstable across runs")
    need(len(runs[0]) == stored["count"] and runs[0] == stored["digests"],
         f"count {len(runs[0])} vs stored {stored['count']}")
    z2 = lift(2, t1=1, t2=1)
    hit = any(all(support(R.f[a]) == support(z2.f[a]) and support(R.g[a]) == support(z2.g[a])
                  for a in z2.f.tuples()) for R in enumerate_structures(SearchSpace(2)))
    need(hit, "Z2 lift missing")
    return f"count {stored['count']} matches stored baseline; Z2 lift present"


def c12_cli_round_trip():
    for R in structures():
        text = serialize(R)
        need(parse(text) == R and serialize(parse(text)) == text, f"{R.name} round trip")
    with tempfile.TemporaryDirectory() as d:
        doc = Path(d) / "z12.json"
        doc.write_text(serialize(lift(12)))
        outs = []
        for i in range(2):
            out = Path(d) / f"r{i}.json"
            with contextlib.redirect_stdout(io.StringIO()):
                code = cli_main(["classify", str(doc), "--json", str(out)])
            need(code == 0, f"classify exit {code}")
            outs.append(json.dumps(json.loads(out.read_text())["report"], sort_keys=True).encode())
    need(outs[0] == outs[1], "classify output differs between runs")
    table = json.loads(outs[0])["verdicts"]["table"]
    row = next(r for r in table if r["ideal"] == ["0", "4", "8"])
    need(row["primary"] == "yes" and row["prime"] == "no", f"row {row}")
    return f"{len(structures())} structures round-trip; classify report byte-identical"


CRITERIA = [
    (1, "axiom soundness", c1_axiom_soundness),
    (2, "ideal enumeration oracle", c2_ideal_enumeration),
    (3, "prime characterization equivalence", c3_prime_characterization),
    (4, "prime iff quotient domain", c4_prime_iff_domain_quotient),
    (5, "prime implies primary", c5_prime_implies_primary),
    (6, "radical agreement", c6_radical_agreement),
    (7, "homomorphism suite", c7_homomorphisms),
    (8, "product theorem", c8_product_theorem),
    (9, "invertibility biconditional", c9_invertibility),
    (10, "prime avoidance", c10_prime_avoidance),
    (11, "search regression", c11_search_regression),
    (12, "CLI round trip", c12_cli_round_trip),
]


def run_criterion(num, title, fn):
    start = time.perf_counter()
    try:
        detail, ok = fn(), True
    except Failure as exc:
        detail, ok = str(exc), False
    secs = time.perf_counter() - start
    if secs >= LIMIT:
        ok, detail = False, f"{detail}; took {secs:.1f}s"
    line = f"{'PASS' if ok else 'FAIL'} criterion {num:>2} {title} ({secs:.2f}s): {detail}"
    return ok, line


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, line = run_criterion(num, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
