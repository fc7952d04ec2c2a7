"""The standard structure corpus: ring lifts, their small products, tiny enumerated structures."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .constructions import product, ring_lift, zmod
from .search import SearchSpace, enumerate_structures

T1 = Fraction(1, 2)
T2 = Fraction(1, 3)
LIFT_MODULI = (2, 3, 4, 5, 6, 12)
MAX_PRODUCT_SIZE = 16


def lift(k: int, m: int = 2, n: int = 2, t1=T1, t2=T2):
    return ring_lift(zmod(k), m, n, t1, t2, name=f"Z{k}" if (m, n) == (2, 2) else f"Z{k}({m},{n})")


@lru_cache(maxsize=None)
def lifts() -> tuple:
    return tuple(lift(k) for k in LIFT_MODULI) + (lift(2, 3, 2),)


@lru_cache(maxsize=None)
def products(max_size: int = MAX_PRODUCT_SIZE) -> tuple:
    """Pairwise products (unordered, squares included) of same-arity lifts up to ``max_size``."""
    base = lifts()
    out = []
    for i, A in enumerate(base):
        for B in base[i:]:
            if (A.m, A.n) == (B.m, B.n) and A.size * B.size <= max_size:
                out.append(product(A, B))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerated(max_size: int = 2) -> tuple:
    out = []
    for k in range(1, max_size + 1):
        out.extend(enumerate_structures(SearchSpace(k)))
    return tuple(out)


def corpus() -> tuple:
    return lifts() + products() + enumerated()
