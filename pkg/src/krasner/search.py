"""Exhaustive and randomized generation of small Krasner F^(m,n)-hyperrings.

Candidates are pruned before validation, each pruning removing only tables
that some axiom would reject anyway:

* the identity is element ``"0"`` (every structure can be relabelled so);
* ``supp(f(a, e, ..., e)) = {a}``;
* tables are commutative, so entries are chosen per multiset of arguments;
* tuples containing the identity have ``g``-support ``{e}`` (absorbing zero).
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .errors import UsageError
from .fuzzy import ONE, Carrier, FuzzySubset, ZERO, grade
from .hyperstructure import (
    HyperOperationTable, KrasnerStructure, find_scalar_identity, validate_hypergroup,
    validate_structure,
)
from . import ideals as _ideals

SINGLETON_ONLY = "singleton-only"
ANY_NONEMPTY = "any-nonempty"
POLICIES = (SINGLETON_ONLY, ANY_NONEMPTY)


@dataclass(frozen=True)
class SearchSpace:
    carrier_size: int
    m: int = 2
    n: int = 2
    grade_grid: tuple = (ONE,)
    support_policy: str = SINGLETON_ONLY
    budget: int = 1_000_000

    def __post_init__(self):
        if self.carrier_size < 1:
            raise UsageError("carrier size must be at least 1")
        if self.m < 2 or self.n < 2:
            raise UsageError("arities must be at least 2")
        grid = tuple(sorted({grade(t) for t in self.grade_grid}))
        if not grid or grid[0] == 0:
            raise UsageError("grade grid must be a non-empty subset of (0, 1]")
        object.__setattr__(self, "grade_grid", grid)
        if self.support_policy not in POLICIES:
            raise UsageError(f"unknown support policy {self.support_policy!r}")
        if self.budget < 0:
            raise UsageError("budget must be non-negative")

    @property
    def carrier(self) -> Carrier:
        return Carrier(tuple(str(i) for i in range(self.carrier_size)))


def _entry_options(space: SearchSpace, carrier: Carrier, support: Optional[int] = None) -> list:
    """All admissible fuzzy entries, optionally with a prescribed support mask."""
    k = len(carrier)
    if space.support_policy == SINGLETON_ONLY:
        supports = [1 << i for i in range(k)]
    else:
        supports = list(range(1, 1 << k))
    if support is not None:
        supports = [s for s in supports if s == support]
    out = []
    for s in supports:
        members = [i for i in range(k) if s >> i & 1]
        for gs in itertools.product(space.grade_grid, repeat=len(members)):
            grades = [ZERO] * k
            for i, t in zip(members, gs):
                grades[i] = t
            out.append(FuzzySubset(carrier, tuple(grades)))
    return out


def _multisets(k: int, r: int) -> list:
    return list(itertools.combinations_with_replacement(range(k), r))


def _table(carrier, arity, choice: dict) -> HyperOperationTable:
    k = len(carrier)
    return HyperOperationTable(carrier, arity, (choice[tuple(sorted(t))]
                                                for t in itertools.product(range(k), repeat=arity)))


def _slots(space: SearchSpace, carrier: Carrier, arity: int, forced: Callable) -> list:
    """(multiset, options) per table slot; ``forced(ms)`` may prescribe a support."""
    out = []
    for ms in _multisets(len(carrier), arity):
        out.append((ms, _entry_options(space, carrier, forced(ms))))
    return out


def _f_forced(m):
    def forced(ms):
        # ms sorted, identity is index 0: (0,...,0,a) is f(a, e^(m-1)) up to order
        if ms.count(0) >= m - 1:
            return 1 << ms[-1]
        return None
    return forced


def _g_forced(ms):
    return 1 if 0 in ms else None


def involutions(k: int) -> list:
    """Every involutive permutation of range(k), as tuples, in lexicographic order."""
    return sorted(p for p in itertools.permutations(range(k))
                  if all(p[p[i]] == i for i in range(k)))


class StructureStream:
    """Iterable of validated structures; ``truncated`` is set if the budget ran out."""

    def __init__(self, space: SearchSpace):
        self.space = space
        self.truncated = False
        self.candidates = 0

    def _spend(self) -> bool:
        if self.candidates >= self.space.budget:
            self.truncated = True
            return False
        self.candidates += 1
        return True

    def __iter__(self) -> Iterator[KrasnerStructure]:
        sp = self.space
        carrier = sp.carrier
        labels = carrier.labels
        f_slots = _slots(sp, carrier, sp.m, _f_forced(sp.m))
        g_slots = _slots(sp, carrier, sp.n, _g_forced)
        count = 0
        for f_pick in itertools.product(*(opts for _, opts in f_slots)):
            f = _table(carrier, sp.m, {ms: mu for (ms, _), mu in zip(f_slots, f_pick)})
            for neg in involutions(len(carrier)):
                if not self._spend():
                    return
                negation = tuple(labels[i] for i in neg)
                probe = KrasnerStructure(carrier, f, f if sp.n == sp.m else _table(
                    carrier, sp.n, {ms: g_slots[j][1][0] for j, (ms, _) in enumerate(g_slots)}),
                    labels[0], negation)
                if not validate_hypergroup(probe).ok:
                    continue
                for g_pick in itertools.product(*(opts for _, opts in g_slots)):
                    if not self._spend():
                        return
                    g = _table(carrier, sp.n, {ms: mu for (ms, _), mu in zip(g_slots, g_pick)})
                    R = KrasnerStructure(carrier, f, g, labels[0], negation,
                                         find_scalar_identity(carrier, g), name=f"S{sp.carrier_size}#{count}")
                    if validate_structure(R).ok:
                        count += 1
                        yield R


def enumerate_structures(space: SearchSpace) -> StructureStream:
    """Every structure in ``space`` that validates in support mode, in a fixed order."""
    return StructureStream(space)


def random_structures(space: SearchSpace, count: int, seed: int = 0,
                      max_tries: int = 100_000) -> list:
    """Up to ``count`` validated structures drawn by seeded random table sampling."""
    rng = random.Random(seed)
    carrier = space.carrier
    labels = carrier.labels
    f_slots = _slots(space, carrier, space.m, _f_forced(space.m))
    g_slots = _slots(space, carrier, space.n, _g_forced)
    invs = involutions(len(carrier))
    out = []
    for attempt in range(max_tries):
        if len(out) >= count:
            break
        f = _table(carrier, space.m, {ms: rng.choice(opts) for ms, opts in f_slots})
        g = _table(carrier, space.n, {ms: rng.choice(opts) for ms, opts in g_slots})
        negation = tuple(labels[i] for i in rng.choice(invs))
        R = KrasnerStructure(carrier, f, g, labels[0], negation, find_scalar_identity(carrier, g),
                             name=f"rand{seed}#{attempt}")
        if validate_structure(R).ok:
            out.append(R)
    return out


# -- witness hunting --------------------------------------------------------

def _proper(R, lattice):
    full = R.carrier.full_mask
    return [M for M in lattice.masks if M != full]


def _primary_not_prime(R, lattice):
    if not _ideals.has_powers(R):
        return None
    for Q in _proper(R, lattice):
        if _ideals.is_primary(R, Q) and not _ideals.is_prime(R, Q):
            return Q
    return None


def _ideal_not_primary(R, lattice):
    if not _ideals.has_powers(R):
        return None
    for Q in _proper(R, lattice):
        if not _ideals.is_primary(R, Q):
            return Q
    return None


def _prime_not_maximal(R, lattice):
    maxi = set(lattice.maximal_masks())
    for P in _proper(R, lattice):
        if _ideals.is_prime(R, P) and P not in maxi:
            return P
    return None


def _unique_maximal(R, lattice):
    """A maximal M such that every element outside M is F-invertible."""
    if R.ep is None:
        return None
    for M in lattice.maximal_masks():
        if all(_ideals.is_f_invertible(R, R.carrier.labels[a])
               for a in range(R.size) if not M >> a & 1):
            return M
    return None


PREDICATES = {
    "primary-not-prime": _primary_not_prime,
    "ideal-not-primary": _ideal_not_primary,
    "prime-not-maximal": _prime_not_maximal,
    "unique-maximal": _unique_maximal,
}


@dataclass(frozen=True)
class Witness:
    structure: Optional[KrasnerStructure]
    ideal: Optional[frozenset]
    truncated: bool = False
    examined: int = 0

    @property
    def found(self) -> bool:
        return self.structure is not None


def find_witness(source, predicate: str) -> Witness:
    """First (structure, ideal) in order satisfying a registered predicate.

    ``source`` is a :class:`SearchSpace` (searched exhaustively within its
    budget) or any iterable of structures.
    """
    try:
        test = PREDICATES[predicate]
    except KeyError:
        raise UsageError(f"unknown predicate {predicate!r}; expected one of {sorted(PREDICATES)}") from None
    stream = enumerate_structures(source) if isinstance(source, SearchSpace) else source
    examined = 0
    for R in stream:
        examined += 1
        lattice = _ideals.enumerate_ideals(R)
        hit = test(R, lattice)
        if hit is not None:
            return Witness(R, R.carrier.subset(hit), getattr(stream, "truncated", False), examined)
    return Witness(None, None, getattr(stream, "truncated", False), examined)
