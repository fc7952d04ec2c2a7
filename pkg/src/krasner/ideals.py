"""F-hyperideals: recognition, enumeration, prime/maximal/primary classification, radicals.

Subsets are accepted as any iterable of labels and returned as ``frozenset``.
Internally everything runs on integer bitmasks over carrier indices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import ConsistencyError, ResourceError, UsageError
from .fuzzy import FuzzySubset, STRICT
from .hyperstructure import (
    HyperOperationTable, KrasnerStructure, bits, ext_mask, is_valid, validate_structure,
)

MAX_CARRIER = 16
CERTIFY_LIMIT = 12
SUBSET_ORACLE_BUDGET = 1 << 24


@dataclass(frozen=True)
class Check:
    """A boolean verdict that also explains itself when false."""
    ok: bool
    reason: str = ""
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def _mask(R: KrasnerStructure, S) -> int:
    if isinstance(S, int):
        return S
    return R.carrier.mask(S)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _order_key(mask: int):
    return (_popcount(mask), bits(mask))


def _labels(R, idx):
    return tuple(R.carrier.labels[i] for i in idx)


# -- recognition ------------------------------------------------------------

def restrict(R: KrasnerStructure, mask: int) -> KrasnerStructure:
    """The structure induced on a support-closed subset (no scalar identity)."""
    from .fuzzy import Carrier
    keep = bits(mask)
    sub = Carrier(tuple(R.carrier.labels[i] for i in keep))

    def table(T: HyperOperationTable) -> HyperOperationTable:
        entries = []
        for t in itertools.product(keep, repeat=T.arity):
            mu = T.entries[T.flat(t)]
            entries.append(FuzzySubset(sub, tuple(mu.grades[i] for i in keep)))
        return HyperOperationTable(sub, T.arity, entries)

    neg = {R.carrier.labels[i]: R.carrier.labels[R.neg[i]] for i in keep}
    return KrasnerStructure(sub, table(R.f), table(R.g), R.identity, neg,
                            None, R.equality_mode, name=f"{R.name}|sub")


def _absorb_masks(R: KrasnerStructure) -> tuple:
    """absorb[s] = union of supp(g(...)) over all tuples with s in some position."""
    v = R._cache.get("absorb")
    if v is None:
        k, n = R.size, R.n
        out = [0] * k
        for t in itertools.product(range(k), repeat=n):
            sup = R.g.masks[R.g.flat(t)]
            for s in set(t):
                out[s] |= sup
        v = R._cache["absorb"] = tuple(out)
    return v


def _ideal_check(R: KrasnerStructure, S: int) -> Check:
    cache = R._cache.setdefault("ideal", {})
    if S in cache:
        return cache[S]
    c = _ideal_check_uncached(R, S)
    cache[S] = c
    return c


def _ideal_check_uncached(R, S):
    k, m, n = R.size, R.m, R.n
    lab = R.carrier.labels
    if not S >> R.e & 1:
        return Check(False, "does not contain the identity", (R.identity,))
    els = bits(S)
    for t in itertools.product(els, repeat=m):
        sup = R.f.masks[R.f.flat(t)]
        if sup & ~S:
            return Check(False, f"f-closure fails: supp(f{_labels(R, t)}) = "
                                f"{sorted(R.carrier.subset(sup))}", _labels(R, t))
    for t in itertools.product(els, repeat=n):
        sup = R.g.masks[R.g.flat(t)]
        if sup & ~S:
            return Check(False, f"g-closure fails: supp(g{_labels(R, t)}) = "
                                f"{sorted(R.carrier.subset(sup))}", _labels(R, t))
    for a in els:
        if not S >> R.neg[a] & 1:
            return Check(False, f"not closed under negation: {lab[a]}^-1 = {lab[R.neg[a]]}", (lab[a],))
    for i in range(n):
        for outer in itertools.product(range(k), repeat=n - 1):
            args = [1 << x for x in outer]
            args.insert(i, S)
            sup = ext_mask(R.g, args)
            if sup & ~S:
                shown = list(_labels(R, outer))
                shown.insert(i, "S")
                return Check(False, f"absorption fails at position {i + 1}: supp(g{tuple(shown)}) = "
                                    f"{sorted(R.carrier.subset(sup))}", tuple(shown))
    report = validate_structure(restrict(R, S))
    if not report.ok:
        return Check(False, "restriction is not a Krasner hyperring: fails "
                            + ", ".join(v.name for v in report.failures()))
    return Check(True)


def is_f_hyperideal(R: KrasnerStructure, S) -> Check:
    """Is ``S`` an F-hyperideal of ``R``? A false result names the broken condition."""
    S = _mask(R, S)
    if not S:
        raise UsageError("an F-hyperideal must be non-empty")
    return _ideal_check(R, S)


def _require_ideal(R, S) -> int:
    S = _mask(R, S)
    if not S:
        raise UsageError("an F-hyperideal must be non-empty")
    c = _ideal_check(R, S)
    if not c:
        raise UsageError(f"{sorted(R.carrier.subset(S))} is not an F-hyperideal: {c.reason}")
    return S


# -- enumeration ------------------------------------------------------------

def closure(R: KrasnerStructure, S) -> int:
    """Smallest set containing ``S`` and e that is closed under negation,
    f-supports, g-supports and absorption. Returned as a bitmask."""
    S = _mask(R, S) | 1 << R.e
    absorb = _absorb_masks(R)
    m = R.m
    while True:
        nxt = S
        for a in bits(S):
            nxt |= 1 << R.neg[a] | absorb[a]
        nxt |= ext_mask(R.f, [S] * m)
        if nxt == S:
            return S
        S = nxt


def naive_ideals(R: KrasnerStructure) -> list:
    """Every subset of the carrier passing :func:`is_f_hyperideal`, as bitmasks."""
    e = 1 << R.e
    return sorted((S for S in range(1, 1 << R.size) if S & e and _ideal_check(R, S)), key=_order_key)


class IdealLattice:
    """All F-hyperideals of a structure, ordered by inclusion."""

    def __init__(self, structure: KrasnerStructure, masks):
        self.structure = structure
        self.masks = tuple(sorted(masks, key=_order_key))
        self._pos = {M: i for i, M in enumerate(self.masks)}
        # above[i] = indices of ideals strictly containing ideal i
        self.above = tuple(
            frozenset(j for j, N in enumerate(self.masks) if N != M and M & N == M)
            for M in self.masks)

    @property
    def ideals(self) -> tuple:
        return tuple(self.structure.carrier.subset(M) for M in self.masks)

    def __len__(self):
        return len(self.masks)

    def __iter__(self):
        return iter(self.ideals)

    def __contains__(self, S):
        return _mask(self.structure, S) in self._pos

    def includes(self, S, T) -> bool:
        """Whether ideal ``S`` is contained in ideal ``T``."""
        i, j = self._pos[_mask(self.structure, S)], self._pos[_mask(self.structure, T)]
        return i == j or j in self.above[i]

    def maximal_masks(self) -> list:
        full = self.structure.carrier.full_mask
        return [M for i, M in enumerate(self.masks)
                if M != full and all(self.masks[j] == full for j in self.above[i])]

    def classify(self, require_proper: bool = True) -> list:
        R = self.structure
        maxi = set(self.maximal_masks())
        rows = []
        for M in self.masks:
            prime = bool(is_prime(R, M, require_proper))
            primary = bool(is_primary(R, M, require_proper)) if has_powers(R) else None
            radical = (R.carrier.subset(_radical_powers(R, M)) if has_powers(R)
                       else R.carrier.subset(_radical_primes(R, M, require_proper)))
            rows.append(IdealInfo(R.carrier.subset(M), prime, M in maxi, primary, radical))
        return rows


@dataclass(frozen=True)
class IdealInfo:
    ideal: frozenset
    is_prime: bool
    is_maximal: bool
    is_primary: Optional[bool]
    radical: frozenset


def enumerate_ideals(R: KrasnerStructure, max_size: int = MAX_CARRIER,
                     certify_limit: int = CERTIFY_LIMIT) -> IdealLattice:
    """Every F-hyperideal of ``R``.

    Ideals are grown from the closure of {e} by adjoining one element at a time
    and re-closing; F-hyperideals are intersection-closed, so every ideal is
    reached. Up to ``certify_limit`` elements the result is also compared with
    the exhaustive subset filter.
    """
    cached = R._cache.get("lattice")
    if cached is not None:
        return cached
    if R.size > max_size:
        raise ResourceError(f"ideal enumeration is capped at {max_size} elements, structure has {R.size}")
    if not is_valid(R):
        raise UsageError(f"{R!r} does not validate; ideal enumeration needs a Krasner structure")
    start = closure(R, 0)
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for S in frontier:
            for x in range(R.size):
                if S >> x & 1:
                    continue
                T = closure(R, S | 1 << x)
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        frontier = nxt
    ideals = [S for S in found if _ideal_check(R, S)]
    if len(ideals) != len(found):
        bad = sorted(set(found) - set(ideals), key=_order_key)[0]
        raise ConsistencyError(f"closure {sorted(R.carrier.subset(bad))} is not an F-hyperideal",
                               witness=sorted(R.carrier.subset(bad)))
    if R.size <= certify_limit:
        sweep = naive_ideals(R)
        if sorted(ideals, key=_order_key) != sweep:
            raise ConsistencyError("closure enumeration disagrees with the exhaustive sweep")
    lattice = IdealLattice(R, ideals)
    R._cache["lattice"] = lattice
    return lattice


def _lattice(R, lattice):
    return lattice if lattice is not None else enumerate_ideals(R)


def generated_ideal(R: KrasnerStructure, x) -> frozenset:
    """Union over r of supp(g(r, x, e'^(n-2))); checked to be an F-hyperideal."""
    if R.ep is None:
        raise UsageError("the generated ideal needs a scalar identity")
    xi = R.carrier.index(x)
    pad = [1 << R.ep] * (R.n - 2)
    S = 0
    for r in range(R.size):
        S |= ext_mask(R.g, [1 << r, 1 << xi] + pad)
    c = _ideal_check(R, S)
    if not c:
        raise ConsistencyError(f"<{x}>_F is not an F-hyperideal: {c.reason}", witness=x)
    return R.carrier.subset(S)


# -- prime ------------------------------------------------------------------

def _prime_check(R, P, require_proper):
    full = R.carrier.full_mask
    if require_proper and P == full:
        return Check(False, "not proper")
    for t in itertools.product(range(R.size), repeat=R.n):
        if R.g.masks[R.g.flat(t)] & ~P:
            continue
        if not any(P >> a & 1 for a in t):
            return Check(False, "product lands in P with no factor in P", _labels(R, t))
    return Check(True)


def is_prime(R: KrasnerStructure, P, require_proper: bool = True) -> Check:
    """Element-wise primality: supp(g(a_1..a_n)) inside P forces some a_i in P."""
    P = _require_ideal(R, P)
    return _prime_check(R, P, require_proper)


def _nonempty_not_within(k, P):
    return [S for S in range(1, 1 << k) if S & ~P]


def _pair_extensions(R):
    """ext[b][S] = supp(g(chi_S, b)) for every subset S, for binary g.

    Built incrementally: the extension over S u {a} joins those over S and {a}.
    """
    v = R._cache.get("pair_ext")
    if v is None:
        k, g = R.size, R.g
        v = []
        for b in range(k):
            row = [0] * (1 << k)
            for S in range(1, 1 << k):
                low = S & -S
                row[S] = row[S ^ low] | g.masks[g.flat((low.bit_length() - 1, b))]
            v.append(row)
        R._cache["pair_ext"] = v
    return v


def is_prime_by_subsets(R: KrasnerStructure, P, require_proper: bool = True) -> Check:
    """Primality quantified over characteristic functions of non-empty subsets.

    Only subset tuples whose members all escape P can refute primality, so the
    search ranges over those. The last argument is resolved per element, since
    the extension is by definition a union over that argument's support.
    """
    P = _require_ideal(R, P)
    k, n = R.size, R.n
    if require_proper and P == R.carrier.full_mask:
        return Check(False, "not proper")
    escaping = _nonempty_not_within(k, P)
    if len(escaping) ** (n - 1) * k > SUBSET_ORACLE_BUDGET:
        raise ResourceError(f"subset oracle would test {len(escaping) ** (n - 1) * k} tuples")
    g = R.g
    if n == 2:
        per_b = _pair_extensions(R)
        for S in escaping:
            allowed = 0
            for b in range(k):
                if not per_b[b][S] & ~P:
                    allowed |= 1 << b
            if allowed & ~P:
                return Check(False, "subset product lands in P with no argument inside P",
                             (sorted(R.carrier.subset(S)), sorted(R.carrier.subset(allowed))))
        return Check(True)
    for head in itertools.product(escaping, repeat=n - 1):
        allowed = 0
        for b in range(k):
            if not ext_mask(g, list(head) + [1 << b]) & ~P:
                allowed |= 1 << b
        if allowed & ~P:
            return Check(False, "subset product lands in P with no argument inside P",
                         tuple(sorted(R.carrier.subset(S)) for S in head + (allowed,)))
    return Check(True)


def is_prime_by_all_subsets(R: KrasnerStructure, P, require_proper: bool = True) -> bool:
    """Fully naive form: every n-tuple of non-empty subsets. Tiny carriers only."""
    P = _require_ideal(R, P)
    k, n = R.size, R.n
    if (1 << k) ** n > SUBSET_ORACLE_BUDGET:
        raise ResourceError("naive subset oracle is over budget")
    if require_proper and P == R.carrier.full_mask:
        return False
    for Ss in itertools.product(range(1, 1 << k), repeat=n):
        if not ext_mask(R.g, list(Ss)) & ~P and not any(S & ~P == 0 for S in Ss):
            return False
    return True


# -- maximal, Jacobson -----------------------------------------------------

def is_maximal(R: KrasnerStructure, M, lattice: Optional[IdealLattice] = None) -> bool:
    M = _require_ideal(R, M)
    return M in _lattice(R, lattice).maximal_masks()


def maximal_ideals(R: KrasnerStructure, lattice: Optional[IdealLattice] = None) -> list:
    return [R.carrier.subset(M) for M in _lattice(R, lattice).maximal_masks()]


def jacobson_radical(R: KrasnerStructure, lattice: Optional[IdealLattice] = None) -> frozenset:
    """Intersection of the maximal ideals; the whole carrier when there are none."""
    J = R.carrier.full_mask
    for M in _lattice(R, lattice).maximal_masks():
        J &= M
    return R.carrier.subset(J)


def is_f_invertible(R: KrasnerStructure, x) -> bool:
    if R.ep is None:
        raise UsageError("F-invertibility needs a scalar identity")
    xi = R.carrier.index(x)
    target = 1 << R.ep
    pad = [target] * (R.n - 2)
    return any(ext_mask(R.g, [1 << xi, 1 << y] + pad) == target for y in range(R.size))


# -- radicals ---------------------------------------------------------------

def has_powers(R: KrasnerStructure) -> bool:
    """Whether short powers and e'-cofactors are defined (binary g needs no padding)."""
    return R.ep is not None or R.n == 2


def _require_powers(R, what):
    if not has_powers(R):
        raise UsageError(f"{what} needs a scalar identity when n > 2")


def _in_radical(R, a, I) -> bool:
    g, n, ep = R.g, R.n, R.ep
    single = 1 << a
    if not single & ~I:
        return True
    for s in range(2, n + 1):
        pad = [1 << ep] * (n - s) if s < n else []
        if not ext_mask(g, [single] * s + pad) & ~I:
            return True
    # nested powers a^(l(n-1)+1); the support sequence is eventually periodic
    cur = ext_mask(g, [single] * n)
    seen = {cur}
    while True:
        cur = ext_mask(g, [cur] + [single] * (n - 1))
        if not cur & ~I:
            return True
        if cur in seen:
            return False
        seen.add(cur)


def _radical_powers(R, I) -> int:
    key = ("rad_powers", I)
    if key not in R._cache:
        R._cache[key] = sum(1 << a for a in range(R.size) if _in_radical(R, a, I))
    return R._cache[key]


def _radical_primes(R, I, require_proper=True, lattice=None) -> int:
    out = R.carrier.full_mask
    for P in _lattice(R, lattice).masks:
        if P & I == I and _prime_check(R, P, require_proper):
            out &= P
    return out


def f_radical(R: KrasnerStructure, I, method: str = "powers", require_proper: bool = True,
              lattice: Optional[IdealLattice] = None) -> frozenset:
    """The F-radical of ``I``.

    ``powers``: elements some g-power of which has support inside ``I``.
    ``primes``: intersection of the prime ideals containing ``I`` (the carrier if none).
    """
    I = _require_ideal(R, I)
    if method == "powers":
        _require_powers(R, "the powers form of the radical")
        return R.carrier.subset(_radical_powers(R, I))
    if method == "primes":
        return R.carrier.subset(_radical_primes(R, I, require_proper, lattice))
    raise UsageError(f"unknown radical method {method!r}; expected 'powers' or 'primes'")


# -- primary ----------------------------------------------------------------

def _cofactor(R, t, i) -> int:
    """supp(g(t with e' in slot i)); for binary g without e' it is the other factor."""
    if R.ep is None:
        return 1 << t[1 - i]
    args = [1 << x for x in t]
    args[i] = 1 << R.ep
    return ext_mask(R.g, args)


def is_primary(R: KrasnerStructure, Q, require_proper: bool = True) -> Check:
    """Some a_i lies in Q, or the product with e' in slot i lands in the radical."""
    Q = _require_ideal(R, Q)
    _require_powers(R, "primary F-hyperideals")
    if require_proper and Q == R.carrier.full_mask:
        return Check(False, "not proper")
    rad = _radical_powers(R, Q)
    for t in itertools.product(range(R.size), repeat=R.n):
        if R.g.masks[R.g.flat(t)] & ~Q:
            continue
        ok = False
        for i, a in enumerate(t):
            if Q >> a & 1:
                ok = True
                break
            if not _cofactor(R, t, i) & ~rad:
                ok = True
                break
        if not ok:
            return Check(False, "product lands in Q, no factor in Q and no cofactor in the radical",
                         _labels(R, t))
    return Check(True)


# -- prime avoidance --------------------------------------------------------

def is_g_closed(R: KrasnerStructure, T) -> bool:
    T = _mask(R, T)
    return all(not R.g.masks[R.g.flat(t)] & ~T for t in itertools.product(bits(T), repeat=R.n))


def prime_disjoint_from(R: KrasnerStructure, I, T,
                        lattice: Optional[IdealLattice] = None) -> Optional[frozenset]:
    """An ideal maximal among those containing ``I`` and missing ``T``; checked prime.

    Ties between maximal candidates go to the lexicographically least one
    (comparing sorted carrier indices).
    """
    I = _require_ideal(R, I)
    T = _mask(R, T)
    if not T:
        raise UsageError("T must be non-empty")
    if not is_g_closed(R, T):
        raise UsageError(f"{sorted(R.carrier.subset(T))} is not support closed under g")
    if I & T:
        raise UsageError("I and T intersect")
    lat = _lattice(R, lattice)
    cands = [P for P in lat.masks if P & I == I and not P & T]
    if not cands:
        return None
    tops = [P for P in cands if not any(Q != P and Q & P == P for Q in cands)]
    best = min(tops, key=bits)
    if not _prime_check(R, best, True):
        raise ConsistencyError(f"maximal T-avoiding ideal {sorted(R.carrier.subset(best))} is not prime",
                               witness=sorted(R.carrier.subset(best)))
    return R.carrier.subset(best)


def g_closed_subsets(R: KrasnerStructure, max_card: int) -> list:
    """All non-empty g-closed subsets of at most ``max_card`` elements, as label sets."""
    out = []
    for r in range(1, max_card + 1):
        for combo in itertools.combinations(range(R.size), r):
            T = sum(1 << x for x in combo)
            if is_g_closed(R, T):
                out.append(R.carrier.subset(T))
    return out
