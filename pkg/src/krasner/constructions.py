"""Ring lifts, quotients, products and homomorphisms of Krasner structures."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Mapping, Optional

from .errors import ConsistencyError, UsageError
from .fuzzy import ONE, SUPPORT, Carrier, FuzzySubset, ZERO, grade
from .hyperstructure import (
    HyperOperationTable, KrasnerStructure, bits, ext_mask, find_scalar_identity,
    singleton_table, validate_structure,
)
from .ideals import Check, _require_ideal, _prime_check


# -- finite rings and their lifts -------------------------------------------

@dataclass(frozen=True)
class FiniteRing:
    """A finite ring given by addition and multiplication tables over ``elements``."""
    elements: tuple
    add: tuple
    mul: tuple
    name: str = ""

    @property
    def size(self) -> int:
        return len(self.elements)

    def check(self) -> Check:
        """Commutative unital ring axioms, exhaustively."""
        k = self.size
        A, M = self.add, self.mul
        if len(A) != k or len(M) != k or any(len(r) != k for r in A + M):
            return Check(False, "tables are not k x k")
        if any(not 0 <= v < k for row in A + M for v in row):
            return Check(False, "table value outside the ring")
        zeros = [z for z in range(k) if all(A[z][a] == a for a in range(k))]
        ones = [u for u in range(k) if all(M[u][a] == a for a in range(k))]
        if not zeros:
            return Check(False, "no additive identity")
        if not ones:
            return Check(False, "no multiplicative identity")
        z = zeros[0]
        for a, b in itertools.product(range(k), repeat=2):
            if A[a][b] != A[b][a]:
                return Check(False, "addition not commutative", (a, b))
            if M[a][b] != M[b][a]:
                return Check(False, "multiplication not commutative", (a, b))
        for a in range(k):
            if not any(A[a][b] == z for b in range(k)):
                return Check(False, "no additive inverse", (a,))
        for a, b, c in itertools.product(range(k), repeat=3):
            if A[A[a][b]][c] != A[a][A[b][c]]:
                return Check(False, "addition not associative", (a, b, c))
            if M[M[a][b]][c] != M[a][M[b][c]]:
                return Check(False, "multiplication not associative", (a, b, c))
            if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
                return Check(False, "not distributive", (a, b, c))
        return Check(True)

    @property
    def zero(self) -> int:
        return next(z for z in range(self.size) if all(self.add[z][a] == a for a in range(self.size)))

    @property
    def one(self) -> int:
        return next(u for u in range(self.size) if all(self.mul[u][a] == a for a in range(self.size)))

    def negate(self, a: int) -> int:
        return next(b for b in range(self.size) if self.add[a][b] == self.zero)

    def ideals(self) -> list:
        """Classical ideals by brute force over all subsets, as sets of indices."""
        k, A, M = self.size, self.add, self.mul
        out = []
        for mask in range(1, 1 << k):
            S = [a for a in range(k) if mask >> a & 1]
            if self.zero not in S:
                continue
            Sset = set(S)
            if all(A[a][self.negate(b)] in Sset for a in S for b in S) and \
                    all(M[r][a] in Sset for r in range(k) for a in S):
                out.append(frozenset(S))
        return out


def zmod(k: int) -> FiniteRing:
    if k < 1:
        raise UsageError("modulus must be positive")
    r = range(k)
    return FiniteRing(tuple(str(a) for a in r),
                      tuple(tuple((a + b) % k for b in r) for a in r),
                      tuple(tuple((a * b) % k for b in r) for a in r),
                      name=f"Z{k}")


def ring_lift(ring: FiniteRing, m: int = 2, n: int = 2, t1=ONE, t2=ONE,
              equality_mode: str = SUPPORT, name: Optional[str] = None) -> KrasnerStructure:
    """f = fuzzy point of the m-fold sum at t1, g = fuzzy point of the n-fold product at t2."""
    c = ring.check()
    if not c:
        raise UsageError(f"not a commutative unital ring: {c.reason}")
    t1, t2 = grade(t1), grade(t2)
    if t1 == 0 or t2 == 0:
        raise UsageError("lift thresholds must be positive")
    if m < 2 or n < 2:
        raise UsageError("arities must be at least 2")
    carrier = Carrier(ring.elements)
    idx = carrier.index
    lab = carrier.labels

    def fold(table):
        def op(*args):
            acc = idx(args[0])
            for a in args[1:]:
                acc = table[acc][idx(a)]
            return lab[acc]
        return op

    f = singleton_table(carrier, m, fold(ring.add), t1)
    g = singleton_table(carrier, n, fold(ring.mul), t2)
    neg = {lab[a]: lab[ring.negate(a)] for a in range(ring.size)}
    label = name or f"{ring.name or 'ring'}({m},{n})"
    return KrasnerStructure(carrier, f, g, lab[ring.zero], neg, lab[ring.one], equality_mode, name=label)


# -- homomorphisms ----------------------------------------------------------

@dataclass(frozen=True)
class Homomorphism:
    source: KrasnerStructure
    target: KrasnerStructure
    map: tuple  # map[i] = target label of source element i

    @classmethod
    def from_mapping(cls, source, target, mapping: Mapping) -> "Homomorphism":
        try:
            images = tuple(mapping[a] for a in source.carrier.labels)
        except KeyError as exc:
            raise UsageError(f"map is not total: no image for {exc.args[0]!r}") from None
        for b in images:
            target.carrier.index(b)
        return cls(source, target, images)

    @classmethod
    def from_function(cls, source, target, fn: Callable) -> "Homomorphism":
        return cls.from_mapping(source, target, {a: fn(a) for a in source.carrier.labels})

    def __call__(self, a):
        return self.map[self.source.carrier.index(a)]

    def image_mask(self, mask: int) -> int:
        out = 0
        tgt = self.target.carrier
        for i in bits(mask):
            out |= 1 << tgt.index(self.map[i])
        return out


def check_homomorphism(h: Homomorphism) -> Check:
    """h(e1) = e2 and h maps supports of f1, g1 entries onto supports of f2, g2 entries."""
    S, T = h.source, h.target
    if S.m != T.m or S.n != T.n:
        return Check(False, "arity mismatch")
    if h(S.identity) != T.identity:
        return Check(False, "identity not preserved", (S.identity,))
    img = [T.carrier.index(b) for b in h.map]
    for name, A, B in (("f", S.f, T.f), ("g", S.g, T.g)):
        for t in itertools.product(range(S.size), repeat=A.arity):
            lhs = h.image_mask(A.masks[A.flat(t)])
            rhs = B.masks[B.flat(tuple(img[x] for x in t))]
            if lhs != rhs:
                args = tuple(S.carrier.labels[x] for x in t)
                return Check(False, f"{name}-compatibility fails on {args}: "
                                    f"h(supp) = {sorted(T.carrier.subset(lhs))}, "
                                    f"supp(image) = {sorted(T.carrier.subset(rhs))}", args)
    return Check(True)


def is_surjective(h: Homomorphism) -> bool:
    return set(h.map) == set(h.target.carrier.labels)


def preimage_ideal(h: Homomorphism, P) -> frozenset:
    """{a | h(a) in P}; when P is prime the preimage is checked to be prime too."""
    c = check_homomorphism(h)
    if not c:
        raise UsageError(f"not a homomorphism: {c.reason}")
    Pm = _require_ideal(h.target, P)
    pre = 0
    for i, b in enumerate(h.map):
        if Pm >> h.target.carrier.index(b) & 1:
            pre |= 1 << i
    if _prime_check(h.target, Pm, True):
        res = _require_ideal(h.source, pre)
        if not _prime_check(h.source, res, True):
            raise ConsistencyError("preimage of a prime ideal is not prime",
                                   witness=sorted(h.source.carrier.subset(pre)))
    return h.source.carrier.subset(pre)


# -- quotients --------------------------------------------------------------

def coset_label(R: KrasnerStructure, mask: int) -> str:
    return "[" + ",".join(str(R.carrier.labels[i]) for i in bits(mask)) + "]"


class CosetSpace:
    """Classes supp(f(a, I, e^(m-2))) of a structure modulo an F-hyperideal."""

    def __init__(self, base: KrasnerStructure, ideal):
        self.base = base
        self.ideal = _require_ideal(base, ideal)
        pad = [1 << base.e] * (base.m - 2)
        cls_of = [ext_mask(base.f, [1 << a, self.ideal] + pad) for a in range(base.size)]
        cosets = []
        for c in cls_of:
            if c not in cosets:
                cosets.append(c)
        self.cosets = tuple(cosets)
        self.rep = tuple(self.cosets.index(c) for c in cls_of)
        for i, c in enumerate(self.cosets):
            for j, d in enumerate(self.cosets[:i]):
                if c & d:
                    raise ConsistencyError("cosets overlap without coinciding",
                                           witness=(coset_label(base, c), coset_label(base, d)))
        if cls_of[base.e] != self.ideal:
            raise ConsistencyError("the class of the identity is not the ideal")

    def labels(self) -> tuple:
        return tuple(coset_label(self.base, c) for c in self.cosets)

    def classes_of(self, mask: int) -> int:
        """Bitmask over cosets hit by the elements of ``mask``."""
        out = 0
        for a in bits(mask):
            out |= 1 << self.rep[a]
        return out

    def induced_table(self, table: HyperOperationTable, carrier: Carrier) -> HyperOperationTable:
        """Entries on coset tuples; every choice of representatives must agree."""
        q = len(self.cosets)
        entries = []
        for ct in itertools.product(range(q), repeat=table.arity):
            value = None
            for reps in itertools.product(*(bits(self.cosets[c]) for c in ct)):
                got = self.classes_of(table.masks[table.flat(reps)])
                if value is None:
                    value = got
                elif got != value:
                    raise ConsistencyError(
                        "induced operation depends on the choice of representatives",
                        witness=tuple(self.base.carrier.labels[x] for x in reps))
            entries.append(FuzzySubset(carrier, tuple(ONE if value >> i & 1 else ZERO for i in range(q))))
        return HyperOperationTable(carrier, table.arity, entries)


def quotient(R: KrasnerStructure, I, check: bool = True) -> KrasnerStructure:
    """R/I over cosets, with characteristic (grade 1) induced entries."""
    cs = CosetSpace(R, I)
    carrier = Carrier(cs.labels())
    f = cs.induced_table(R.f, carrier)
    g = cs.induced_table(R.g, carrier)
    lab = carrier.labels
    neg = {lab[q]: lab[cs.rep[R.neg[bits(c)[0]]]] for q, c in enumerate(cs.cosets)}
    ep = None
    if R.ep is not None:
        ep = lab[cs.rep[R.ep]]
    Q = KrasnerStructure(carrier, f, g, lab[cs.rep[R.e]], neg, ep, SUPPORT,
                         name=f"{R.name}/{coset_label(R, cs.ideal)}")
    if Q.scalar_identity is not None and find_scalar_identity(carrier, g) is None:
        Q = KrasnerStructure(carrier, f, g, Q.identity, neg, None, SUPPORT, name=Q.name)
    if check:
        report = validate_structure(Q)
        if not report.ok:
            raise ConsistencyError("quotient fails " + ", ".join(v.name for v in report.failures()),
                                   witness=[v.to_dict() for v in report.failures()])
    return Q


def natural_projection(R: KrasnerStructure, I) -> Homomorphism:
    """a -> supp(f(a, I, e^(m-2))), onto the quotient by I."""
    Q = quotient(R, I)
    cs = CosetSpace(R, I)
    return Homomorphism(R, Q, tuple(Q.carrier.labels[cs.rep[a]] for a in range(R.size)))


def is_hyperintegral_f_domain(R: KrasnerStructure) -> bool:
    e = R.e
    return all(any(a == e for a in t) for t in itertools.product(range(R.size), repeat=R.n)
               if R.g.masks[R.g.flat(t)] == 1 << e)


# -- products ---------------------------------------------------------------

def _pair_label(a, b) -> str:
    return f"({a},{b})"


def product(R1: KrasnerStructure, R2: KrasnerStructure, check: bool = True) -> KrasnerStructure:
    """Carrier R1 x R2 with entry grades min{f1(..)(a), f2(..)(b)}."""
    if (R1.m, R1.n) != (R2.m, R2.n):
        raise UsageError(f"arity mismatch: ({R1.m},{R1.n}) vs ({R2.m},{R2.n})")
    pairs = [(a, b) for a in range(R1.size) for b in range(R2.size)]
    carrier = Carrier(tuple(_pair_label(R1.carrier.labels[a], R2.carrier.labels[b]) for a, b in pairs))

    def table(A: HyperOperationTable, B: HyperOperationTable) -> HyperOperationTable:
        entries = []
        for t in itertools.product(pairs, repeat=A.arity):
            ga = A.entries[A.flat(p[0] for p in t)].grades
            gb = B.entries[B.flat(p[1] for p in t)].grades
            entries.append(FuzzySubset(carrier, tuple(min(ga[a], gb[b]) for a, b in pairs)))
        return HyperOperationTable(carrier, A.arity, entries)

    lab = carrier.labels
    k2 = R2.size
    neg = {lab[a * k2 + b]: lab[R1.neg[a] * k2 + R2.neg[b]] for a, b in pairs}
    ep = None
    if R1.ep is not None and R2.ep is not None:
        ep = lab[R1.ep * k2 + R2.ep]
    mode = R1.equality_mode if R1.equality_mode == R2.equality_mode else SUPPORT
    P = KrasnerStructure(carrier, table(R1.f, R2.f), table(R1.g, R2.g), lab[R1.e * k2 + R2.e],
                         neg, ep, mode, name=f"{R1.name}x{R2.name}")
    if check:
        report = validate_structure(P)
        if not report.ok:
            raise ConsistencyError("product fails " + ", ".join(v.name for v in report.failures()))
    return P


def product_projections(R1, R2, P) -> tuple:
    k2 = R2.size
    p1 = Homomorphism(P, R1, tuple(R1.carrier.labels[i // k2] for i in range(P.size)))
    p2 = Homomorphism(P, R2, tuple(R2.carrier.labels[i % k2] for i in range(P.size)))
    return p1, p2


def product_ideal(R1, R2, P, I1, I2) -> frozenset:
    """The subset I1 x I2 of the product carrier."""
    I1, I2 = R1.carrier.mask(I1), R2.carrier.mask(I2)
    k2 = R2.size
    return frozenset(P.carrier.labels[a * k2 + b] for a in bits(I1) for b in bits(I2))
