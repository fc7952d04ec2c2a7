"""Fuzzy hyperoperation tables, Krasner F^(m,n)-hyperrings and their axiom checker."""
from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional

from .errors import DomainError, ResourceError, UsageError
from .fuzzy import (
    SUPPORT, STRICT, ZERO, Carrier, FuzzySubset, characteristic, check_mode,
    format_grade,
)

DEFAULT_BUDGET = 10 ** 8


@lru_cache(maxsize=1 << 16)
def bits(mask: int) -> tuple:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def grades_mask(grades) -> int:
    m = 0
    for i, g in enumerate(grades):
        if g:
            m |= 1 << i
    return m


class HyperOperationTable:
    """A total map from ``arity``-tuples of carrier elements to non-zero fuzzy subsets.

    Entries are stored for every ordered tuple, in lexicographic order of
    carrier indices, so non-commutative tables can be diagnosed.
    """

    def __init__(self, carrier: Carrier, arity: int, entries):
        if arity < 2:
            raise UsageError(f"arity must be at least 2, got {arity}")
        entries = tuple(entries)
        expected = len(carrier) ** arity
        if len(entries) != expected:
            raise UsageError(f"table of arity {arity} needs {expected} entries, got {len(entries)}")
        for pos, mu in enumerate(entries):
            if mu.carrier != carrier:
                raise UsageError("table entry lives on a different carrier")
            if not mu.is_nonzero():
                raise UsageError(f"entry {self._unflat_labels(carrier, arity, pos)} is the zero fuzzy subset")
        self.carrier = carrier
        self.arity = arity
        self.entries = entries
        self.masks = tuple(mu.mask for mu in entries)

    @staticmethod
    def _unflat_labels(carrier, arity, pos):
        k = len(carrier)
        idx = []
        for _ in range(arity):
            pos, r = divmod(pos, k)
            idx.append(r)
        return tuple(carrier.labels[i] for i in reversed(idx))

    @classmethod
    def from_function(cls, carrier: Carrier, arity: int, fn: Callable) -> "HyperOperationTable":
        """Tabulate ``fn(label_1, ..., label_arity) -> FuzzySubset``."""
        return cls(carrier, arity, (fn(*args) for args in itertools.product(carrier.labels, repeat=arity)))

    @classmethod
    def from_mapping(cls, carrier: Carrier, arity: int, mapping: Mapping) -> "HyperOperationTable":
        """Build from ``{label_tuple: FuzzySubset}``; every tuple must be present."""
        entries = []
        for args in itertools.product(carrier.labels, repeat=arity):
            try:
                entries.append(mapping[args])
            except KeyError:
                raise UsageError(f"table is not total: missing entry for {args}") from None
        extra = set(mapping) - set(itertools.product(carrier.labels, repeat=arity))
        if extra:
            raise UsageError(f"table has entries outside the carrier: {sorted(extra)[:3]}")
        return cls(carrier, arity, entries)

    def flat(self, idx) -> int:
        k = len(self.carrier)
        pos = 0
        for i in idx:
            pos = pos * k + i
        return pos

    def __getitem__(self, args) -> FuzzySubset:
        return self.entries[self.flat(self.carrier.index(a) for a in args)]

    def tuples(self):
        return itertools.product(self.carrier.labels, repeat=self.arity)

    def replace(self, args, mu: FuzzySubset) -> "HyperOperationTable":
        entries = list(self.entries)
        entries[self.flat(self.carrier.index(a) for a in args)] = mu
        return HyperOperationTable(self.carrier, self.arity, entries)

    def __eq__(self, other):
        return (isinstance(other, HyperOperationTable) and self.arity == other.arity
                and self.carrier == other.carrier and self.entries == other.entries)

    def __hash__(self):
        return hash((self.arity, self.entries))

    def __repr__(self):
        return f"HyperOperationTable(arity={self.arity}, size={len(self.carrier)})"


# -- support-level and grade-level evaluation on bitmask arguments ---------

def _flats(k: int, arg_masks) -> list:
    flats = [0]
    for m in arg_masks:
        els = bits(m)
        flats = [p * k + a for p in flats for a in els]
    return flats


def ext_mask(table: HyperOperationTable, arg_masks) -> int:
    """Support of the extension of ``table`` to crisp arguments given as bitmasks."""
    masks = table.masks
    out = 0
    for p in _flats(len(table.carrier), arg_masks):
        out |= masks[p]
    return out


def ext_grades(table: HyperOperationTable, arg_masks) -> tuple:
    """Grades of the extension of ``table``; only argument supports matter."""
    entries = table.entries
    flats = _flats(len(table.carrier), arg_masks)
    if len(flats) == 1:
        return entries[flats[0]].grades
    return tuple(max(gs) for gs in zip(*(entries[p].grades for p in flats)))


def _coerce(carrier: Carrier, arg) -> int:
    if isinstance(arg, FuzzySubset):
        if arg.carrier != carrier:
            raise UsageError("argument lives on a different carrier")
        m = arg.mask
    elif isinstance(arg, (set, frozenset)):
        m = carrier.mask(arg)
    else:
        m = 1 << carrier.index(arg)
    if not m:
        raise DomainError("extension is undefined on a zero fuzzy subset / empty set")
    return m


def extend(table: HyperOperationTable, args) -> FuzzySubset:
    """Extend ``table`` to fuzzy arguments: the join of entries over the product of supports.

    Each argument may be a :class:`FuzzySubset`, a set of labels (read as its
    characteristic function) or a single label (a characteristic singleton).
    """
    args = list(args)
    if len(args) != table.arity:
        raise UsageError(f"expected {table.arity} arguments, got {len(args)}")
    masks = [_coerce(table.carrier, a) for a in args]
    return FuzzySubset(table.carrier, ext_grades(table, masks))


# -- Krasner structures -----------------------------------------------------

@dataclass(frozen=True)
class KrasnerStructure:
    carrier: Carrier
    f: HyperOperationTable
    g: HyperOperationTable
    identity: object
    negation: tuple
    scalar_identity: Optional[object] = None
    equality_mode: str = SUPPORT
    name: str = field(default="", compare=False)
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        neg = self.negation
        if isinstance(neg, Mapping):
            neg = tuple(neg[a] if a in neg else _missing_neg(a) for a in self.carrier.labels)
        neg = tuple(neg)
        if len(neg) != len(self.carrier):
            raise UsageError("negation must assign an inverse to every element")
        for b in neg:
            self.carrier.index(b)
        object.__setattr__(self, "negation", neg)
        check_mode(self.equality_mode)
        if self.f.carrier != self.carrier or self.g.carrier != self.carrier:
            raise UsageError("operation tables live on a different carrier")
        self.carrier.index(self.identity)
        if self.scalar_identity is not None:
            self.carrier.index(self.scalar_identity)

    # index-level views used by the kernels
    @property
    def m(self) -> int:
        return self.f.arity

    @property
    def n(self) -> int:
        return self.g.arity

    @property
    def size(self) -> int:
        return len(self.carrier)

    @property
    def e(self) -> int:
        return self.carrier.index(self.identity)

    @property
    def ep(self) -> Optional[int]:
        if self.scalar_identity is None:
            return None
        return self.carrier.index(self.scalar_identity)

    @property
    def neg(self) -> tuple:
        v = self._cache.get("neg")
        if v is None:
            v = tuple(self.carrier.index(b) for b in self.negation)
            self._cache["neg"] = v
        return v

    def inverse(self, a):
        return self.negation[self.carrier.index(a)]

    def with_mode(self, mode: str) -> "KrasnerStructure":
        return dataclasses.replace(self, equality_mode=check_mode(mode))

    def renamed(self, name: str) -> "KrasnerStructure":
        return dataclasses.replace(self, name=name)

    def __repr__(self):
        label = self.name or "anonymous"
        return f"KrasnerStructure({label}, |G|={self.size}, m={self.m}, n={self.n})"


def _missing_neg(a):
    raise UsageError(f"negation has no image for {a!r}")


def iterated_g(R: KrasnerStructure, a, s: int) -> FuzzySubset:
    """The s-th g-power of ``a``.

    For ``s <= n`` this is ``g(a^(s), e'^(n-s))``; for ``s = l(n-1)+1 > n`` it is
    the l-fold nesting ``g(g(...g(a^(n))..., a^(n-1)), a^(n-1))``.
    """
    n = R.n
    if s < 1:
        raise UsageError("power must be a positive integer")
    if s <= n:
        if s < n and R.scalar_identity is None:
            raise UsageError(f"power {s} < n={n} needs a scalar identity to pad with")
        return extend(R.g, [a] * s + [R.scalar_identity] * (n - s))
    if (s - 1) % (n - 1):
        raise UsageError(f"power {s} > n={n} must be congruent to 1 mod {n - 1}")
    cur = extend(R.g, [a] * n)
    for _ in range((s - 1) // (n - 1) - 1):
        cur = extend(R.g, [cur] + [a] * (n - 1))
    return cur


# -- axiom checker ----------------------------------------------------------

AXIOMS = (
    "identity",
    "inverses",
    "f_commutative",
    "f_associative",
    "g_associative",
    "g_commutative",
    "distributive",
    "absorbing_zero",
    "scalar_identity",
)


@dataclass(frozen=True)
class AxiomVerdict:
    name: str
    ok: bool
    witness: Optional[dict] = None
    detail: str = ""
    lhs: Optional[FuzzySubset] = None
    rhs: Optional[FuzzySubset] = None

    def to_dict(self) -> dict:
        d = {"axiom": self.name, "ok": self.ok}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail:
            d["detail"] = self.detail
        for side in ("lhs", "rhs"):
            mu = getattr(self, side)
            if mu is not None:
                d[side] = [[a, format_grade(g)] for a, g in mu.items()]
        return d


@dataclass(frozen=True)
class AxiomReport:
    mode: str
    verdicts: tuple

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def __getitem__(self, name) -> AxiomVerdict:
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def failures(self) -> list:
        return [v for v in self.verdicts if not v.ok]

    def to_dict(self) -> dict:
        return {"mode": self.mode, "ok": self.ok, "axioms": [v.to_dict() for v in self.verdicts]}


class _Evaluator:
    """Evaluates table extensions at the precision an equality mode needs."""

    def __init__(self, mode):
        self.strict = mode == STRICT

    def __call__(self, table, masks):
        if self.strict:
            return ext_grades(table, masks)
        return ext_mask(table, masks)

    def supp(self, value) -> int:
        return grades_mask(value) if self.strict else value

    def fuzzy(self, carrier, value) -> FuzzySubset:
        if self.strict:
            return FuzzySubset(carrier, value)
        return characteristic(carrier, carrier.subset(value))


def _labels(R, idx):
    return [R.carrier.labels[i] for i in idx]


def check_budget(R: KrasnerStructure, budget: int = DEFAULT_BUDGET):
    cost = R.size ** (2 * max(R.m, R.n) - 1)
    if cost > budget:
        raise ResourceError(
            f"exhaustive check needs {R.size}^{2 * max(R.m, R.n) - 1} = {cost} tuple "
            f"evaluations, over the budget of {budget}")


def _check_identity(R, ev):
    k, e, f = R.size, R.e, R.f
    for a in range(k):
        got = ext_mask(f, [1 << a] + [1 << e] * (R.m - 1))
        if got != 1 << a:
            return AxiomVerdict("identity", False, {"args": _labels(R, [a] + [e] * (R.m - 1))},
                                f"supp = {sorted(R.carrier.subset(got))}, expected {{{R.carrier.labels[a]}}}")
    return AxiomVerdict("identity", True)


def _check_inverses(R, ev):
    k, m, neg, f = R.size, R.m, R.neg, R.f
    for a in range(k):
        if neg[neg[a]] != a:
            return AxiomVerdict("inverses", False, {"args": _labels(R, [a])},
                                "negation is not involutive")
    for t in itertools.product(range(k), repeat=m):
        out = ext_mask(f, [1 << x for x in t])
        for a in bits(out):
            for i in range(m):
                args = [1 << neg[x] for x in t]
                args[i] = 1 << a
                if not ext_mask(f, args) >> t[i] & 1:
                    return AxiomVerdict(
                        "inverses", False,
                        {"args": _labels(R, t), "element": R.carrier.labels[a], "position": i + 1},
                        f"{R.carrier.labels[t[i]]} not in the reversed hypersum")
    return AxiomVerdict("inverses", True)


def _check_commutative(R, ev, table, name):
    k = R.size
    canon = {}
    for t in itertools.product(range(k), repeat=table.arity):
        key = tuple(sorted(t))
        val = ev(table, [1 << x for x in t])
        ref = canon.setdefault(key, (t, val))
        if ref[1] != val:
            return AxiomVerdict(name, False, {"args": _labels(R, t), "against": _labels(R, ref[0])},
                                "entry differs from a permutation of its arguments",
                                lhs=ev.fuzzy(R.carrier, val), rhs=ev.fuzzy(R.carrier, ref[1]))
    return AxiomVerdict(name, True)


def _check_associative(R, ev, table, name):
    k, r = R.size, table.arity
    for t in itertools.product(range(k), repeat=2 * r - 1):
        single = [1 << x for x in t]
        first = None
        for i in range(r):
            inner = ev.supp(ev(table, single[i:i + r]))
            val = ev(table, single[:i] + [inner] + single[i + r:])
            if first is None:
                first = val
            elif val != first:
                return AxiomVerdict(name, False, {"args": _labels(R, t), "position": i + 1},
                                    f"bracketing at position {i + 1} differs from position 1",
                                    lhs=ev.fuzzy(R.carrier, first), rhs=ev.fuzzy(R.carrier, val))
    return AxiomVerdict(name, True)


def _check_distributive(R, ev):
    k, m, n, f, g = R.size, R.m, R.n, R.f, R.g
    for t in itertools.product(range(k), repeat=n - 1 + m):
        x = [1 << v for v in t[:n - 1]]
        a = [1 << v for v in t[n - 1:]]
        fa = ev.supp(ev(f, a))
        for i in range(n):
            lhs = ev(g, x[:i] + [fa] + x[i:])
            prods = [ev.supp(ev(g, x[:i] + [aj] + x[i:])) for aj in a]
            rhs = ev(f, prods)
            if lhs != rhs:
                return AxiomVerdict(
                    "distributive", False,
                    {"outer": _labels(R, t[:n - 1]), "summands": _labels(R, t[n - 1:]), "position": i + 1},
                    "g over a hypersum differs from the hypersum of products",
                    lhs=ev.fuzzy(R.carrier, lhs), rhs=ev.fuzzy(R.carrier, rhs))
    return AxiomVerdict("distributive", True)


def _check_absorbing(R, ev):
    k, e = R.size, R.e
    for rest in itertools.product(range(k), repeat=R.n - 1):
        got = ext_mask(R.g, [1 << e] + [1 << v for v in rest])
        if got != 1 << e:
            return AxiomVerdict("absorbing_zero", False, {"args": _labels(R, (e,) + rest)},
                                f"supp = {sorted(R.carrier.subset(got))}, expected {{{R.identity}}}")
    return AxiomVerdict("absorbing_zero", True)


def _check_scalar(R, ev):
    if R.scalar_identity is None:
        return AxiomVerdict("scalar_identity", True, detail="absent")
    ep = R.ep
    for a in range(R.size):
        got = ext_mask(R.g, [1 << a] + [1 << ep] * (R.n - 1))
        if got != 1 << a:
            return AxiomVerdict("scalar_identity", False,
                                {"args": _labels(R, [a] + [ep] * (R.n - 1))},
                                f"supp = {sorted(R.carrier.subset(got))}")
    return AxiomVerdict("scalar_identity", True, detail="present")


def validate_structure(R: KrasnerStructure, mode: Optional[str] = None,
                       budget: int = DEFAULT_BUDGET) -> AxiomReport:
    """Exhaustively check every Krasner F^(m,n)-hyperring axiom on ``R``.

    Equalities between fuzzy sets are compared grade-by-grade in ``strict``
    mode and by support in ``support`` mode (defaults to ``R.equality_mode``).
    Each failing verdict carries the lexicographically first failing tuple.
    """
    mode = check_mode(mode or R.equality_mode)
    check_budget(R, budget)
    ev = _Evaluator(mode)
    verdicts = (
        _check_identity(R, ev),
        _check_inverses(R, ev),
        _check_commutative(R, ev, R.f, "f_commutative"),
        _check_associative(R, ev, R.f, "f_associative"),
        _check_associative(R, ev, R.g, "g_associative"),
        _check_commutative(R, ev, R.g, "g_commutative"),
        _check_distributive(R, ev),
        _check_absorbing(R, ev),
        _check_scalar(R, ev),
    )
    return AxiomReport(mode, verdicts)


def validate_hypergroup(R: KrasnerStructure, mode: Optional[str] = None) -> AxiomReport:
    """Only the canonical F^m-hypergroup axioms of (R, f)."""
    mode = check_mode(mode or R.equality_mode)
    ev = _Evaluator(mode)
    return AxiomReport(mode, (
        _check_identity(R, ev),
        _check_inverses(R, ev),
        _check_commutative(R, ev, R.f, "f_commutative"),
        _check_associative(R, ev, R.f, "f_associative"),
    ))


def is_valid(R: KrasnerStructure, mode: Optional[str] = None) -> bool:
    key = ("valid", mode or R.equality_mode)
    if key not in R._cache:
        R._cache[key] = validate_structure(R, mode).ok
    return R._cache[key]


def require_valid(R: KrasnerStructure) -> KrasnerStructure:
    report = validate_structure(R)
    if not report.ok:
        bad = ", ".join(v.name for v in report.failures())
        raise UsageError(f"{R!r} is not a Krasner F^(m,n)-hyperring ({report.mode} mode): fails {bad}")
    return R


def find_scalar_identity(carrier: Carrier, g: HyperOperationTable) -> Optional[object]:
    """First element e' (in carrier order) with supp(g(a, e'^(n-1))) = {a} for all a."""
    k, n = len(carrier), g.arity
    for ep in range(k):
        if all(ext_mask(g, [1 << a] + [1 << ep] * (n - 1)) == 1 << a for a in range(k)):
            return carrier.labels[ep]
    return None


def singleton_table(carrier: Carrier, arity: int, fn: Callable, t) -> HyperOperationTable:
    """A table whose every entry is the fuzzy point ``fn(args)`` at grade ``t``."""
    from .fuzzy import fuzzy_point
    return HyperOperationTable.from_function(carrier, arity, lambda *args: fuzzy_point(carrier, fn(*args), t))


__all__ = [
    "AXIOMS", "AxiomReport", "AxiomVerdict", "DEFAULT_BUDGET", "HyperOperationTable",
    "KrasnerStructure", "bits", "check_budget", "ext_grades", "ext_mask", "extend",
    "find_scalar_identity", "is_valid", "iterated_g", "require_valid", "singleton_table",
    "validate_hypergroup", "validate_structure",
]
