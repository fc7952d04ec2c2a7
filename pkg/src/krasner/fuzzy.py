"""Fuzzy subsets of a finite carrier with exact rational grades.

Grades are :class:`fractions.Fraction` values in ``[0, 1]``. Subsets are dense:
one grade per carrier element, in carrier order. Crisp subsets are handled as
``frozenset`` of labels at the API and as integer bitmasks internally.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .errors import UsageError

GradeLike = Union[Fraction, int, str]

STRICT = "strict"
SUPPORT = "support"
MODES = (STRICT, SUPPORT)

ZERO = Fraction(0)
ONE = Fraction(1)


def grade(value: GradeLike) -> Fraction:
    """Coerce ``value`` to an exact grade, rejecting anything outside [0, 1].

    Floats are refused: they would make axiom checks inexact.
    """
    if isinstance(value, float):
        raise UsageError(f"grades must be exact, got float {value!r}")
    if isinstance(value, str):
        try:
            g = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"malformed grade {value!r}") from exc
    else:
        g = Fraction(value)
    if not ZERO <= g <= ONE:
        raise UsageError(f"grade {g} outside [0, 1]")
    return g


def format_grade(g: Fraction) -> str:
    return f"{g.numerator}/{g.denominator}"


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise UsageError(f"unknown equality mode {mode!r}; expected one of {MODES}")
    return mode


@dataclass(frozen=True)
class Carrier:
    labels: tuple
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise UsageError("a carrier needs at least one element")
        if len(set(labels)) != len(labels):
            raise UsageError(f"duplicate carrier labels in {labels!r}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(labels)})

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self._index

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UsageError(f"{label!r} is not an element of the carrier") from None

    def mask(self, labels: Iterable) -> int:
        m = 0
        for a in labels:
            m |= 1 << self.index(a)
        return m

    def subset(self, mask: int) -> frozenset:
        return frozenset(a for i, a in enumerate(self.labels) if mask >> i & 1)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1


@dataclass(frozen=True)
class FuzzySubset:
    carrier: Carrier
    grades: tuple

    def __post_init__(self):
        grades = tuple(grade(g) for g in self.grades)
        if len(grades) != len(self.carrier):
            raise UsageError(
                f"expected {len(self.carrier)} grades, got {len(grades)}")
        object.__setattr__(self, "grades", grades)

    @classmethod
    def from_mapping(cls, carrier: Carrier, mapping) -> "FuzzySubset":
        """Build from ``{label: grade}``; unlisted elements get grade 0."""
        grades = [ZERO] * len(carrier)
        for a, g in dict(mapping).items():
            grades[carrier.index(a)] = grade(g)
        return cls(carrier, tuple(grades))

    def __getitem__(self, label) -> Fraction:
        return self.grades[self.carrier.index(label)]

    @property
    def mask(self) -> int:
        m = 0
        for i, g in enumerate(self.grades):
            if g:
                m |= 1 << i
        return m

    def support(self) -> frozenset:
        return support(self)

    def is_nonzero(self) -> bool:
        return any(self.grades)

    def items(self):
        """Non-zero ``(label, grade)`` pairs in carrier order."""
        return [(a, g) for a, g in zip(self.carrier.labels, self.grades) if g]

    def __repr__(self):
        body = ", ".join(f"{a}:{format_grade(g)}" for a, g in self.items())
        return f"FuzzySubset({{{body}}})"


def support(mu: FuzzySubset) -> frozenset:
    return frozenset(a for a, g in zip(mu.carrier.labels, mu.grades) if g > 0)


def zero(carrier: Carrier) -> FuzzySubset:
    return FuzzySubset(carrier, (ZERO,) * len(carrier))


def join(mus) -> FuzzySubset:
    """Pointwise maximum of a non-empty family of fuzzy subsets."""
    mus = list(mus)
    if not mus:
        raise UsageError("join of an empty family is undefined")
    carrier = mus[0].carrier
    for mu in mus[1:]:
        if mu.carrier != carrier:
            raise UsageError("join arguments live on different carriers")
    return FuzzySubset(carrier, tuple(max(gs) for gs in zip(*(mu.grades for mu in mus))))


def threshold_set(carrier: Carrier, H: Iterable, t: GradeLike) -> FuzzySubset:
    """The fuzzy subset with grade ``t`` on ``H`` and 0 elsewhere."""
    t = grade(t)
    H = frozenset(H)
    if H and t == 0:
        raise UsageError("threshold must be positive for a non-empty set")
    m = carrier.mask(H)
    return FuzzySubset(carrier, tuple(t if m >> i & 1 else ZERO for i in range(len(carrier))))


def characteristic(carrier: Carrier, H: Iterable) -> FuzzySubset:
    return threshold_set(carrier, H, ONE)


def fuzzy_point(carrier: Carrier, x, t: GradeLike) -> FuzzySubset:
    return threshold_set(carrier, {x}, t)


def equal(mu: FuzzySubset, nu: FuzzySubset, mode: str = SUPPORT) -> bool:
    check_mode(mode)
    if mu.carrier != nu.carrier:
        raise UsageError("cannot compare fuzzy subsets on different carriers")
    if mode == STRICT:
        return mu.grades == nu.grades
    return mu.mask == nu.mask


def grades_from_mask(mask: int, size: int, t: Fraction = ONE) -> tuple:
    return tuple(t if mask >> i & 1 else ZERO for i in range(size))
