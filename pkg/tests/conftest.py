from fractions import Fraction

import hypothesis
import pytest

from krasner.corpus import corpus, lift

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("ci")


def S(*labels):
    """Label set from ints or strings: S(0, 2, 4) == frozenset({'0', '2', '4'})."""
    return frozenset(str(a) for a in labels)


@pytest.fixture(scope="session")
def z6():
    return lift(6, t1=Fraction(1, 2), t2=Fraction(1, 3))


@pytest.fixture(scope="session")
def z12():
    return lift(12)


@pytest.fixture(scope="session")
def all_structures():
    return corpus()
