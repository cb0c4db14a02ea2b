from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from essring import (
    Config,
    RingElement,
    RingPresentation,
    ScalarSpec,
    full_matrix,
    grassmann,
    noninvariant,
    triangular,
)

F2 = ScalarSpec.mod(2)
F3 = ScalarSpec.mod(3)
Z = ScalarSpec.integers()
Q = ScalarSpec.rationals()

# basis positions in the noninvariant rings, besides the identity at 0
A, B, C = 1, 2, 3


def d_index(ring: RingPresentation) -> int:
    return ring.rank - 3


def e_index(ring: RingPresentation) -> int:
    return ring.rank - 2


def f_index(ring: RingPresentation) -> int:
    return ring.rank - 1


def coords(ring: RingPresentation, *indices: int) -> tuple:
    """The coordinates of the sum of some basis elements."""
    out = [ring.scalar.zero] * ring.rank
    for index in indices:
        out[index] += ring.scalar.one
    return ring.scalar.reduce(out)


def element_of(ring: RingPresentation, bound: int = 4) -> st.SearchStrategy[RingElement]:
    return st.lists(st.integers(-bound, bound), min_size=ring.rank, max_size=ring.rank).map(ring.element)


def brute_elements(ring: RingPresentation) -> list[RingElement]:
    m = ring.scalar.modulus
    return [ring.element(list(c)) for c in itertools.product(range(m), repeat=ring.rank)]


@pytest.fixture(scope="session")
def ring7() -> RingPresentation:
    return noninvariant(7)


@pytest.fixture(scope="session")
def ring7_f2() -> RingPresentation:
    return noninvariant(7, F2)


@pytest.fixture(scope="session")
def ring8() -> RingPresentation:
    return noninvariant(8)


@pytest.fixture(scope="session")
def grassmann33() -> RingPresentation:
    return grassmann(3, 3)


@pytest.fixture(scope="session")
def grassmann23() -> RingPresentation:
    return grassmann(2, 3)


@pytest.fixture(scope="session")
def matrix2() -> RingPresentation:
    return full_matrix(2, F2)


@pytest.fixture(scope="session")
def triangular2() -> RingPresentation:
    return triangular(2, F2)


@pytest.fixture
def config() -> Config:
    return Config(samples=40, witness_trials=40)
