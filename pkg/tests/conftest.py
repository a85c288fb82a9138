from __future__ import annotations

import numpy as np
import pytest

from lincode.code import LinearCode
from lincode.fixtures import load_fixtures
from lincode.gf2 import BitMatrix, rank
from lincode.orbits import generate_cyclic, orbit_partition

# Companion matrix of x^3 + x + 1 (a Singer cycle of order 7 on GF(2)^3).
COMPANION3 = BitMatrix.from_rows(["001", "101", "010"])
SWAP2 = BitMatrix.from_rows(["01", "10"])

HAMMING_ROWS = ["1000011", "0100101", "0010110", "0001111"]


def random_matrix(rng: np.random.Generator, rows: int, cols: int) -> BitMatrix:
    return BitMatrix.from_array(rng.integers(0, 2, size=(rows, cols)))


def random_code(rng: np.random.Generator, k: int, n: int) -> LinearCode:
    """A uniformly drawn full-rank k x n generator."""
    while True:
        gen = random_matrix(rng, k, n)
        if rank(gen) == k:
            return LinearCode(gen)


def random_invertible(rng: np.random.Generator, k: int) -> BitMatrix:
    while True:
        m = random_matrix(rng, k, k)
        if rank(m) == k:
            return m


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240917)


@pytest.fixture(scope="session")
def shipped():
    return load_fixtures()


@pytest.fixture(scope="session")
def gamma47(shipped) -> LinearCode:
    return LinearCode(shipped.gamma47)


@pytest.fixture(scope="session")
def m15_group(shipped):
    return generate_cyclic(shipped.m15)


@pytest.fixture(scope="session")
def m15_partition(m15_group):
    return orbit_partition(m15_group)
