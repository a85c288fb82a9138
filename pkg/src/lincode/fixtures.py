"""Matrices and weight distributions shipped as package data."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from lincode.code import parse_distribution
from lincode.gf2 import BitMatrix
from lincode.matfile import parse_mat
from lincode.models import WeightDistribution

DATA_PACKAGE = "lincode.data"

GAMMA47_FILE = "gamma47.mat"
M15_FILE = "m15.mat"
GAMMA47_DIST_FILE = "gamma47.dist"
EXTENDED48_DIST_FILE = "extended48.dist"

SHA256 = {
    GAMMA47_FILE: "13acdc30b2fb877c796267420742dda92eeaea85332b9389296aa761144c92a1",
    M15_FILE: "683b4671dfc6d4881af2e6ca3b8e5d75463284008a424a0508e8473fd7cbe955",
    GAMMA47_DIST_FILE: "a9738063faaca11f27137ec89ce7f24120f21e52b90e87acc712866ccc6df2e8",
    EXTENDED48_DIST_FILE: "29fb130b357f49e269e9e38a35e3ef4c8bda471490fe2884ebdccc2ada071900",
}


def read_data(name: str) -> str:
    return resources.files(DATA_PACKAGE).joinpath(name).read_text(encoding="utf-8")


def checksum(name: str) -> str:
    data = resources.files(DATA_PACKAGE).joinpath(name).read_bytes()
    return hashlib.sha256(data).hexdigest()


@dataclass(frozen=True)
class FixtureSet:
    gamma47: BitMatrix
    m15: BitMatrix
    gamma47_distribution: WeightDistribution
    extended48_distribution: WeightDistribution


@lru_cache(maxsize=1)
def load_fixtures() -> FixtureSet:
    return FixtureSet(
        gamma47=parse_mat(read_data(GAMMA47_FILE)),
        m15=parse_mat(read_data(M15_FILE)),
        gamma47_distribution=parse_distribution(read_data(GAMMA47_DIST_FILE), 47),
        extended48_distribution=parse_distribution(read_data(EXTENDED48_DIST_FILE), 48),
    )
