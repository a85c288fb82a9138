from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from lincode.errors import DomainError, TrivialCodeError


@dataclass(frozen=True)
class WeightDistribution:
    """Coefficients A_0..A_n of a weight enumerator."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficients, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("weight counts must be nonnegative")

    @classmethod
    def from_mapping(cls, n: int, coefficients: dict[int, int]) -> WeightDistribution:
        counts = [0] * (n + 1)
        for w, c in coefficients.items():
            counts[w] = c
        return cls(n, tuple(counts))

    @property
    def total(self) -> int:
        return sum(self.counts)

    def nonzero(self) -> list[tuple[int, int]]:
        """(w, A_w) pairs with A_w > 0, ascending w."""
        return [(w, c) for w, c in enumerate(self.counts) if c]

    def _nonzero_codeword_weights(self) -> list[int]:
        weights = [w for w, c in enumerate(self.counts) if c and w > 0]
        if not weights:
            raise TrivialCodeError("trivial code has no nonzero codeword")
        return weights

    @property
    def min_distance(self) -> int:
        return self._nonzero_codeword_weights()[0]

    @property
    def max_weight(self) -> int:
        return self._nonzero_codeword_weights()[-1]

    def is_symmetric(self) -> bool:
        return self.counts == self.counts[::-1]

    def __getitem__(self, w: int) -> int:
        return self.counts[w] if 0 <= w <= self.n else 0

    def to_dict(self) -> dict:
        return {"n": self.n, "counts": {str(w): c for w, c in self.nonzero()}}


@dataclass(frozen=True)
class DistributionComparison:
    """Outcome of comparing two weight distributions.

    Different distributions certify that two codes are not equivalent;
    equal ones prove nothing either way.
    """

    equal: bool
    min_distance: tuple[int, int]
    max_weight: tuple[int, int]
    differing_weights: tuple[int, ...] = ()

    @property
    def distinguished(self) -> bool:
        return not self.equal

    def to_dict(self) -> dict:
        return {
            "equal": self.equal,
            "distinguished": self.distinguished,
            "min_distance": list(self.min_distance),
            "max_weight": list(self.max_weight),
            "differing_weights": list(self.differing_weights),
        }


@dataclass(frozen=True)
class ExtensionRequirements:
    """What a base code must satisfy to reach [n, k, d] by the all-one extension."""

    n: int
    k: int
    d: int
    pad: int
    base_n: int
    base_k: int
    max_weight: int

    def to_dict(self) -> dict:
        return {
            "target": [self.n, self.k, self.d],
            "pad": self.pad,
            "base": [self.base_n, self.base_k, self.d],
            "base_max_weight": self.max_weight,
        }


@dataclass(frozen=True)
class SelectionReport:
    """Exact statistics of an orbit selection, computed without building the code."""

    selection: tuple[int, ...]
    total_length: int
    min_row_weight: int
    max_row_weight: int
    feasible: bool
    rank_ok: bool

    def to_dict(self) -> dict:
        return {
            "total_length": self.total_length,
            "min_row_weight": self.min_row_weight,
            "max_row_weight": self.max_row_weight,
            "feasible": self.feasible,
            "rank_ok": self.rank_ok,
            "selection": {str(j): x for j, x in enumerate(self.selection) if x},
        }


DOMAINS = ("binary", "bounded")


@dataclass(frozen=True)
class SearchConfig:
    """Knobs of the orbit-selection local search.

    ``max_iterations`` is the move budget of a single restart. ``cap`` is the
    largest multiplicity allowed in the bounded domain.
    """

    seed: int = 0
    max_iterations: int = 100_000
    restarts: int = 10
    domain: str = "binary"
    cap: int = 1
    length_penalty: Fraction = Fraction(1)
    tabu_tenure: int = 7
    workers: int = 1

    def __post_init__(self) -> None:
        if self.domain not in DOMAINS:
            raise DomainError(f"domain must be one of {DOMAINS}, got {self.domain!r}")
        if self.domain == "binary" and self.cap != 1:
            object.__setattr__(self, "cap", 1)
        if self.cap < 1:
            raise DomainError("multiplicity cap must be at least 1")
        if not 0 <= self.seed < 1 << 64:
            raise DomainError("seed must be a 64-bit unsigned integer")
        if self.max_iterations < 0 or self.restarts < 1:
            raise DomainError("need max_iterations >= 0 and restarts >= 1")
        penalty = Fraction(self.length_penalty)
        if penalty <= 0:
            raise DomainError("length penalty must be positive")
        object.__setattr__(self, "length_penalty", penalty)
        if self.tabu_tenure < 0 or self.workers < 1:
            raise DomainError("need tabu_tenure >= 0 and workers >= 1")


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" or "exhausted"
    best_selection: tuple[int, ...]
    best_cost: Fraction
    iterations_used: int
    restart_index: int = 0
    restart_costs: tuple[Fraction, ...] = field(default=(), compare=False)

    @property
    def found(self) -> bool:
        return self.status == "found"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "best_cost": str(self.best_cost),
            "iterations_used": self.iterations_used,
            "restart_index": self.restart_index,
            "selection": {str(j): x for j, x in enumerate(self.best_selection) if x},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)
