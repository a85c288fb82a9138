"""Seeded local search for feasible orbit selections.

cost(x) = sum_i max(0, d - w_i) + sum_i max(0, w_i - d_max) + lambda * |L(x) - n|

with w = A x and L(x) = sum_j len_j x_j. Every move changes one x_j by +-1
(a flip in the 0/1 domain). The move with the smallest cost change among
the non-tabu ones is taken, ties broken uniformly; a variable just moved is
tabu for ``tabu_tenure`` iterations unless moving it beats the best cost of
the restart. Each restart begins from a random selection of roughly the
target length and draws from its own PCG64 stream seeded with
``seed + restart_index``.

Costs are kept as integers scaled by the denominator of lambda.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from lincode.errors import ConsistencyError, DimensionError, DomainError
from lincode.models import SearchConfig, SearchResult
from lincode.system import DiophantineSystem, evaluate_selection

logger = logging.getLogger(__name__)

DRIFT_CHECK_INTERVAL = 1 << 12


def _row_penalty(system: DiophantineSystem, w: np.ndarray) -> np.ndarray:
    """Per-column penalty of a rows x m block of row weights (or a single vector)."""
    pen = np.maximum(0, system.d - w)
    if system.d_max is not None:
        pen = pen + np.maximum(0, w - system.d_max)
    return pen.sum(axis=0)


def selection_cost(
    system: DiophantineSystem, x: Sequence[int], length_penalty: Fraction = Fraction(1)
) -> Fraction:
    """Full evaluation of cost(x)."""
    arr = np.asarray(x, dtype=np.int64)
    if arr.shape != (system.num_cols,):
        raise DimensionError(f"selection has {arr.size} entries, system has {system.num_cols}")
    w = system.A @ arr
    length = int(system.lengths @ arr)
    return int(_row_penalty(system, w)) + Fraction(length_penalty) * abs(length - system.n)


def incremental_cost_delta(
    system: DiophantineSystem,
    x: Sequence[int],
    j: int,
    direction: int,
    *,
    length_penalty: Fraction = Fraction(1),
    cap: int = 1,
    weights: np.ndarray | None = None,
) -> Fraction:
    """cost(x with x_j += direction) - cost(x), touching only column j of A.

    ``weights`` may carry the cached row weights A x.
    """
    if direction not in (1, -1):
        raise DomainError(f"direction must be +1 or -1, got {direction}")
    if not 0 <= j < system.num_cols:
        raise DimensionError(f"no column orbit {j}")
    arr = np.asarray(x, dtype=np.int64)
    new_value = int(arr[j]) + direction
    if not 0 <= new_value <= cap:
        raise DomainError(f"x_{j} would leave the domain 0..{cap}")

    w = system.A @ arr if weights is None else weights
    column = system.A[:, j]
    row_delta = int(_row_penalty(system, w + direction * column) - _row_penalty(system, w))
    length = int(system.lengths @ arr)
    step = direction * int(system.lengths[j])
    len_delta = abs(length + step - system.n) - abs(length - system.n)
    return row_delta + Fraction(length_penalty) * len_delta


@dataclass
class _Walk:
    """Mutable state of one restart; row weights are maintained incrementally."""

    system: DiophantineSystem
    x: np.ndarray
    w: np.ndarray
    length: int
    p: int  # length_penalty numerator
    q: int  # length_penalty denominator

    def scaled_cost(self) -> int:
        return self.q * int(_row_penalty(self.system, self.w)) + self.p * abs(self.length - self.system.n)

    def scaled_deltas(self, direction: int) -> np.ndarray:
        """Scaled cost change of moving every column by ``direction``."""
        s = self.system
        base = _row_penalty(s, self.w)
        moved = _row_penalty(s, self.w[:, None] + direction * s.A)
        lens = np.abs(self.length + direction * s.lengths - s.n) - abs(self.length - s.n)
        return self.q * (moved - base) + self.p * lens

    def apply(self, j: int, direction: int) -> None:
        self.x[j] += direction
        self.w += direction * self.system.A[:, j]
        self.length += direction * int(self.system.lengths[j])

    def check_drift(self) -> None:
        fresh = self.system.A @ self.x
        if not np.array_equal(fresh, self.w) or int(self.system.lengths @ self.x) != self.length:
            raise ConsistencyError("incremental row weights drifted from A x")


def _random_start(system: DiophantineSystem, cap: int, rng: np.random.Generator) -> np.ndarray:
    """Random orbits added in shuffled order while the length stays <= n."""
    x = np.zeros(system.num_cols, dtype=np.int64)
    length = 0
    for j in rng.permutation(system.num_cols):
        mult = int(rng.integers(1, cap + 1))
        while mult and length + system.lengths[j] <= system.n:
            x[j] += 1
            length += int(system.lengths[j])
            mult -= 1
    return x


def _run_restart(
    system: DiophantineSystem, config: SearchConfig, index: int
) -> tuple[tuple[int, ...], int, int]:
    """One restart: (best selection, best scaled cost, moves made)."""
    rng = np.random.Generator(np.random.PCG64(config.seed + index))
    lam = config.length_penalty
    x = _random_start(system, config.cap, rng)
    walk = _Walk(system, x, system.A @ x, int(system.lengths @ x), lam.numerator, lam.denominator)

    cost = walk.scaled_cost()
    best_cost, best_x = cost, tuple(int(v) for v in x)
    last_moved = np.full(system.num_cols, -(config.tabu_tenure + 1), dtype=np.int64)
    moves = 0

    while cost > 0 and moves < config.max_iterations:
        ups = walk.scaled_deltas(+1)
        downs = walk.scaled_deltas(-1)
        valid_up = walk.x < config.cap
        valid_down = walk.x > 0
        deltas = np.concatenate([ups, downs])
        valid = np.concatenate([valid_up, valid_down])

        tabu = np.tile(moves - last_moved <= config.tabu_tenure, 2)
        allowed = valid & (~tabu | (cost + deltas < best_cost))
        if not allowed.any():
            allowed = valid
        if not allowed.any():
            break

        masked = np.where(allowed, deltas, np.iinfo(np.int64).max)
        ties = np.flatnonzero(masked == masked.min())
        pick = int(ties[rng.integers(len(ties))])
        j, direction = (pick, +1) if pick < system.num_cols else (pick - system.num_cols, -1)

        walk.apply(j, direction)
        cost += int(deltas[pick])
        last_moved[j] = moves
        moves += 1

        if moves % DRIFT_CHECK_INTERVAL == 0:
            walk.check_drift()
            if walk.scaled_cost() != cost:
                raise ConsistencyError("incremental cost drifted from full evaluation")
        if cost < best_cost:
            best_cost, best_x = cost, tuple(int(v) for v in walk.x)

    logger.debug("Restart %d: best scaled cost %d after %d moves", index, best_cost, moves)
    return best_x, best_cost, moves


def search(system: DiophantineSystem, config: SearchConfig = SearchConfig()) -> SearchResult:
    """Look for a zero-cost selection over ``config.restarts`` restarts.

    With several workers every restart runs to completion and the found
    selection with the smallest restart index is reported, which is exactly
    what a sequential run returns.
    """
    scale = config.length_penalty.denominator

    if config.workers > 1 and config.restarts > 1:
        with ProcessPoolExecutor(max_workers=min(config.workers, config.restarts)) as pool:
            outcomes = list(pool.map(
                _run_restart,
                [system] * config.restarts,
                [config] * config.restarts,
                range(config.restarts),
            ))
    else:
        outcomes = []
        for index in range(config.restarts):
            outcomes.append(_run_restart(system, config, index))
            if outcomes[-1][1] == 0:
                break

    found = next((i for i, (_, c, _) in enumerate(outcomes) if c == 0), None)
    if found is not None:
        chosen = found
        considered = outcomes[: found + 1]
    else:
        chosen = min(range(len(outcomes)), key=lambda i: (outcomes[i][1], i))
        considered = outcomes

    best_x, best_scaled, _ = outcomes[chosen]
    result = SearchResult(
        status="found" if found is not None else "exhausted",
        best_selection=best_x,
        best_cost=Fraction(best_scaled, scale),
        iterations_used=sum(m for _, _, m in considered),
        restart_index=chosen,
        restart_costs=tuple(Fraction(c, scale) for _, c, _ in considered),
    )

    if result.found and not evaluate_selection(system, best_x).feasible:
        raise ConsistencyError("zero-cost selection failed evaluation")
    logger.info(
        "Search %s: cost %s after %d moves (restart %d)",
        result.status, result.best_cost, result.iterations_used, chosen,
    )
    return result
