"""Cyclic matrix groups and their orbits on the nonzero vectors of GF(2)^k.

A vector is identified with its packed integer code 1..2^k-1 (bit i = entry
i). Orbit ids are assigned in ascending order of the orbit's smallest code,
which is also its canonical representative.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from lincode.errors import ConsistencyError, DimensionError, DomainError, EnumerationTooLarge
from lincode.gf2 import BitMatrix, action_table, matrix_order, matrix_power, nullity

logger = logging.getLogger(__name__)

ORBIT_BUDGET = 24


@dataclass(frozen=True)
class MatrixGroup:
    """A finite group of invertible k x k matrices, identity first."""

    k: int
    elements: tuple[BitMatrix, ...]
    generator: BitMatrix | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def transpose(self) -> MatrixGroup:
        gen = self.generator.transpose() if self.generator is not None else None
        return MatrixGroup(self.k, tuple(g.transpose() for g in self.elements), gen)

    @classmethod
    def trivial(cls, k: int) -> MatrixGroup:
        return cls(k, (BitMatrix.identity(k),), BitMatrix.identity(k))


def generate_cyclic(m: BitMatrix) -> MatrixGroup:
    """The cyclic group <M> = {I, M, ..., M^(t-1)}."""
    t = matrix_order(m)
    elements = tuple(matrix_power(m, i) for i in range(t))
    logger.info("Generated cyclic group of order %d in GL(%d,2)", t, m.rows)
    return MatrixGroup(m.rows, elements, m)


# ---------------------------------------------------------------------------
# Orbits
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OrbitPartition:
    k: int
    orbit_of: np.ndarray  # int32, length 2^k; entry 0 (the zero vector) is -1
    reps: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def num_orbits(self) -> int:
        return len(self.reps)

    def orbit_id(self, v: int) -> int:
        if not 0 < v < 1 << self.k:
            raise DomainError(f"{v} is not a nonzero vector of GF(2)^{self.k}")
        return int(self.orbit_of[v])

    def members(self, orbit_id: int) -> list[int]:
        """Vectors of the orbit in ascending order."""
        return np.flatnonzero(self.orbit_of == orbit_id).tolist()

    def same_as(self, other: OrbitPartition) -> bool:
        return (
            self.k == other.k
            and self.reps == other.reps
            and self.sizes == other.sizes
            and bool(np.array_equal(self.orbit_of, other.orbit_of))
        )


def _generator_tables(group: MatrixGroup) -> list[list[int]]:
    # Closing under a generating set is enough; fall back to every element.
    gens = [group.generator] if group.generator is not None else list(group.elements)
    return [action_table(g).tolist() for g in gens]


def orbit_partition(
    group: MatrixGroup,
    *,
    visit_order: Iterable[int] | None = None,
    budget: int = ORBIT_BUDGET,
) -> OrbitPartition:
    """Partition the nonzero vectors of GF(2)^k into orbits.

    One sweep over a visited map of 2^k entries. ``visit_order`` only changes
    which vector starts each orbit; ids are renumbered by smallest member.
    """
    k = group.k
    if k > budget:
        raise EnumerationTooLarge(f"enumeration too large: 2^{k} vectors exceeds budget 2^{budget}")
    size = 1 << k
    tables = _generator_tables(group)
    visited = bytearray(size)
    orbits: list[list[int]] = []

    for start in (visit_order if visit_order is not None else range(1, size)):
        if start <= 0 or start >= size:
            raise DomainError(f"{start} is not a nonzero vector of GF(2)^{k}")
        if visited[start]:
            continue
        visited[start] = 1
        orbit = [start]
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for table in tables:
                w = table[v]
                if not visited[w]:
                    visited[w] = 1
                    orbit.append(w)
                    frontier.append(w)
        orbits.append(orbit)

    if sum(len(o) for o in orbits) != size - 1:
        raise DomainError("visit order does not cover every nonzero vector")

    orbits.sort(key=min)
    orbit_of = np.full(size, -1, dtype=np.int32)
    for idx, orbit in enumerate(orbits):
        orbit_of[orbit] = idx

    partition = OrbitPartition(
        k=k,
        orbit_of=orbit_of,
        reps=tuple(min(o) for o in orbits),
        sizes=tuple(len(o) for o in orbits),
    )
    logger.info("Partitioned %d vectors into %d orbits", size - 1, partition.num_orbits)
    return partition


def burnside_count(group: MatrixGroup) -> int:
    """Number of orbits on nonzero vectors: mean over g of (2^nullity(g - I) - 1)."""
    ident = BitMatrix.identity(group.k)
    fixed = sum((1 << nullity(g + ident)) - 1 for g in group.elements)
    count, rem = divmod(fixed, group.order)
    if rem:
        raise ConsistencyError(f"fixed-point total {fixed} not divisible by |G|={group.order}; not a group")
    return count


def format_partition(partition: OrbitPartition) -> str:
    """Lines 'orbit_id size rep_hex'."""
    return "".join(
        f"{j} {size} {rep:x}\n"
        for j, (size, rep) in enumerate(zip(partition.sizes, partition.reps))
    )


# ---------------------------------------------------------------------------
# Generator-matrix columns
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ColumnDecomposition:
    """Which orbits the columns of a generator matrix fall into.

    ``whole[j]`` is the common multiplicity m when the columns in orbit j are
    exactly m copies of the whole orbit, else None.
    """

    counts: dict[int, int]
    whole: dict[int, int | None]
    total_columns: int

    @property
    def orbit_count(self) -> int:
        return len(self.counts)

    @property
    def is_union_of_orbits(self) -> bool:
        return all(m is not None for m in self.whole.values())

    def selection(self, num_orbits: int) -> tuple[int, ...]:
        """Multiplicity vector x with x_j = m for whole orbits."""
        if not self.is_union_of_orbits:
            raise DomainError("columns are not a union of whole orbits")
        x = [0] * num_orbits
        for j, m in self.whole.items():
            x[j] = m
        return tuple(x)

    def summary(self) -> str:
        whole = sum(1 for m in self.whole.values() if m is not None)
        return (
            f"{self.total_columns} columns touch {self.orbit_count} orbits, "
            f"{whole} covered as whole orbits"
        )

    def to_dict(self) -> dict:
        return {
            "total_columns": self.total_columns,
            "orbits": {
                str(j): {"columns": c, "whole_multiplicity": self.whole[j]}
                for j, c in sorted(self.counts.items())
            },
            "union_of_orbits": self.is_union_of_orbits,
        }


def column_orbit_decomposition(gen: BitMatrix, partition: OrbitPartition) -> ColumnDecomposition:
    if gen.rows != partition.k:
        raise DimensionError(f"generator has {gen.rows} rows, partition is for k={partition.k}")

    columns = gen.columns()
    for j, c in enumerate(columns):
        if c == 0:
            raise DomainError(f"column {j} is zero")

    per_vector = Counter(columns)
    counts: Counter[int] = Counter(partition.orbit_id(c) for c in columns)
    whole: dict[int, int | None] = {}
    for j in sorted(counts):
        mults = {per_vector.get(v, 0) for v in partition.members(j)}
        whole[j] = mults.pop() if len(mults) == 1 else None

    return ColumnDecomposition(counts=dict(sorted(counts.items())), whole=whole, total_columns=len(columns))
