"""Orbit-count feasibility system for codes with a prescribed automorphism group.

Columns of the generator matrix are chosen as whole orbits of G on GF(2)^k,
orbit j taken x_j times. A message v then has codeword weight
sum_j A[v][j] * x_j, where A[v][j] counts the vectors c of orbit j with
<v, c> = 1. Since <v, M c> = <M^T v, c>, A[v][j] only depends on the orbit
of v under the transposed group, so one row per transposed orbit suffices.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from lincode.code import LinearCode, weight_distribution
from lincode.errors import (
    ConsistencyError,
    DimensionError,
    DomainError,
    EnumerationTooLarge,
    FormatError,
    RankDeficientError,
)
from lincode.gf2 import MAX_BITS, BitMatrix, rank
from lincode.models import SelectionReport
from lincode.orbits import MatrixGroup, OrbitPartition, orbit_partition

logger = logging.getLogger(__name__)

SYSTEM_BUDGET = 20
_BATCH_ELEMENTS = 1 << 22  # cells of the parity block processed at once


@dataclass(frozen=True, eq=False)
class DiophantineSystem:
    k: int
    n: int
    d: int
    d_max: int | None
    A: np.ndarray  # int64, rows x cols
    col_reps: tuple[int, ...]
    lengths: np.ndarray  # int64, one per column orbit
    row_reps: tuple[int, ...]
    col_orbits: OrbitPartition | None = None
    row_orbits: OrbitPartition | None = None

    @property
    def num_rows(self) -> int:
        return int(self.A.shape[0])

    @property
    def num_cols(self) -> int:
        return int(self.A.shape[1])

    def column_members(self, j: int) -> list[int]:
        """Vectors of column orbit j, ascending."""
        if self.col_orbits is not None:
            return self.col_orbits.members(j)
        if self.lengths[j] == 1:
            return [self.col_reps[j]]
        raise DomainError(f"members of column orbit {j} unknown; attach the group first")

    def same_as(self, other: DiophantineSystem) -> bool:
        return (
            (self.k, self.n, self.d, self.d_max) == (other.k, other.n, other.d, other.d_max)
            and self.col_reps == other.col_reps
            and self.row_reps == other.row_reps
            and bool(np.array_equal(self.lengths, other.lengths))
            and bool(np.array_equal(self.A, other.A))
        )


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _check_targets(n: int, d: int, d_max: int | None) -> None:
    if n < 1 or d < 1:
        raise DomainError(f"need n >= 1 and d >= 1, got n={n} d={d}")
    if d_max is not None and not d <= d_max <= n:
        raise DomainError(f"need d <= d_max <= n, got d={d} d_max={d_max} n={n}")


def _coefficient_block(
    row_vectors: np.ndarray, order: np.ndarray, starts: np.ndarray
) -> np.ndarray:
    """A rows for a batch of message vectors.

    ``order`` lists the nonzero vectors grouped by column orbit and
    ``starts`` marks where each orbit begins in it.
    """
    parity = np.bitwise_count(row_vectors[:, None] & order[None, :]) & 1
    return np.add.reduceat(parity.astype(np.int64), starts, axis=1)


def coefficient_rows(
    vectors: Sequence[int], col_orbits: OrbitPartition, *, workers: int = 1
) -> np.ndarray:
    """A[v][j] for arbitrary message vectors v (not only representatives)."""
    k = col_orbits.k
    nonzero = np.arange(1, 1 << k, dtype=np.uint32)
    perm = np.argsort(col_orbits.orbit_of[1:], kind="stable")
    order = nonzero[perm]
    starts = np.concatenate([[0], np.cumsum(col_orbits.sizes)[:-1]]).astype(np.intp)

    vecs = np.asarray(vectors, dtype=np.uint32)
    batch = max(1, _BATCH_ELEMENTS >> k)
    chunks = [vecs[i:i + batch] for i in range(0, len(vecs), batch)]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(
                _coefficient_block, chunks,
                [order] * len(chunks), [starts] * len(chunks),
            ))
    else:
        blocks = [_coefficient_block(c, order, starts) for c in chunks]
    if not blocks:
        return np.zeros((0, col_orbits.num_orbits), dtype=np.int64)
    return np.vstack(blocks)


def build_system(
    group: MatrixGroup,
    n: int,
    d: int,
    d_max: int | None = None,
    *,
    workers: int = 1,
    budget: int = SYSTEM_BUDGET,
) -> DiophantineSystem:
    k = group.k
    if k < 1:
        raise DomainError("dimension must be at least 1")
    if k > budget:
        raise EnumerationTooLarge(f"enumeration too large: k={k} exceeds budget {budget}")
    _check_targets(n, d, d_max)

    col_orbits = orbit_partition(group)
    row_orbits = orbit_partition(group.transpose())
    A = coefficient_rows(row_orbits.reps, col_orbits, workers=workers)

    half = 1 << (k - 1)
    sums = A.sum(axis=1)
    if not np.all(sums == half):
        bad = int(np.flatnonzero(sums != half)[0])
        raise ConsistencyError(f"row {bad} sums to {int(sums[bad])}, expected {half}")

    system = DiophantineSystem(
        k=k, n=n, d=d, d_max=d_max, A=A,
        col_reps=col_orbits.reps,
        lengths=np.asarray(col_orbits.sizes, dtype=np.int64),
        row_reps=row_orbits.reps,
        col_orbits=col_orbits,
        row_orbits=row_orbits,
    )
    logger.info(
        "Built %dx%d system for k=%d n=%d d=%d dmax=%s",
        system.num_rows, system.num_cols, k, n, d, d_max if d_max is not None else "-",
    )
    return system


def attach_group(system: DiophantineSystem, group: MatrixGroup) -> DiophantineSystem:
    """Recover orbit members for a system read from a file."""
    if group.k != system.k:
        raise DimensionError(f"group acts on k={group.k}, system has k={system.k}")
    col_orbits = orbit_partition(group)
    row_orbits = orbit_partition(group.transpose())
    if col_orbits.reps != system.col_reps or tuple(system.lengths.tolist()) != col_orbits.sizes:
        raise ConsistencyError("group does not reproduce the system's column orbits")
    if row_orbits.reps != system.row_reps:
        raise ConsistencyError("group does not reproduce the system's row orbits")
    return replace(system, col_orbits=col_orbits, row_orbits=row_orbits)


# ---------------------------------------------------------------------------
# Selections
# ---------------------------------------------------------------------------

def _as_selection(system: DiophantineSystem, x: Sequence[int]) -> np.ndarray:
    arr = np.asarray(x, dtype=np.int64)
    if arr.shape != (system.num_cols,):
        raise DimensionError(f"selection has {arr.size} entries, system has {system.num_cols} column orbits")
    if np.any(arr < 0):
        raise DomainError("multiplicities must be nonnegative")
    return arr


def row_weights(system: DiophantineSystem, x: Sequence[int]) -> np.ndarray:
    return system.A @ _as_selection(system, x)


def is_feasible(system: DiophantineSystem, total_length: int, lo: int, hi: int) -> bool:
    return (
        total_length == system.n
        and system.d <= lo
        and (system.d_max is None or hi <= system.d_max)
    )


def evaluate_selection(system: DiophantineSystem, x: Sequence[int]) -> SelectionReport:
    arr = _as_selection(system, x)
    weights = system.A @ arr
    total = int(system.lengths @ arr)
    lo = int(weights.min()) if weights.size else 0
    hi = int(weights.max()) if weights.size else 0
    return SelectionReport(
        selection=tuple(int(v) for v in arr),
        total_length=total,
        min_row_weight=lo,
        max_row_weight=hi,
        feasible=is_feasible(system, total, lo, hi),
        rank_ok=lo >= 1,
    )


def materialize(system: DiophantineSystem, x: Sequence[int]) -> LinearCode:
    """Generator whose columns are the selected orbits, in (orbit id, vector) order."""
    report = evaluate_selection(system, x)
    if not report.rank_ok:
        raise RankDeficientError("selection spans a degenerate code")
    if not report.feasible:
        raise DomainError(
            f"selection is infeasible: length {report.total_length}, "
            f"row weights {report.min_row_weight}..{report.max_row_weight}"
        )
    if report.total_length > MAX_BITS:
        raise DomainError(f"code length {report.total_length} exceeds {MAX_BITS}")

    columns: list[int] = []
    for j, mult in enumerate(report.selection):
        if mult:
            columns.extend(system.column_members(j) * mult)
    gen = BitMatrix.from_columns(columns, system.k)
    if rank(gen) < system.k:
        raise RankDeficientError("selection spans a degenerate code")

    code = LinearCode(gen)
    dist = weight_distribution(code)
    if (dist.min_distance, dist.max_weight) != (report.min_row_weight, report.max_row_weight):
        raise ConsistencyError(
            f"orbit algebra gives weights {report.min_row_weight}..{report.max_row_weight}, "
            f"enumeration gives {dist.min_distance}..{dist.max_weight}"
        )
    logger.info("Materialized [%d,%d,%d] code with maximum weight %d",
                code.n, code.k, dist.min_distance, dist.max_weight)
    return code


# ---------------------------------------------------------------------------
# File formats
# ---------------------------------------------------------------------------

def format_system(system: DiophantineSystem) -> str:
    dmax = "-" if system.d_max is None else str(system.d_max)
    lines = [
        f"DIOSYS k={system.k} n={system.n} d={system.d} dmax={dmax} "
        f"rows={system.num_rows} cols={system.num_cols}"
    ]
    for j, (length, rep) in enumerate(zip(system.lengths.tolist(), system.col_reps)):
        lines.append(f"COL {j} {length} {rep:x}")
    for i, (rep, row) in enumerate(zip(system.row_reps, system.A.tolist())):
        lines.append(f"ROW {i} {rep:x} " + " ".join(str(a) for a in row))
    return "\n".join(lines) + "\n"


def _header_fields(line: str) -> dict[str, str]:
    parts = line.split()
    if not parts or parts[0] != "DIOSYS":
        raise FormatError("line 1: expected DIOSYS header", line=1, column=1)
    fields = {}
    for part in parts[1:]:
        key, sep, value = part.partition("=")
        if not sep:
            raise FormatError(f"line 1: malformed header field {part!r}", line=1, column=line.find(part) + 1)
        fields[key] = value
    missing = {"k", "n", "d", "dmax", "rows", "cols"} - fields.keys()
    if missing:
        raise FormatError(f"line 1: header lacks {sorted(missing)}", line=1, column=0)
    return fields


def _int(token: str, lineno: int, base: int = 10) -> int:
    try:
        return int(token, base)
    except ValueError:
        raise FormatError(f"line {lineno}: bad number {token!r}", line=lineno, column=0) from None


def parse_system(text: str) -> DiophantineSystem:
    lines = [ln.strip() for ln in text.splitlines()]
    if not lines:
        raise FormatError("empty system file", line=0, column=0)
    h = _header_fields(lines[0])
    k, n, d = _int(h["k"], 1), _int(h["n"], 1), _int(h["d"], 1)
    d_max = None if h["dmax"] == "-" else _int(h["dmax"], 1)
    r, m = _int(h["rows"], 1), _int(h["cols"], 1)
    _check_targets(n, d, d_max)
    if len(lines) < 1 + m + r:
        raise FormatError(f"expected {1 + m + r} lines, found {len(lines)}", line=len(lines), column=0)

    col_reps, lengths = [], []
    for j in range(m):
        lineno = 2 + j
        parts = lines[lineno - 1].split()
        if len(parts) != 4 or parts[0] != "COL" or _int(parts[1], lineno) != j:
            raise FormatError(f"line {lineno}: expected 'COL {j} <length> <rep_hex>'", line=lineno, column=1)
        lengths.append(_int(parts[2], lineno))
        col_reps.append(_int(parts[3], lineno, 16))

    row_reps, rows = [], []
    for i in range(r):
        lineno = 2 + m + i
        parts = lines[lineno - 1].split()
        if len(parts) != 3 + m or parts[0] != "ROW" or _int(parts[1], lineno) != i:
            raise FormatError(
                f"line {lineno}: expected 'ROW {i} <rep_hex>' and {m} counts", line=lineno, column=1,
            )
        row_reps.append(_int(parts[2], lineno, 16))
        rows.append([_int(t, lineno) for t in parts[3:]])

    A = np.asarray(rows, dtype=np.int64).reshape(r, m)
    return DiophantineSystem(
        k=k, n=n, d=d, d_max=d_max, A=A,
        col_reps=tuple(col_reps),
        lengths=np.asarray(lengths, dtype=np.int64),
        row_reps=tuple(row_reps),
    )


def write_system(path: str | Path, system: DiophantineSystem) -> None:
    Path(path).write_text(format_system(system), encoding="utf-8")
    logger.info("Wrote %dx%d system to %s", system.num_rows, system.num_cols, path)


def read_system(path: str | Path) -> DiophantineSystem:
    return parse_system(Path(path).read_text(encoding="utf-8"))


def format_selection(x: Sequence[int]) -> str:
    """Lines 'orbit_id multiplicity' for the nonzero entries."""
    return "".join(f"{j} {int(m)}\n" for j, m in enumerate(x) if m)


def parse_selection(text: str, num_orbits: int) -> tuple[int, ...]:
    x = [0] * num_orbits
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'orbit_id multiplicity'", line=lineno, column=1)
        j, mult = _int(parts[0], lineno), _int(parts[1], lineno)
        if not 0 <= j < num_orbits:
            raise FormatError(f"line {lineno}: unknown orbit id {j}", line=lineno, column=1)
        if mult < 0:
            raise FormatError(f"line {lineno}: negative multiplicity", line=lineno, column=len(parts[0]) + 2)
        x[j] = mult
    return tuple(x)
