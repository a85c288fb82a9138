"""End-to-end check of the published [47,15,16] and [48,16,16] data."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

from lincode.code import LinearCode, enumerator_string, weight_distribution
from lincode.errors import LincodeError
from lincode.extension import extension_report
from lincode.fixtures import FixtureSet, load_fixtures
from lincode.gf2 import matrix_order
from lincode.orbits import (
    OrbitPartition,
    burnside_count,
    column_orbit_decomposition,
    generate_cyclic,
    orbit_partition,
)

logger = logging.getLogger(__name__)

GROUP_ORDER = 10
ORBIT_COUNT = 3383
GAMMA47_PARAMS = (47, 15, 16)
GAMMA47_MAX_WEIGHT = 32
EXTENDED_PARAMS = (48, 16, 16)
COMBINED_ORBITS = 7

GAMMA47_ENUMERATOR = (
    "1+1082x^16+2560x^18+3360x^20+6656x^22+9000x^24"
    "+5632x^26+2400x^28+1536x^30+541x^32"
)
EXTENDED48_ENUMERATOR = (
    "1+1623x^16+4096x^18+5760x^20+12288x^22+18000x^24"
    "+12288x^26+5760x^28+4096x^30+1623x^32+x^48"
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str
    hard: bool = True

    def line(self) -> str:
        tag = "PASS" if self.passed else ("FAIL" if self.hard else "INFO")
        return f"[{tag}] {self.name}: {self.detail}"


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.hard)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.hard and not c.passed]

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def _run(report: VerificationReport, name: str, fn: Callable[[], tuple[bool, str]], hard: bool = True) -> None:
    try:
        passed, detail = fn()
    except LincodeError as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    report.checks.append(Check(name, passed, detail, hard))
    log = logger.info if passed or not hard else logger.error
    log("%s: %s", name, detail)


def verify_fixtures(fixtures: FixtureSet | None = None) -> VerificationReport:
    fx = fixtures or load_fixtures()
    report = VerificationReport()
    state: dict[str, object] = {}

    def group_order() -> tuple[bool, str]:
        t = matrix_order(fx.m15)
        return t == GROUP_ORDER, f"order={t} (expected {GROUP_ORDER})"

    def orbit_counts() -> tuple[bool, str]:
        group = generate_cyclic(fx.m15)
        partition = orbit_partition(group)
        state["partition"] = partition
        direct = partition.num_orbits
        burnside = burnside_count(group)
        transposed = orbit_partition(group.transpose()).num_orbits
        ok = direct == burnside == transposed == ORBIT_COUNT
        return ok, f"direct={direct} burnside={burnside} transpose={transposed} (expected {ORBIT_COUNT})"

    def base_code() -> tuple[bool, str]:
        code = LinearCode(fx.gamma47)
        dist = weight_distribution(code)
        params = (code.n, code.k, dist.min_distance)
        ok = (
            params == GAMMA47_PARAMS
            and dist.max_weight == GAMMA47_MAX_WEIGHT
            and dist == fx.gamma47_distribution
            and enumerator_string(dist) == GAMMA47_ENUMERATOR
            and dist.total == 1 << code.k
        )
        return ok, f"n={code.n} k={code.k} d={dist.min_distance} dmax={dist.max_weight} {enumerator_string(dist)}"

    def extension() -> tuple[bool, str]:
        rep = extension_report(LinearCode(fx.gamma47), 1)
        dist = rep.extended_distribution
        params = (rep.extended.n, rep.extended.k, rep.verified_d)
        ok = (
            params == EXTENDED_PARAMS
            and rep.predicted_d == rep.verified_d
            and dist == fx.extended48_distribution
            and enumerator_string(dist) == EXTENDED48_ENUMERATOR
            and dist.is_symmetric()
        )
        return ok, f"[{rep.extended.n},{rep.extended.k},{rep.verified_d}] predicted_d={rep.predicted_d} {enumerator_string(dist)}"

    def decomposition() -> tuple[bool, str]:
        partition = state.get("partition")
        if not isinstance(partition, OrbitPartition):
            partition = orbit_partition(generate_cyclic(fx.m15))
        dec = column_orbit_decomposition(fx.gamma47, partition)
        ok = dec.is_union_of_orbits and dec.orbit_count == COMBINED_ORBITS and dec.total_columns == 47
        detail = dec.summary()
        if not ok:
            detail += (
                f"; expected {COMBINED_ORBITS} whole orbits. The generator matrix and the group"
                " generator may be written in different bases"
            )
        return ok, detail

    _run(report, "group order", group_order)
    _run(report, "orbit count", orbit_counts)
    _run(report, "[47,15,16] analytics", base_code)
    _run(report, "[48,16,16] extension", extension)
    _run(report, "column orbits", decomposition, hard=False)
    return report
