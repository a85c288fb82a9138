"""All-one-row extension of a binary code.

Padding an [n, k, d] code with p zero columns and adjoining the all-one row
gives an [n+p, k+1] code that is the disjoint union of the padded code and
its complement. The complement of a weight-w word has weight n+p-w, so the new
minimum distance is min(d, n+p-d') where d' is the maximum weight.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from lincode.code import ENUMERATION_BUDGET, LinearCode, weight_distribution
from lincode.errors import ConsistencyError, DomainError, ExtensionError
from lincode.gf2 import MAX_BITS, BitVector
from lincode.models import ExtensionRequirements, WeightDistribution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionReport:
    base: LinearCode
    extended: LinearCode
    p: int
    predicted_d: int
    verified_d: int
    base_distribution: WeightDistribution
    extended_distribution: WeightDistribution

    @property
    def base_max_weight(self) -> int:
        return self.base_distribution.max_weight

    def to_dict(self) -> dict:
        return {
            "base": [self.base.n, self.base.k, self.base_distribution.min_distance],
            "base_max_weight": self.base_max_weight,
            "pad": self.p,
            "extended": [self.extended.n, self.extended.k, self.verified_d],
            "predicted_d": self.predicted_d,
            "verified_d": self.verified_d,
            "extended_distribution": self.extended_distribution.to_dict()["counts"],
        }


def predicted_min_distance(d: int, d_max: int, n: int, p: int) -> int:
    """min(d, n + p - d_max)."""
    if not 1 <= d <= d_max <= n:
        raise DomainError(f"need 1 <= d <= d_max <= n, got d={d} d_max={d_max} n={n}")
    if p < 0:
        raise DomainError(f"pad count must be nonnegative, got {p}")
    return min(d, n + p - d_max)


def extend_all_one(code: LinearCode, p: int) -> LinearCode:
    """Append p zero columns on the right, then the all-one row as last row."""
    if p < 0:
        raise DomainError(f"pad count must be nonnegative, got {p}")
    length = code.n + p
    if length > MAX_BITS:
        raise DomainError(f"extended length {length} exceeds {MAX_BITS}")
    # With p >= 1 the padding columns keep the all-one word out of C'.
    if p == 0 and code.contains(BitVector.ones(code.n)):
        raise ExtensionError("all-one word in code; dimension would not increase")

    gen = code.gen.append_zero_columns(p).append_row(BitVector.ones(length))
    return LinearCode(gen)


def complement_identity_failures(
    base: WeightDistribution, extended: WeightDistribution, p: int
) -> list[int]:
    """Weights w where Â_w != A_w + A_{n+p-w}; empty when the identity holds."""
    length = base.n + p
    if extended.n != length:
        raise DomainError(f"extended length {extended.n} != {length}")
    return [
        w for w in range(length + 1)
        if extended[w] != base[w] + base[length - w]
    ]


def extension_report(
    code: LinearCode, p: int, *, budget: int = ENUMERATION_BUDGET
) -> ExtensionReport:
    """Build the extension and verify the predicted distance exhaustively."""
    extended = extend_all_one(code, p)
    base_dist = weight_distribution(code, budget=budget)
    ext_dist = weight_distribution(extended, budget=budget)

    predicted = predicted_min_distance(base_dist.min_distance, base_dist.max_weight, code.n, p)
    verified = ext_dist.min_distance

    bad = complement_identity_failures(base_dist, ext_dist, p)
    if bad:
        raise ConsistencyError(f"complement identity fails at weights {bad}")
    if predicted != verified:
        raise ConsistencyError(f"predicted distance {predicted} but found {verified}")

    logger.info(
        "Extended %s by %d zero column(s): [%d,%d,%d]",
        code, p, extended.n, extended.k, verified,
    )
    return ExtensionReport(
        base=code,
        extended=extended,
        p=p,
        predicted_d=predicted,
        verified_d=verified,
        base_distribution=base_dist,
        extended_distribution=ext_dist,
    )


def extension_requirements(n: int, k: int, d: int, p: int = 1) -> ExtensionRequirements:
    """Base-code parameters needed to reach an [n, k, d] code by this extension.

    The base is an [n-p, k-1, d] code whose maximum weight is at most n-d.
    """
    if k < 2 or d < 1:
        raise DomainError(f"need k >= 2 and d >= 1, got k={k} d={d}")
    if p < 0 or p > n - d:
        raise DomainError(f"pad count must lie in 0..{n - d}, got {p}")
    if 2 * d > n:
        raise DomainError(f"no base code exists: maximum weight would need to be below d ({n - d} < {d})")
    return ExtensionRequirements(
        n=n, k=k, d=d, pad=p,
        base_n=n - p, base_k=k - 1,
        max_weight=min(n - d, n - p),
    )
