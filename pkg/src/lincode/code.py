"""Binary linear codes and their weight statistics."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from lincode.errors import DimensionError, EnumerationTooLarge, FormatError, RankDeficientError
from lincode.gf2 import BitMatrix, BitVector, in_row_space, rank
from lincode.models import DistributionComparison, WeightDistribution

logger = logging.getLogger(__name__)

ENUMERATION_BUDGET = 24  # max k for exhaustive enumeration


@dataclass(frozen=True)
class LinearCode:
    """The row space of a full-rank k x n generator matrix."""

    gen: BitMatrix

    def __post_init__(self) -> None:
        r = rank(self.gen)
        if r != self.gen.rows:
            raise RankDeficientError(
                f"generator has {self.gen.rows} rows but rank {r}"
            )

    @classmethod
    def from_strings(cls, rows: list[str]) -> LinearCode:
        return cls(BitMatrix.from_rows(rows))

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def encode(self, message: int) -> BitVector:
        """Codeword message·Γ; bit i of ``message`` selects row i."""
        if message >> self.k:
            raise DimensionError(f"message has more than {self.k} bits")
        word = 0
        for i, row in enumerate(self.gen.words):
            if (message >> i) & 1:
                word ^= row
        return BitVector(self.n, word)

    def codewords(self) -> Iterator[BitVector]:
        for m in range(1 << self.k):
            yield self.encode(m)

    @cached_property
    def distribution(self) -> WeightDistribution:
        return weight_distribution(self)

    @property
    def min_distance(self) -> int:
        return self.distribution.min_distance

    @property
    def max_weight(self) -> int:
        return self.distribution.max_weight

    @property
    def correctable_errors(self) -> int:
        return (self.min_distance - 1) // 2

    def contains(self, v: BitVector) -> bool:
        return in_row_space(self.gen, v)

    def __str__(self) -> str:
        return f"[{self.n},{self.k}]"


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _check_budget(k: int, budget: int) -> None:
    if k > budget:
        raise EnumerationTooLarge(f"enumeration too large: k={k} exceeds budget {budget}")


def _gray_counts(words: tuple[int, ...], n: int, low_bits: int, prefix: int) -> list[int]:
    """Weight counts over the messages whose high bits equal ``prefix``.

    The low ``low_bits`` message bits run in Gray-code order, so each step
    XORs exactly one generator row into the running codeword.
    """
    counts = [0] * (n + 1)
    cw = 0
    for i, row in enumerate(words[low_bits:]):
        if (prefix >> i) & 1:
            cw ^= row
    counts[cw.bit_count()] += 1
    for i in range(1, 1 << low_bits):
        cw ^= words[(i & -i).bit_length() - 1]
        counts[cw.bit_count()] += 1
    return counts


def weight_distribution(
    code: LinearCode,
    *,
    partitions: int = 1,
    workers: int = 1,
    budget: int = ENUMERATION_BUDGET,
) -> WeightDistribution:
    """Exact weight distribution over all 2^k codewords.

    The message space may be split into ``partitions`` blocks by fixing the
    high message bits (must be a power of two, at most 2^k); blocks run in up
    to ``workers`` processes and are summed. The result does not depend on
    either argument.
    """
    k, n = code.k, code.n
    _check_budget(k, budget)
    if partitions < 1 or partitions & (partitions - 1) or partitions > 1 << k:
        raise ValueError(f"partitions must be a power of two in 1..2^k, got {partitions}")

    high_bits = partitions.bit_length() - 1
    low_bits = k - high_bits
    words = code.gen.words
    args = [(words, n, low_bits, prefix) for prefix in range(partitions)]

    if workers > 1 and partitions > 1:
        with ProcessPoolExecutor(max_workers=min(workers, partitions)) as pool:
            blocks = list(pool.map(_gray_counts, *zip(*args)))
    else:
        blocks = [_gray_counts(*a) for a in args]

    counts = [sum(col) for col in zip(*blocks)]
    dist = WeightDistribution(n, tuple(counts))
    logger.debug("Enumerated %d codewords of %s in %d partition(s)", dist.total, code, partitions)
    return dist


def naive_weight_distribution(code: LinearCode, budget: int = ENUMERATION_BUDGET) -> WeightDistribution:
    """Reference distribution: encode every message independently."""
    _check_budget(code.k, budget)
    counts = [0] * (code.n + 1)
    for cw in code.codewords():
        counts[cw.weight()] += 1
    return WeightDistribution(code.n, tuple(counts))


def min_distance(code: LinearCode) -> int:
    return code.distribution.min_distance


def max_weight(code: LinearCode) -> int:
    return code.distribution.max_weight


# ---------------------------------------------------------------------------
# Presentation
# ---------------------------------------------------------------------------

def enumerator_string(dist: WeightDistribution) -> str:
    """Ascending-exponent enumerator, e.g. '1+1082x^16+...+541x^32'."""
    terms = []
    for w, c in dist.nonzero():
        if w == 0:
            terms.append(str(c))
            continue
        power = "x" if w == 1 else f"x^{w}"
        terms.append(power if c == 1 else f"{c}{power}")
    return "+".join(terms) if terms else "0"


def format_distribution(dist: WeightDistribution) -> str:
    return "".join(f"{w} {c}\n" for w, c in dist.nonzero())


def parse_distribution(text: str, n: int) -> WeightDistribution:
    """Read 'w count' lines (ascending w) back into a distribution of length n."""
    coefficients: dict[int, int] = {}
    last = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"line {lineno}: expected 'w count'", line=lineno, column=1)
        w, c = int(parts[0]), int(parts[1])
        if w <= last or w > n:
            raise FormatError(f"line {lineno}: weight {w} out of order or above n={n}", line=lineno, column=1)
        coefficients[w] = c
        last = w
    return WeightDistribution.from_mapping(n, coefficients)


def compare_distributions(a: WeightDistribution, b: WeightDistribution) -> DistributionComparison:
    top = max(a.n, b.n)
    differing = tuple(w for w in range(top + 1) if a[w] != b[w])
    return DistributionComparison(
        equal=not differing and a.n == b.n,
        min_distance=(a.min_distance, b.min_distance),
        max_weight=(a.max_weight, b.max_weight),
        differing_weights=differing,
    )


def griesmer_bound(k: int, d: int) -> int:
    """Smallest length a binary [n, k, d] code can have by the Griesmer bound."""
    if k < 1 or d < 1:
        raise ValueError("griesmer_bound needs k >= 1 and d >= 1")
    return sum(-(-d // (1 << i)) for i in range(k))
