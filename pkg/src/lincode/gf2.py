"""Packed GF(2) vectors and matrices.

A vector of length ``len`` is stored in a single Python int: bit i of the
vector is bit i of the integer, so the leftmost character of a text row
("0110...") is bit 0. Lengths are capped at 64, one machine word, which
covers every code this toolkit handles (k <= 24, n <= 64).

Everything here is immutable; elimination and powering work on copies.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from lincode.errors import DimensionError, NotInvertibleError, OrderCapExceeded

logger = logging.getLogger(__name__)

MAX_BITS = 64


def _mask(length: int) -> int:
    return (1 << length) - 1


# ---------------------------------------------------------------------------
# Vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BitVector:
    """A row or column vector over GF(2)."""

    len: int
    word: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.len <= MAX_BITS:
            raise DimensionError(f"vector length {self.len} outside 0..{MAX_BITS}")
        if self.word < 0 or self.word >> self.len:
            raise DimensionError(f"bits set beyond length {self.len}")

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls(length, _mask(length))

    @classmethod
    def unit(cls, length: int, i: int) -> BitVector:
        return cls(length, 1 << i)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitVector:
        word = 0
        length = 0
        for i, b in enumerate(bits):
            if b & 1:
                word |= 1 << i
            length = i + 1
        return cls(length, word)

    @classmethod
    def from_string(cls, text: str) -> BitVector:
        """Parse '0'/'1' characters, leftmost character = bit 0."""
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a binary string: {text!r}")
        return cls.from_bits(int(ch) for ch in text)

    @property
    def words(self) -> tuple[int, ...]:
        return (self.word,)

    def weight(self) -> int:
        return self.word.bit_count()

    def dot(self, other: BitVector) -> int:
        """Inner product <self, other> over GF(2)."""
        self._check_len(other)
        return (self.word & other.word).bit_count() & 1

    def to_string(self) -> str:
        return "".join("1" if (self.word >> i) & 1 else "0" for i in range(self.len))

    def _check_len(self, other: BitVector) -> None:
        if other.len != self.len:
            raise DimensionError(f"length mismatch: {self.len} vs {other.len}")

    def __xor__(self, other: BitVector) -> BitVector:
        self._check_len(other)
        return BitVector(self.len, self.word ^ other.word)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.len:
            raise IndexError(i)
        return (self.word >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self.word >> i) & 1 for i in range(self.len))

    def __int__(self) -> int:
        return self.word

    def __str__(self) -> str:
        return self.to_string()


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BitMatrix:
    """A rows x cols matrix over GF(2), one packed int per row."""

    cols: int
    words: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not 0 <= self.cols <= MAX_BITS:
            raise DimensionError(f"column count {self.cols} outside 0..{MAX_BITS}")
        for i, w in enumerate(self.words):
            if w < 0 or w >> self.cols:
                raise DimensionError(f"row {i} has bits beyond column {self.cols}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector | str], cols: int | None = None) -> BitMatrix:
        vectors = [BitVector.from_string(r) if isinstance(r, str) else r for r in rows]
        if cols is None:
            if not vectors:
                raise DimensionError("column count required for an empty matrix")
            cols = vectors[0].len
        for i, v in enumerate(vectors):
            if v.len != cols:
                raise DimensionError(f"row {i}: expected {cols} columns, found {v.len}")
        return cls(cols, tuple(v.word for v in vectors))

    @classmethod
    def from_array(cls, array: np.ndarray) -> BitMatrix:
        arr = np.asarray(array, dtype=np.uint8) % 2
        if arr.ndim != 2:
            raise DimensionError("expected a 2-d array")
        return cls.from_rows([BitVector.from_bits(row.tolist()) for row in arr], cols=arr.shape[1])

    @classmethod
    def from_columns(cls, columns: Sequence[int], rows: int) -> BitMatrix:
        """Build from column words (bit i of a column = entry in row i)."""
        words = [0] * rows
        for j, c in enumerate(columns):
            if c >> rows:
                raise DimensionError(f"column {j} has bits beyond row {rows}")
            for i in range(rows):
                if (c >> i) & 1:
                    words[i] |= 1 << j
        return cls(len(columns), tuple(words))

    @classmethod
    def identity(cls, k: int) -> BitMatrix:
        return cls(k, tuple(1 << i for i in range(k)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(cols, (0,) * rows)

    # -- views --------------------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.words)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def row_data(self) -> tuple[BitVector, ...]:
        return tuple(BitVector(self.cols, w) for w in self.words)

    def column(self, j: int) -> int:
        """Column j as a packed word, bit i = entry (i, j)."""
        if not 0 <= j < self.cols:
            raise IndexError(j)
        col = 0
        for i, w in enumerate(self.words):
            col |= ((w >> j) & 1) << i
        return col

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.cols)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_array(self) -> np.ndarray:
        arr = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, w in enumerate(self.words):
            for j in range(self.cols):
                arr[i, j] = (w >> j) & 1
        return arr

    def to_strings(self) -> list[str]:
        return [v.to_string() for v in self.row_data]

    # -- derived matrices ---------------------------------------------------

    def transpose(self) -> BitMatrix:
        return BitMatrix.from_columns(self.words, self.cols) if self.rows else BitMatrix.zeros(self.cols, 0)

    def append_zero_columns(self, p: int) -> BitMatrix:
        if p < 0:
            raise DimensionError("cannot append a negative number of columns")
        return BitMatrix(self.cols + p, self.words)

    def append_row(self, row: BitVector) -> BitMatrix:
        if row.len != self.cols:
            raise DimensionError(f"expected {self.cols} columns, found {row.len}")
        return BitMatrix(self.cols, self.words + (row.word,))

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")
        return BitMatrix(self.cols, tuple(a ^ b for a, b in zip(self.words, other.words)))

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        return mat_mul(self, other)

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def mat_vec_mul(m: BitMatrix, v: BitVector) -> BitVector:
    """Return M·v: bit i is the parity of row i of M AND v."""
    if v.len != m.cols:
        raise DimensionError(f"matrix has {m.cols} columns, vector has length {v.len}")
    word = 0
    for i, row in enumerate(m.words):
        word |= ((row & v.word).bit_count() & 1) << i
    return BitVector(m.rows, word)


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """GF(2) product A·B."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for row in a.words:
        acc = 0
        j = 0
        while row:
            if row & 1:
                acc ^= b.words[j]
            row >>= 1
            j += 1
        out.append(acc)
    return BitMatrix(b.cols, tuple(out))


def rank_of_words(words: Iterable[int]) -> int:
    """Rank of the span of packed rows (Gaussian elimination on a copy)."""
    pivots: dict[int, int] = {}
    for r in words:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                break
    return len(pivots)


def rank(m: BitMatrix) -> int:
    return rank_of_words(m.words)


def nullity(m: BitMatrix) -> int:
    """Dimension of the right kernel {v : M·v = 0}."""
    return m.cols - rank(m)


def is_invertible(m: BitMatrix) -> bool:
    return m.is_square() and rank(m) == m.rows


def in_row_space(m: BitMatrix, v: BitVector) -> bool:
    if v.len != m.cols:
        raise DimensionError(f"matrix has {m.cols} columns, vector has length {v.len}")
    return rank_of_words(m.words + (v.word,)) == rank(m)


def matrix_power(m: BitMatrix, e: int) -> BitMatrix:
    if not m.is_square():
        raise DimensionError("matrix power needs a square matrix")
    result = BitMatrix.identity(m.rows)
    base = m
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


def matrix_order(m: BitMatrix, cap: int | None = None) -> int:
    """Smallest t >= 1 with M^t == I.

    ``cap`` defaults to 2^k; every element of GL(k, 2) has order below that.
    """
    if not m.is_square():
        raise DimensionError(f"matrix order needs a square matrix, got {m.rows}x{m.cols}")
    k = m.rows
    if not is_invertible(m):
        raise NotInvertibleError("not invertible")
    if cap is None:
        cap = 1 << k
    ident = BitMatrix.identity(k)
    power = m
    t = 1
    while power != ident:
        t += 1
        if t > cap:
            raise OrderCapExceeded(f"order exceeds cap {cap}")
        power = mat_mul(power, m)
    logger.debug("Matrix of size %d has order %d", k, t)
    return t


def action_table(m: BitMatrix) -> np.ndarray:
    """Images M·v for every v in GF(2)^k, indexed by the packed word of v.

    Built by linearity: M·v is the XOR of the columns selected by v, so the
    table for k bits is the table for k-1 bits followed by its XOR with
    column k-1.
    """
    if not m.is_square():
        raise DimensionError("action table needs a square matrix")
    table = np.zeros(1, dtype=np.uint32)
    for col in m.columns():
        table = np.concatenate([table, table ^ np.uint32(col)])
    return table
