"""MAT text format: one '0'/'1' line per matrix row.

    # optional comment lines
    00000111110000011111...
    00011000111111100111...

Leftmost character is column 0. Rows must all have the same length.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable

from lincode.errors import FormatError
from lincode.gf2 import MAX_BITS, BitMatrix, BitVector

logger = logging.getLogger(__name__)


def parse_mat(text: str) -> BitMatrix:
    """Parse MAT text into a BitMatrix, raising FormatError with a position."""
    rows: list[BitVector] = []
    width: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for col, ch in enumerate(line, start=1):
            if ch not in "01":
                raise FormatError(
                    f"row {len(rows) + 1}: unexpected character {ch!r} at column {col}",
                    line=lineno, column=col,
                )
        if width is None:
            if len(line) > MAX_BITS:
                raise FormatError(
                    f"row 1: {len(line)} columns exceeds the limit of {MAX_BITS}",
                    line=lineno, column=MAX_BITS + 1,
                )
            width = len(line)
        elif len(line) != width:
            raise FormatError(
                f"row {len(rows) + 1}: expected {width} columns, found {len(line)}",
                line=lineno, column=min(len(line), width) + 1,
            )
        rows.append(BitVector.from_string(line))

    if width is None:
        raise FormatError("no matrix rows found", line=0, column=0)
    return BitMatrix.from_rows(rows, cols=width)


def format_mat(matrix: BitMatrix, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.extend(matrix.to_strings())
    return "\n".join(lines) + "\n"


def read_mat(path: str | Path) -> BitMatrix:
    text = Path(path).read_text(encoding="utf-8")
    matrix = parse_mat(text)
    logger.debug("Read %dx%d matrix from %s", matrix.rows, matrix.cols, path)
    return matrix


def write_mat(path: str | Path, matrix: BitMatrix, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_mat(matrix, comments), encoding="utf-8")
    logger.info("Wrote %dx%d matrix to %s", matrix.rows, matrix.cols, path)
