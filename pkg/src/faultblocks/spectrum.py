"""Block-coverage spectra: bit vectors, the ternary hit function and the
runs x blocks hit matrix paired with a pass/fail decision vector.

A block column (hits of one block across every run) and its transposed row
form carry the same ordered bits, so both are represented by a single
:class:`BinaryVector`.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class HitValue(enum.IntEnum):
    """Outcome of comparing one block across two runs."""

    BOTH_MISS = -1
    MIXED = 0
    BOTH_HIT = 1


# (bit_a, bit_b) -> HitValue, written out as a table on purpose.
_HIT_TABLE = {
    (0, 0): HitValue.BOTH_MISS,
    (0, 1): HitValue.MIXED,
    (1, 0): HitValue.MIXED,
    (1, 1): HitValue.BOTH_HIT,
}


class BinaryVector(tuple):
    """Immutable, non-empty sequence of 0/1 bits."""

    __slots__ = ()

    def __new__(cls, bits: Iterable[int]) -> "BinaryVector":
        if isinstance(bits, BinaryVector):
            return bits
        values = []
        for b in bits:
            if isinstance(b, str) or b not in (0, 1):
                raise ValueError(f"not a bit: {b!r}")
            values.append(int(b))
        if not values:
            raise ValueError("a BinaryVector needs at least one bit")
        return super().__new__(cls, values)

    def __repr__(self) -> str:
        return f"BinaryVector({list(self)})"

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=np.uint8)


class BlockFeatureVector(tuple):
    """Elementwise :func:`hit_function` of two equal-length bit vectors."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int]) -> "BlockFeatureVector":
        return super().__new__(cls, [HitValue(v) for v in values])


def hit_function(a: int, b: int) -> HitValue:
    """Return -1 when both runs miss the block, +1 when both hit it, else 0."""
    try:
        if isinstance(a, str) or isinstance(b, str):
            raise TypeError
        return _HIT_TABLE[a, b]
    except (KeyError, TypeError):
        raise ValueError(f"hit_function expects two bits, got {a!r}, {b!r}") from None


def _check_lengths(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")


def feature_vector(u: Sequence[int], v: Sequence[int]) -> BlockFeatureVector:
    u, v = BinaryVector(u), BinaryVector(v)
    _check_lengths(u, v)
    return BlockFeatureVector(hit_function(a, b) for a, b in zip(u, v))


class SpectrumFormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class SpectrumMatrix:
    """S runs x m blocks of hit bits plus one decision (error) bit per run.

    ``hits`` is stored as a read-only ``uint8`` array.
    """

    hits: np.ndarray
    decisions: BinaryVector
    block_labels: tuple[str, ...]

    def __init__(
        self,
        hits: Sequence[Sequence[int]] | np.ndarray,
        decisions: Sequence[int],
        block_labels: Sequence[str] | None = None,
    ):
        rows = [BinaryVector(r) for r in hits]
        if not rows:
            raise ValueError("a spectrum needs at least one run")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise ValueError(f"row {i} has {len(r)} blocks, expected {width}")
        decisions = BinaryVector(decisions)
        if len(decisions) != len(rows):
            raise ValueError(
                f"{len(decisions)} decision bits for {len(rows)} runs"
            )
        if block_labels is None:
            block_labels = [str(k) for k in range(width)]
        labels = tuple(str(lbl) for lbl in block_labels)
        if len(labels) != width:
            raise ValueError(f"{len(labels)} labels for {width} blocks")
        if len(set(labels)) != len(labels):
            raise ValueError("block labels must be unique")

        arr = np.array(rows, dtype=np.uint8)
        arr.flags.writeable = False
        object.__setattr__(self, "hits", arr)
        object.__setattr__(self, "decisions", decisions)
        object.__setattr__(self, "block_labels", labels)

    @property
    def n_runs(self) -> int:
        return self.hits.shape[0]

    @property
    def n_blocks(self) -> int:
        return self.hits.shape[1]

    def row(self, i: int) -> BinaryVector:
        return BinaryVector(self.hits[i].tolist())

    def column(self, k: int) -> BinaryVector:
        """Hit bits of block ``k`` across all runs, in run order."""
        if not 0 <= k < self.n_blocks:
            raise IndexError(f"block index {k} out of range 0..{self.n_blocks - 1}")
        return BinaryVector(self.hits[:, k].tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectrumMatrix):
            return NotImplemented
        return (
            self.block_labels == other.block_labels
            and self.decisions == other.decisions
            and np.array_equal(self.hits, other.hits)
        )

    def __repr__(self) -> str:
        return (
            f"SpectrumMatrix(hits={self.hits.tolist()}, "
            f"decisions={list(self.decisions)}, block_labels={list(self.block_labels)})"
        )


def column(m: SpectrumMatrix, k: int) -> BinaryVector:
    return m.column(k)


# --- CSV ---------------------------------------------------------------------

_BLOCK_PREFIX = "block_"


def dumps_csv(m: SpectrumMatrix) -> str:
    out = io.StringIO()
    header = [_BLOCK_PREFIX + lbl for lbl in m.block_labels] + ["error"]
    out.write(",".join(header) + "\n")
    for row, d in zip(m.hits.tolist(), m.decisions):
        out.write(",".join(str(b) for b in row) + f",{d}\n")
    return out.getvalue()


def loads_csv(text: str) -> SpectrumMatrix:
    """Parse spectrum CSV text; errors carry the 1-based line number."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise SpectrumFormatError("missing header", 1)

    header = next(csv.reader([lines[0]]))
    if len(header) < 2 or header[-1] != "error":
        raise SpectrumFormatError("header must end with 'error' after at least one block column", 1)
    labels = []
    for name in header[:-1]:
        if not name.startswith(_BLOCK_PREFIX) or len(name) == len(_BLOCK_PREFIX):
            raise SpectrumFormatError(f"bad block column name {name!r}", 1)
        labels.append(name[len(_BLOCK_PREFIX):])
    if len(set(labels)) != len(labels):
        raise SpectrumFormatError("duplicate block labels", 1)

    rows, decisions = [], []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            # tolerate trailing blank lines only
            if any(rest for rest in lines[lineno - 1:]):
                raise SpectrumFormatError("blank line inside data", lineno)
            break
        tokens = line.split(",")
        if len(tokens) != len(header):
            raise SpectrumFormatError(
                f"expected {len(header)} fields, got {len(tokens)}", lineno
            )
        for tok in tokens:
            if tok not in ("0", "1"):
                raise SpectrumFormatError(f"invalid bit {tok!r}", lineno)
        bits = [int(t) for t in tokens]
        rows.append(bits[:-1])
        decisions.append(bits[-1])
    if not rows:
        raise SpectrumFormatError("no data rows", len(lines) + 1)
    return SpectrumMatrix(rows, decisions, labels)


def write_csv(m: SpectrumMatrix, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(dumps_csv(m))


def read_csv(path) -> SpectrumMatrix:
    with open(path, encoding="utf-8") as fh:
        return loads_csv(fh.read())
