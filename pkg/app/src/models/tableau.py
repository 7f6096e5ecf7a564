# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Tableau Models Module

This module defines the models for marginally large tableaux (the set T(infinity))
and for the explicit tableaux and reading words the Kashiwara operators work on.

The module includes:
- MLTableau: an element of T(infinity), stored as segment counts n[j][k]
- FullTableau: an explicit semistandard tableau (rows of letters)
- Box / BoxWord: a box with its position, and the Far-Eastern reading word
- Signature: the reduced i-signature of a reading word with the acting boxes
"""

from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .roots import Rank, rank_size


def pair_index(r: int, j: int, k: int) -> int:
    """Position of the count n[j][k] in the flat (j, k) row-major layout."""
    if not 1 <= j < k <= r + 1:
        raise ValueError(f"Invalid count index n[{j}][{k}] for r={r}")
    offset = (j - 1) * (r + 1) - (j - 1) * j // 2
    return offset + (k - j - 1)


def count_pairs(r: int) -> List[Tuple[int, int]]:
    """All index pairs (j, k) with 1 <= j < k <= r+1, in storage order."""
    return [(j, k) for j in range(1, r + 1) for k in range(j + 1, r + 2)]


class MLTableau(BaseModel):
    """
    Marginally large tableau b in T(infinity), stored through its reduced form.

    ``counts`` holds n[j][k], the number of k-boxes in row j of the reduced form,
    for 1 <= j < k <= r+1 in row-major order. Every nonnegative assignment is an
    element of T(infinity); the required boxes are implied by marginal largeness.
    """
    model_config = ConfigDict(frozen=True)

    rank: Rank
    counts: Tuple[int, ...] = Field(..., description="Segment counts n[j][k] in (j, k) row-major order")

    @model_validator(mode="after")
    def validate_counts(self):
        expected = rank_size(self.rank)
        if len(self.counts) != expected:
            raise ValueError(f"MLTableau of rank {self.rank} needs {expected} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError(f"MLTableau counts must be nonnegative, got {self.counts}")
        return self

    def n(self, j: int, k: int) -> int:
        """Number of k-boxes in row j of the reduced form."""
        return self.counts[pair_index(self.rank, j, k)]

    def row_counts(self, j: int) -> Dict[int, int]:
        """Variable part of row j as {letter: count}."""
        return {k: self.n(j, k) for k in range(j + 1, self.rank + 2)}

    def items(self) -> Iterator[Tuple[Tuple[int, int], int]]:
        for pair, value in zip(count_pairs(self.rank), self.counts):
            yield pair, value

    def with_updates(self, updates: Dict[Tuple[int, int], int]) -> "MLTableau":
        """Return a copy with the given counts shifted by the given deltas."""
        values = list(self.counts)
        for (j, k), delta in updates.items():
            values[pair_index(self.rank, j, k)] += delta
        return MLTableau(rank=self.rank, counts=tuple(values))

    @classmethod
    def from_rows(cls, rank: int, rows: Dict[Tuple[int, int], int]) -> "MLTableau":
        """Build from a sparse {(j, k): n[j][k]} mapping."""
        values = [0] * rank_size(rank)
        for (j, k), value in rows.items():
            values[pair_index(rank, j, k)] = value
        return cls(rank=rank, counts=tuple(values))


class FullTableau(BaseModel):
    """
    Explicit tableau given row by row (top row first).

    Rows must be weakly increasing and columns strictly increasing (semistandard),
    with weakly decreasing row lengths. Membership in T(infinity) is a separate check.
    """
    model_config = ConfigDict(frozen=True)

    rows: Tuple[Tuple[int, ...], ...] = Field(..., min_length=1, description="Rows of letters, top row first")

    @field_validator('rows')
    def validate_semistandard(cls, rows):
        for index, row in enumerate(rows, start=1):
            if not row:
                raise ValueError(f"Row {index} is empty")
            if any(letter < 1 for letter in row):
                raise ValueError(f"Row {index} contains a letter below 1")
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                raise ValueError(f"Row {index} is not weakly increasing: {row}")
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                raise ValueError("Row lengths must be weakly decreasing")
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise ValueError("Columns must be strictly increasing")
        return rows

    @property
    def box_count(self) -> int:
        return sum(len(row) for row in self.rows)

    def is_marginally_large(self) -> bool:
        """
        Check the T(infinity) conditions: row j starts with j and holds exactly
        one more j-box than row j+1 holds boxes (row r+1 being empty).
        """
        top_letter = len(self.rows) + 1
        for j, row in enumerate(self.rows, start=1):
            if row[0] != j or row[-1] > top_letter:
                return False
            below = len(self.rows[j]) if j < len(self.rows) else 0
            if row.count(j) != below + 1:
                return False
        return True


class Box(BaseModel):
    """A box of a tableau: its letter and 1-based (row, column) position."""
    model_config = ConfigDict(frozen=True)

    letter: int = Field(..., ge=1)
    row: int = Field(..., ge=1)
    col: int = Field(..., ge=1)


class BoxWord(BaseModel):
    """Boxes in Far-Eastern reading order: columns right to left, each top to bottom."""
    model_config = ConfigDict(frozen=True)

    boxes: Tuple[Box, ...] = Field(default=())

    @property
    def letters(self) -> Tuple[int, ...]:
        return tuple(box.letter for box in self.boxes)

    def __len__(self) -> int:
        return len(self.boxes)


class Signature(BaseModel):
    """
    Result of the signature rule for one index i over a reading word.

    ``signs`` lists one symbol per box: "+" for letter i, "-" for letter i+1 and
    "." otherwise. ``reduced`` is the same sequence after cancelling every
    (+,-) pair, cancelled positions shown as ".". ``e_target`` / ``f_target``
    are the boxes of the rightmost surviving "-" and the leftmost surviving "+".
    """
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=1)
    signs: Tuple[str, ...]
    reduced: Tuple[str, ...]
    e_target: Optional[Box] = None
    f_target: Optional[Box] = None

    @property
    def phi(self) -> int:
        return self.reduced.count("+")

    @property
    def epsilon(self) -> int:
        return self.reduced.count("-")
