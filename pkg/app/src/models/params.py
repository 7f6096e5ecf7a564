# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Parametrization Models Module

This module defines the two triangular parametrizations of B(infinity) attached to
the long word (1; 2,1; 3,2,1; ...; r,...,1).

The module includes:
- StringParam: the string (BZL path) triangle a[j][l], with computed circle decorations
- LusztigDatum: the word-aligned Lusztig exponent vector, grouped in the same rows
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .roots import Rank


def _validate_triangle(rank: int, rows: Tuple[Tuple[int, ...], ...], label: str) -> None:
    if len(rows) != rank:
        raise ValueError(f"{label} of rank {rank} needs {rank} rows, got {len(rows)}")
    for j, row in enumerate(rows, start=1):
        if len(row) != j:
            raise ValueError(f"{label} row {j} must have {j} entries, got {len(row)}")


class StringParam(BaseModel):
    """
    String parametrization psi(b) as the triangle a[j][l], 1 <= l <= j <= r.

    Row j is read left to right as a[j][1], ..., a[j][j]. Circles are derived, never
    stored: a[j][l] is circled iff it equals its right neighbour, entries past the
    end of a row counting as zero. Cone membership is checked by the engine.
    """
    model_config = ConfigDict(frozen=True)

    rank: Rank
    rows: Tuple[Tuple[int, ...], ...] = Field(..., description="Triangle rows a[j][1..j], j = 1..r")

    @model_validator(mode="after")
    def validate_shape(self):
        _validate_triangle(self.rank, self.rows, "StringParam")
        return self

    def entry(self, j: int, l: int) -> int:
        """a[j][l] with the out-of-triangle convention a[j][j+1] = 0."""
        if l == j + 1:
            return 0
        return self.rows[j - 1][l - 1]

    @property
    def circles(self) -> Tuple[Tuple[bool, ...], ...]:
        return tuple(
            tuple(self.entry(j, l) == self.entry(j, l + 1) for l in range(1, j + 1))
            for j in range(1, self.rank + 1)
        )

    def flat(self) -> Tuple[int, ...]:
        return tuple(value for row in self.rows for value in row)


class LusztigDatum(BaseModel):
    """
    Lusztig parametrization phi(b) = (c_1, ..., c_N), grouped in rows of the word.

    Row j holds the j exponents attached to the word segment (j, j-1, ..., 1).
    """
    model_config = ConfigDict(frozen=True)

    rank: Rank
    rows: Tuple[Tuple[int, ...], ...] = Field(..., description="Exponent rows, row j has j entries")

    @model_validator(mode="after")
    def validate_entries(self):
        _validate_triangle(self.rank, self.rows, "LusztigDatum")
        if any(value < 0 for row in self.rows for value in row):
            raise ValueError("LusztigDatum entries must be nonnegative")
        return self

    def flat(self) -> Tuple[int, ...]:
        """The word-aligned vector (c_1, ..., c_N)."""
        return tuple(value for row in self.rows for value in row)

    @classmethod
    def from_flat(cls, rank: int, values) -> "LusztigDatum":
        values = tuple(values)
        rows = []
        start = 0
        for j in range(1, rank + 1):
            rows.append(values[start:start + j])
            start += j
        if start != len(values):
            raise ValueError(f"LusztigDatum of rank {rank} needs {start} entries, got {len(values)}")
        return cls(rank=rank, rows=tuple(rows))
