# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Root System Models Module

This module defines the type-A root-system value types used throughout the engine.
Roots, weights, dimension vectors and series exponents all live in simple-root
coordinates; coroots are identified with roots, so one vector type serves all of them.

The module includes:
- Interval: a positive root alpha_a + ... + alpha_b
- SignedRootVector: an integer vector in simple-root coordinates (Weyl images may be negative)
- RootVector: a nonnegative integer vector in simple-root coordinates
- LongWord: a word in the simple reflections of the length of the longest element
"""

from typing import Annotated, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Rank = Annotated[int, Field(ge=1, description="Number of simple roots r (type A_r)")]


def rank_size(r: int) -> int:
    """Number of positive roots N = r(r+1)/2."""
    return r * (r + 1) // 2


class Interval(BaseModel):
    """
    Positive root alpha_a + alpha_{a+1} + ... + alpha_b, written [a,b].

    Also indexes the interval indecomposable quiver representation V(a,b).
    """
    model_config = ConfigDict(frozen=True)

    a: int = Field(..., ge=1, description="First simple index of the interval")
    b: int = Field(..., ge=1, description="Last simple index of the interval")

    @model_validator(mode="after")
    def validate_order(self):
        if self.a > self.b:
            raise ValueError(f"Interval requires a <= b, got [{self.a},{self.b}]")
        return self

    @property
    def height(self) -> int:
        return self.b - self.a + 1

    def sort_key(self) -> Tuple[int, int]:
        return (self.a, self.b)

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


class SignedRootVector(BaseModel):
    """Integer vector of length r in simple-root coordinates."""
    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[int, ...] = Field(..., min_length=1, description="Simple-root coordinates")

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "SignedRootVector") -> "SignedRootVector":
        if len(other.coeffs) != len(self.coeffs):
            raise ValueError("Cannot add root vectors of different ranks")
        return SignedRootVector(coeffs=tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SignedRootVector") -> "SignedRootVector":
        if len(other.coeffs) != len(self.coeffs):
            raise ValueError("Cannot subtract root vectors of different ranks")
        return SignedRootVector(coeffs=tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def scale(self, factor: int) -> "SignedRootVector":
        return SignedRootVector(coeffs=tuple(factor * x for x in self.coeffs))

    @classmethod
    def zero(cls, r: int) -> "SignedRootVector":
        return cls(coeffs=(0,) * r)


class RootVector(BaseModel):
    """
    Nonnegative integer vector in simple-root coordinates.

    Houses -wt(b), dimension vectors of quiver representations and series exponents.
    """
    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[int, ...] = Field(..., min_length=1, description="Simple-root coordinates")

    @field_validator('coeffs')
    def validate_nonnegative(cls, v):
        if any(x < 0 for x in v):
            raise ValueError(f"RootVector coordinates must be nonnegative, got {v}")
        return v

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __add__(self, other: "RootVector") -> "RootVector":
        if len(other.coeffs) != len(self.coeffs):
            raise ValueError("Cannot add root vectors of different ranks")
        return RootVector(coeffs=tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def as_signed(self) -> SignedRootVector:
        return SignedRootVector(coeffs=self.coeffs)

    @classmethod
    def zero(cls, r: int) -> "RootVector":
        return cls(coeffs=(0,) * r)


class LongWord(BaseModel):
    """
    Word (i_1, ..., i_N) in the simple reflections with N = r(r+1)/2.

    Only length and alphabet are checked here; reducedness is checked by
    ``src.crystal.roots.word_roots`` (all roots positive and pairwise distinct).
    """
    model_config = ConfigDict(frozen=True)

    rank: Rank
    word: Tuple[int, ...] = Field(..., min_length=1, description="Simple indices in application order")

    @model_validator(mode="after")
    def validate_shape(self):
        expected = rank_size(self.rank)
        if len(self.word) != expected:
            raise ValueError(f"A long word for r={self.rank} has length {expected}, got {len(self.word)}")
        for letter in self.word:
            if not 1 <= letter <= self.rank:
                raise ValueError(f"Simple index {letter} out of range 1..{self.rank}")
        return self

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return "(" + ",".join(str(i) for i in self.word) + ")"
