# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
MV Path and Quiver Models Module

This module defines the two geometric readings of a Lusztig datum.

The module includes:
- PathStep / MVPathDatum: the vertex path of a stable MV polytope along a long word
- Summand / QuiverDecomposition: a representation of 1 <- 2 <- ... <- r as a
  multiset of interval indecomposables V(a,b)
"""

from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .roots import Interval, Rank, SignedRootVector


class PathStep(BaseModel):
    """One edge of the i-path: direction beta_k and length c_k."""
    model_config = ConfigDict(frozen=True)

    root: Interval
    length: int = Field(..., ge=0)


class MVPathDatum(BaseModel):
    """
    Vertices mu_0, ..., mu_N of the i-path of a stable MV polytope, with mu_0 = 0.

    Coweights are stored in root coordinates (type A identifies the two lattices).
    """
    model_config = ConfigDict(frozen=True)

    rank: Rank
    vertices: Tuple[SignedRootVector, ...]
    steps: Tuple[PathStep, ...]

    @model_validator(mode="after")
    def validate_path(self):
        if len(self.vertices) != len(self.steps) + 1:
            raise ValueError("An i-path has exactly one more vertex than steps")
        if any(c != 0 for c in self.vertices[0].coeffs):
            raise ValueError("The representative path starts at the origin")
        for k, step in enumerate(self.steps, start=1):
            delta = self.vertices[k] - self.vertices[k - 1]
            expected = tuple(
                step.length if step.root.a <= i <= step.root.b else 0
                for i in range(1, self.rank + 1)
            )
            if delta.coeffs != expected:
                raise ValueError(f"Vertex {k} is not vertex {k - 1} plus {step.length} * {step.root}")
        return self

    @property
    def end(self) -> SignedRootVector:
        return self.vertices[-1]

    @property
    def edge_count(self) -> int:
        """Number of edges of positive length along the path."""
        return sum(1 for step in self.steps if step.length > 0)


class Summand(BaseModel):
    """Interval indecomposable V(a,b) with its multiplicity."""
    model_config = ConfigDict(frozen=True)

    interval: Interval
    multiplicity: int = Field(..., gt=0)


class QuiverDecomposition(BaseModel):
    """
    Isomorphism class of a representation of 1 <- 2 <- ... <- r, given by its
    indecomposable summands sorted by (a, b). Zero multiplicities are never stored.
    """
    model_config = ConfigDict(frozen=True)

    rank: Rank
    summands: Tuple[Summand, ...] = Field(default=())

    @field_validator("summands")
    def sort_summands(cls, v):
        return tuple(sorted(v, key=lambda s: s.interval.sort_key()))

    @model_validator(mode="after")
    def validate_summands(self):
        seen = set()
        for summand in self.summands:
            key = summand.interval.sort_key()
            if key in seen:
                raise ValueError(f"Interval {summand.interval} listed twice")
            if summand.interval.b > self.rank:
                raise ValueError(f"Interval {summand.interval} exceeds rank {self.rank}")
            seen.add(key)
        return self

    @classmethod
    def from_multiplicities(cls, rank: int, multiplicities: Dict[Tuple[int, int], int]) -> "QuiverDecomposition":
        summands = []
        for (a, b), m in multiplicities.items():
            if m < 0:
                raise ValueError(f"Negative multiplicity {m} for [{a},{b}]")
            if m:
                summands.append(Summand(interval=Interval(a=a, b=b), multiplicity=m))
        return cls(rank=rank, summands=tuple(summands))

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return {s.interval.sort_key(): s.multiplicity for s in self.summands}
