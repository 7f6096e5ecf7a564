# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Series Models Module

This module defines exact integer polynomials in u = 1/t and the truncated
multivariate series in z whose coefficients are such polynomials. Both sides of
the Gindikin-Karpelevich identity are TruncatedSeries values.

The module includes:
- UPoly: dense integer polynomial in u, canonical (no trailing zeros)
- TruncatedSeries: sparse map exponent -> UPoly, exponents of height <= cap
- Mismatch / MatchReport: coefficientwise comparison results
- KostantCheck / VerificationReport: the full verification summary
"""

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .roots import Rank, RootVector

Exponent = Tuple[int, ...]
Number = Union[int, Fraction]


def exponent_key(exponent: Exponent) -> Tuple[int, Exponent]:
    """Graded order on exponents: by height, then coordinates ascending."""
    return (sum(exponent), exponent)


class UPoly(BaseModel):
    """Integer polynomial in u stored densely by degree (index m holds the u^m coefficient)."""
    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[int, ...] = Field(default=(), description="Coefficients by u-degree")

    @field_validator('coeffs')
    def strip_trailing_zeros(cls, v):
        values = list(v)
        while values and values[-1] == 0:
            values.pop()
        return tuple(values)

    @classmethod
    def constant(cls, value: int) -> "UPoly":
        return cls(coeffs=(value,))

    @classmethod
    def one_minus_u(cls, power: int = 1) -> "UPoly":
        """(1 - u)^power by the binomial theorem."""
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls(coeffs=tuple((-1) ** m * comb(power, m) for m in range(power + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "UPoly") -> "UPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return UPoly(coeffs=tuple(
            (self.coeffs[m] if m < len(self.coeffs) else 0) + (other.coeffs[m] if m < len(other.coeffs) else 0)
            for m in range(size)
        ))

    def __neg__(self) -> "UPoly":
        return UPoly(coeffs=tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other: "UPoly") -> "UPoly":
        if self.is_zero() or other.is_zero():
            return UPoly()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for m, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for n, b in enumerate(other.coeffs):
                product[m + n] += a * b
        return UPoly(coeffs=tuple(product))

    def __pow__(self, power: int) -> "UPoly":
        if power < 0:
            raise ValueError("power must be nonnegative")
        result = UPoly.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def evaluate(self, u: Number) -> Number:
        value: Number = 0
        for c in reversed(self.coeffs):
            value = value * u + c
        return value

    def to_one_minus_u_basis(self) -> Tuple[int, ...]:
        """Coordinates d_k with p(u) = sum_k d_k (1 - u)^k."""
        return tuple(
            (-1) ** k * sum(c * comb(i, k) for i, c in enumerate(self.coeffs) if i >= k)
            for k in range(len(self.coeffs))
        )

    def to_text(self) -> str:
        """Comma-separated coefficients by u-degree; the zero polynomial is "0"."""
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for m, c in enumerate(self.coeffs):
            if c == 0:
                continue
            monomial = "" if m == 0 else ("u" if m == 1 else f"u^{m}")
            magnitude = abs(c)
            body = str(magnitude) if not monomial else (monomial if magnitude == 1 else f"{magnitude}*{monomial}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


class TruncatedSeries(BaseModel):
    """
    Sparse series sum_mu P_mu(u) z^mu over exponents mu of height <= cap.

    Exponents are the coordinate tuples of RootVector values. No stored exponent
    exceeds the cap and no zero polynomial is stored.
    """
    model_config = ConfigDict(frozen=True)

    rank: Rank
    cap: int = Field(..., ge=0, description="Maximal exponent height kept")
    terms: Dict[Exponent, UPoly] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_terms(self):
        for exponent, poly in self.terms.items():
            if len(exponent) != self.rank:
                raise ValueError(f"Exponent {exponent} does not have length {self.rank}")
            if any(x < 0 for x in exponent):
                raise ValueError(f"Exponent {exponent} has a negative coordinate")
            if sum(exponent) > self.cap:
                raise ValueError(f"Exponent {exponent} exceeds the truncation cap {self.cap}")
            if poly.is_zero():
                raise ValueError(f"Zero coefficient stored at exponent {exponent}")
        return self

    @classmethod
    def from_terms(cls, rank: int, cap: int, terms: Dict[Exponent, UPoly]) -> "TruncatedSeries":
        """Build a series, dropping zero coefficients and exponents above the cap."""
        kept = {
            tuple(exponent): poly
            for exponent, poly in terms.items()
            if not poly.is_zero() and sum(exponent) <= cap
        }
        return cls(rank=rank, cap=cap, terms=kept)

    @classmethod
    def from_weighted(cls, rank: int, cap: int, items: Iterable[Tuple[Exponent, int]]) -> "TruncatedSeries":
        """Sum (1 - u)^power z^exponent over (exponent, power) pairs."""
        powers: Dict[Exponent, Dict[int, int]] = {}
        for exponent, power in items:
            bucket = powers.setdefault(tuple(exponent), {})
            bucket[power] = bucket.get(power, 0) + 1
        terms = {}
        for exponent, bucket in powers.items():
            poly = UPoly()
            for power, multiplicity in bucket.items():
                poly = poly + UPoly.one_minus_u(power) * UPoly.constant(multiplicity)
            terms[exponent] = poly
        return cls.from_terms(rank, cap, terms)

    @classmethod
    def one(cls, rank: int, cap: int) -> "TruncatedSeries":
        return cls(rank=rank, cap=cap, terms={(0,) * rank: UPoly.constant(1)})

    def coefficient(self, exponent: Union[Exponent, RootVector]) -> UPoly:
        key = exponent.coeffs if isinstance(exponent, RootVector) else tuple(exponent)
        return self.terms.get(key, UPoly())

    def exponents(self) -> List[Exponent]:
        return sorted(self.terms, key=exponent_key)

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.rank != other.rank:
            raise ValueError(f"Series ranks differ: {self.rank} != {other.rank}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        cap = min(self.cap, other.cap)
        terms: Dict[Exponent, UPoly] = {}
        for source in (self.terms, other.terms):
            for exponent, poly in source.items():
                if sum(exponent) <= cap:
                    terms[exponent] = terms.get(exponent, UPoly()) + poly
        return TruncatedSeries.from_terms(self.rank, cap, terms)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        cap = min(self.cap, other.cap)
        terms: Dict[Exponent, UPoly] = {}
        for left, p in self.terms.items():
            left_height = sum(left)
            for right, q in other.terms.items():
                if left_height + sum(right) > cap:
                    continue
                exponent = tuple(x + y for x, y in zip(left, right))
                terms[exponent] = terms.get(exponent, UPoly()) + p * q
        return TruncatedSeries.from_terms(self.rank, cap, terms)

    def evaluate(self, u: Number) -> Dict[Exponent, Number]:
        """Specialize u; exponents whose coefficient vanishes are dropped."""
        values = {exponent: poly.evaluate(u) for exponent, poly in self.terms.items()}
        return {exponent: value for exponent, value in values.items() if value != 0}

    def to_rows(self) -> List[Tuple[Exponent, UPoly]]:
        return [(exponent, self.terms[exponent]) for exponent in self.exponents()]


class Mismatch(BaseModel):
    """One exponent where two series disagree."""
    exponent: Exponent
    lhs: UPoly
    rhs: UPoly


class MatchReport(BaseModel):
    """Result of a coefficientwise comparison at a common cap."""
    cap: int
    terms_checked: int = Field(..., description="Number of exponents present on either side")
    mismatches: List[Mismatch] = Field(default_factory=list)

    @property
    def matched(self) -> bool:
        return not self.mismatches


class KostantCheck(BaseModel):
    """u = 0 cross-check against the Kostant partition function."""
    exponents_checked: int
    failures: List[Tuple[Exponent, int, int]] = Field(
        default_factory=list,
        description="(exponent, series value at u=0, Kostant count) for every disagreement",
    )

    @property
    def passed(self) -> bool:
        return not self.failures


class VerificationReport(BaseModel):
    """Full verification summary for one (rank, depth)."""
    rank: int
    depth: int
    strategy: str
    elements: int = Field(..., description="Number of crystal elements summed")
    sides: Dict[str, MatchReport] = Field(default_factory=dict, description="Product side compared against each sum side")
    kostant: Optional[KostantCheck] = None
    u_one_constant: bool = Field(True, description="Whether the tableau side collapses to 1 at u = 1")
    positivity: bool = Field(True, description="Whether every coefficient has nonnegative (1-u)^k coordinates")

    @property
    def matched(self) -> bool:
        kostant_ok = self.kostant.passed if self.kostant is not None else True
        return (
            all(report.matched for report in self.sides.values())
            and kostant_ok
            and self.u_one_constant
            and self.positivity
        )

    def mismatch_count(self) -> int:
        return sum(len(report.mismatches) for report in self.sides.values())
