# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Crystal engine package.

Holds the type-A root bookkeeping, the marginally large tableau model of B(infinity),
the string and Lusztig parametrizations, exact series arithmetic and the MV-path /
quiver dictionary. Error messages and exception types shared by those modules live here.
"""

from typing import Optional

# Error messages
ERR_INVALID_WORD = "Invalid long word"
ERR_INVALID_RANK = "Rank must be a positive integer"
ERR_INDEX_RANGE = "Simple index out of range"
ERR_CONE_VIOLATION = "Not in the string cone"
ERR_CAP_MISMATCH = "Truncation caps differ"
ERR_PARSE = "Malformed input"
ERR_NOT_MARGINALLY_LARGE = "Tableau is not marginally large"
ERR_RANK_MISMATCH = "Rank mismatch"


class InvalidRankError(ValueError):
    """Raised for a rank below 1 or an index outside 1..r."""


class InvalidWordError(ValueError):
    """Raised when a word is not a reduced expression of the longest element."""


class ConeViolationError(ValueError):
    """Raised when a triangle violates the string cone inequalities."""


class CapMismatchError(ValueError):
    """Raised when two truncated series with different caps are compared."""


class TableauParseError(ValueError):
    """Raised for malformed element text; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.message = message
        self.position = position
        suffix = f" at position {position}" if position is not None else ""
        super().__init__(f"{ERR_PARSE}: {message}{suffix}")


def check_rank(r: int) -> int:
    if not isinstance(r, int) or r < 1:
        raise InvalidRankError(f"{ERR_INVALID_RANK}: {r!r}")
    return r


def check_index(r: int, i: int) -> int:
    if not 1 <= i <= r:
        raise InvalidRankError(f"{ERR_INDEX_RANGE}: i={i} for r={r}")
    return i
