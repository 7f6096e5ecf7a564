# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""Shortcuts for building elements in tests."""

from functools import lru_cache
from typing import Dict, Tuple

from src.crystal.series import enumerate_crystal
from src.crystal.tableaux import parse_tableau
from src.models.tableau import MLTableau


def element(text: str) -> MLTableau:
    """Reduced-form text such as "2,3/3"."""
    return parse_tableau(text)


def counts_of(b: MLTableau) -> Dict[Tuple[int, int], int]:
    return {pair: value for pair, value in b.items() if value}


@lru_cache(maxsize=None)
def elements(r: int, depth: int) -> Tuple[MLTableau, ...]:
    return tuple(enumerate_crystal(r, depth, "direct"))
