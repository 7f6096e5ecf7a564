# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""Hypothesis strategies for crystal elements."""

from hypothesis import strategies as st

from src.models.roots import rank_size
from src.models.tableau import MLTableau


@st.composite
def ml_tableaux(draw, min_rank: int = 1, max_rank: int = 4, max_count: int = 3):
    r = draw(st.integers(min_value=min_rank, max_value=max_rank))
    size = rank_size(r)
    counts = draw(st.lists(st.integers(min_value=0, max_value=max_count), min_size=size, max_size=size))
    return MLTableau(rank=r, counts=tuple(counts))


@st.composite
def tableau_and_index(draw, max_rank: int = 4, max_count: int = 3):
    b = draw(ml_tableaux(max_rank=max_rank, max_count=max_count))
    i = draw(st.integers(min_value=1, max_value=b.rank))
    return b, i
