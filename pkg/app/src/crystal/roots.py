# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Type-A root system bookkeeping.

Positive roots of sl_{r+1} are the intervals [a,b] = alpha_a + ... + alpha_b.
Vectors are kept in simple-root coordinates and coroots are identified with roots,
so the simple reflections act by s_i(v) = v - <v, alpha_i^vee> alpha_i with the
type-A Cartan matrix.
"""

from typing import List, Tuple

from cachetools import cached

from src.common.caching import settings_cache
from src.crystal import ERR_INVALID_WORD, InvalidWordError, check_index, check_rank
from src.models.roots import Interval, LongWord, RootVector, SignedRootVector, rank_size
from src import logger


def positive_roots(r: int) -> List[Interval]:
    """All r(r+1)/2 positive roots, sorted by (a, b)."""
    check_rank(r)
    return [Interval(a=a, b=b) for a in range(1, r + 1) for b in range(a, r + 1)]


def default_long_word(r: int) -> LongWord:
    """The word (1; 2,1; 3,2,1; ...; r,...,1): row j of the triangle is (j, j-1, ..., 1)."""
    check_rank(r)
    word = tuple(i for j in range(1, r + 1) for i in range(j, 0, -1))
    return LongWord(rank=r, word=word)


def height(v: RootVector) -> int:
    """Sum of the simple-root coordinates."""
    return sum(v.coeffs)


def simple_root(r: int, i: int) -> RootVector:
    check_index(r, i)
    return RootVector(coeffs=tuple(1 if j == i else 0 for j in range(1, r + 1)))


def pairing(v: SignedRootVector, i: int) -> int:
    """<v, alpha_i^vee> = 2 v_i - v_{i-1} - v_{i+1}."""
    coeffs = v.coeffs
    left = coeffs[i - 2] if i >= 2 else 0
    right = coeffs[i] if i < len(coeffs) else 0
    return 2 * coeffs[i - 1] - left - right


def reflect(v: SignedRootVector, i: int) -> SignedRootVector:
    """Simple reflection s_i applied to v."""
    check_index(v.rank, i)
    values = list(v.coeffs)
    values[i - 1] -= pairing(v, i)
    return SignedRootVector(coeffs=tuple(values))


def interval_vector(r: int, interval: Interval) -> RootVector:
    if interval.b > r:
        raise ValueError(f"Interval {interval} exceeds rank {r}")
    return RootVector(coeffs=tuple(1 if interval.a <= i <= interval.b else 0 for i in range(1, r + 1)))


def interval_of(v: SignedRootVector) -> Interval:
    """The interval whose indicator vector is v; rejects anything that is not a positive root."""
    support = [i for i, c in enumerate(v.coeffs, start=1) if c != 0]
    if not support or any(v.coeffs[i - 1] != 1 for i in support):
        raise InvalidWordError(f"{ERR_INVALID_WORD}: {v.coeffs} is not a positive root")
    a, b = support[0], support[-1]
    if len(support) != b - a + 1:
        raise InvalidWordError(f"{ERR_INVALID_WORD}: {v.coeffs} is not a positive root")
    return Interval(a=a, b=b)


@cached(cache=settings_cache("word_roots"))
def _word_roots(r: int, word: Tuple[int, ...]) -> Tuple[Interval, ...]:
    roots = []
    seen = set()
    for k, letter in enumerate(word):
        v = SignedRootVector(coeffs=tuple(1 if j == letter else 0 for j in range(1, r + 1)))
        # s_{i_1} ... s_{i_{k-1}} applied right to left
        for previous in reversed(word[:k]):
            v = reflect(v, previous)
        root = interval_of(v)
        if root.sort_key() in seen:
            raise InvalidWordError(f"{ERR_INVALID_WORD}: root {root} repeats at position {k + 1}")
        seen.add(root.sort_key())
        roots.append(root)
    logger.debug(f"word_roots: r={r} word={word} -> {[str(root) for root in roots]}")
    return tuple(roots)


def word_roots(w: LongWord) -> List[Interval]:
    """
    Roots beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}) for k = 1..N.

    Raises:
        InvalidWordError: if some beta_k is not positive or a root repeats.
    """
    if len(w.word) != rank_size(w.rank):
        raise InvalidWordError(f"{ERR_INVALID_WORD}: wrong length {len(w.word)}")
    return list(_word_roots(w.rank, w.word))


def is_long_word(w: LongWord) -> bool:
    try:
        word_roots(w)
    except InvalidWordError:
        return False
    return True
