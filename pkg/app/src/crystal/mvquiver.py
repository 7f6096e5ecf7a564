# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
MV-path and quiver readings of a Lusztig datum.

A datum c = (c_1, ..., c_N) aligned with a long word with roots beta_1, ..., beta_N is
read two ways:
- as the edge lengths of the i-path 0 = mu_0, mu_1, ..., mu_N of a stable MV polytope,
  mu_k = mu_{k-1} + c_k beta_k
- as the representation of 1 <- 2 <- ... <- r whose summand V(a,b) occurs c_k times,
  where beta_k = [a,b]

The number of edges of positive length and the number of distinct summands both equal
the number of nonzero entries of c, which gives two more sum sides for the identity.
"""

from typing import Iterator, List, Optional

from src.crystal import ERR_INVALID_WORD, InvalidWordError, TableauParseError
from src.crystal.libs import text_codec
from src.crystal.roots import default_long_word, interval_vector, word_roots
from src.models.params import LusztigDatum
from src.models.quiver import MVPathDatum, PathStep, QuiverDecomposition
from src.models.roots import LongWord, RootVector, SignedRootVector
from src.models.series import TruncatedSeries
from src import logger


def _word(r: int, w: Optional[LongWord]) -> LongWord:
    if w is None:
        return default_long_word(r)
    if w.rank != r:
        raise InvalidWordError(f"{ERR_INVALID_WORD}: word of rank {w.rank} used with a datum of rank {r}")
    return w


def lusztig_to_path(c: LusztigDatum, w: Optional[LongWord] = None) -> MVPathDatum:
    """Vertices mu_k = sum_{m <= k} c_m beta_m, starting at the origin."""
    r = c.rank
    roots = word_roots(_word(r, w))
    vertex = SignedRootVector.zero(r)
    vertices = [vertex]
    steps = []
    for root, length in zip(roots, c.flat()):
        vertex = vertex + interval_vector(r, root).as_signed().scale(length)
        vertices.append(vertex)
        steps.append(PathStep(root=root, length=length))
    return MVPathDatum(rank=r, vertices=tuple(vertices), steps=tuple(steps))


def lusztig_to_quiver(c: LusztigDatum, w: Optional[LongWord] = None) -> QuiverDecomposition:
    """Summand V(a,b) with multiplicity c_k for beta_k = [a,b]."""
    r = c.rank
    multiplicities = {}
    for root, m in zip(word_roots(_word(r, w)), c.flat()):
        key = root.sort_key()
        multiplicities[key] = multiplicities.get(key, 0) + m
    return QuiverDecomposition.from_multiplicities(r, multiplicities)


def quiver_to_lusztig(d: QuiverDecomposition, w: Optional[LongWord] = None) -> LusztigDatum:
    """Inverse of lusztig_to_quiver: c_k is the multiplicity of beta_k."""
    multiplicities = d.as_dict()
    values = [multiplicities.get(root.sort_key(), 0) for root in word_roots(_word(d.rank, w))]
    return LusztigDatum.from_flat(d.rank, values)


def gamma(d: QuiverDecomposition) -> int:
    """Number of distinct indecomposable summands."""
    return len(d.summands)


def dim_vector(d: QuiverDecomposition) -> RootVector:
    total = RootVector.zero(d.rank)
    for summand in d.summands:
        vector = interval_vector(d.rank, summand.interval)
        total = total + RootVector(coeffs=tuple(summand.multiplicity * x for x in vector.coeffs))
    return total


def enumerate_lusztig(r: int, D: int, w: Optional[LongWord] = None) -> Iterator[LusztigDatum]:
    """
    Every datum with sum_k c_k ht(beta_k) <= D, in lexicographic order of (c_1, ..., c_N).

    Independent of the tableau code: the bound is the height of the final vertex.
    """
    heights = [root.height for root in word_roots(_word(r, w))]
    values: List[int] = []

    def extend(k: int, budget: int) -> Iterator[LusztigDatum]:
        if k == len(heights):
            yield LusztigDatum.from_flat(r, values)
            return
        for value in range(budget // heights[k] + 1):
            values.append(value)
            yield from extend(k + 1, budget - value * heights[k])
            values.pop()

    yield from extend(0, D)


def polytope_side(r: int, D: int) -> TruncatedSeries:
    """Sum over MV paths of (1 - u)^(edges of positive length) z^(end vertex)."""
    items = []
    for c in enumerate_lusztig(r, D):
        path = lusztig_to_path(c)
        items.append((path.end.coeffs, path.edge_count))
    logger.debug(f"polytope_side: r={r} D={D} paths={len(items)}")
    return TruncatedSeries.from_weighted(r, D, items)


def quiver_side(r: int, D: int) -> TruncatedSeries:
    """Sum over decompositions of (1 - u)^gamma z^(dimension vector)."""
    items = []
    for c in enumerate_lusztig(r, D):
        d = lusztig_to_quiver(c)
        items.append((dim_vector(d).coeffs, gamma(d)))
    logger.debug(f"quiver_side: r={r} D={D} decompositions={len(items)}")
    return TruncatedSeries.from_weighted(r, D, items)


def format_decomposition(d: QuiverDecomposition) -> str:
    return text_codec.format_tokens((s.interval.a, s.interval.b, s.multiplicity) for s in d.summands)


def parse_decomposition(text: str, rank: int) -> QuiverDecomposition:
    """
    Parse "[a,b]xm" tokens; a repeated interval adds up.

    Raises:
        TableauParseError: malformed tokens or an interval outside 1..rank.
    """
    multiplicities = {}
    for a, b, m, position in text_codec.parse_tokens(text):
        if not 1 <= a <= b <= rank:
            raise TableauParseError(f"interval [{a},{b}] outside 1..{rank}", position)
        multiplicities[(a, b)] = multiplicities.get((a, b), 0) + m
    return QuiverDecomposition.from_multiplicities(rank, multiplicities)
