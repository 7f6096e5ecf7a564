# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Gindikin-Karpelevich verifier.

Both sides of

    prod_{alpha > 0} (1 - u z^alpha) / (1 - z^alpha) = sum_{b in B(infinity)} (1 - u)^seg(b) z^(-wt b)

are expanded as TruncatedSeries up to a total exponent height D and compared
coefficientwise. The crystal sum is also formed through the string, Lusztig, MV-path
and quiver statistics, and the result is specialized at u = 0 (Kostant partition
function) and u = 1 (the constant 1).
"""

import json
from typing import Dict, Iterator, List, Optional, Set, Tuple

from cachetools import cached

from src.common.caching import settings_cache
from src.common.config import VALID_STRATEGIES, get_settings
from src.crystal import ERR_CAP_MISMATCH, CapMismatchError, check_rank
from src.crystal import mvquiver
from src.crystal.roots import interval_vector, positive_roots
from src.crystal.strings import bzl_path, nc, nz, to_lusztig
from src.crystal.tableaux import f, highest, seg, weight_neg
from src.models.roots import RootVector
from src.models.series import (
    Exponent,
    KostantCheck,
    MatchReport,
    Mismatch,
    TruncatedSeries,
    UPoly,
    VerificationReport,
    exponent_key,
)
from src.models.tableau import MLTableau
from src import logger

SIDES = ("tableau", "string", "lusztig", "polytope", "quiver")


def product_side(r: int, D: int) -> TruncatedSeries:
    """prod over positive roots of (1 + (1 - u) sum_{m >= 1} z^(m alpha)), truncated at height D."""
    check_rank(r)
    if D < 0:
        raise ValueError(f"Truncation cap must be nonnegative, got {D}")
    result = TruncatedSeries.one(r, D)
    one_minus_u = UPoly.one_minus_u(1)
    for root in positive_roots(r):
        alpha = interval_vector(r, root).coeffs
        terms = {(0,) * r: UPoly.constant(1)}
        for m in range(1, D // root.height + 1):
            terms[tuple(m * x for x in alpha)] = one_minus_u
        result = result * TruncatedSeries.from_terms(r, D, terms)
    logger.debug(f"product_side: r={r} D={D} terms={len(result.terms)}")
    return result


def canonical_key(b: MLTableau) -> Tuple[int, Exponent, Tuple[int, ...]]:
    """(height of -wt, -wt coordinates, counts) so depth layers stay contiguous."""
    weight = weight_neg(b).coeffs
    return (sum(weight), weight, b.counts)


def _bfs(r: int, D: int) -> Set[MLTableau]:
    seen = {highest(r)}
    layer = [highest(r)]
    for depth in range(1, D + 1):
        following = set()
        for b in layer:
            for i in range(1, r + 1):
                following.add(f(b, i))
        layer = list(following - seen)
        seen.update(layer)
        logger.debug(f"enumerate_crystal: r={r} depth={depth} layer={len(layer)}")
    return seen


def _direct(r: int, D: int) -> Iterator[MLTableau]:
    pairs = [(j, k) for j in range(1, r + 1) for k in range(j + 1, r + 2)]
    counts: List[int] = []

    def extend(index: int, budget: int) -> Iterator[MLTableau]:
        if index == len(pairs):
            yield MLTableau(rank=r, counts=tuple(counts))
            return
        j, k = pairs[index]
        for value in range(budget // (k - j) + 1):
            counts.append(value)
            yield from extend(index + 1, budget - value * (k - j))
            counts.pop()

    yield from extend(0, D)


def enumerate_crystal(r: int, D: int, strategy: Optional[str] = None) -> List[MLTableau]:
    """
    All b with height(-wt b) <= D, each once, in canonical order.

    ``bfs`` applies every f_i layer by layer from b_infinity; ``direct`` lists every
    counts table with sum n[j][k] (k - j) <= D.
    """
    check_rank(r)
    if D < 0:
        raise ValueError(f"Truncation cap must be nonnegative, got {D}")
    strategy = strategy or get_settings().STRATEGY
    if strategy not in VALID_STRATEGIES:
        raise ValueError(f"Unknown strategy {strategy!r}, expected one of {VALID_STRATEGIES}")
    elements = _bfs(r, D) if strategy == "bfs" else _direct(r, D)
    ordered = sorted(elements, key=canonical_key)
    logger.debug(f"enumerate_crystal: r={r} D={D} strategy={strategy} elements={len(ordered)}")
    return ordered


def _elements(r: int, D: int, strategy: Optional[str], elements: Optional[List[MLTableau]]) -> List[MLTableau]:
    return elements if elements is not None else enumerate_crystal(r, D, strategy)


def sum_side(r: int, D: int, strategy: Optional[str] = None, elements: Optional[List[MLTableau]] = None) -> TruncatedSeries:
    """sum over b of (1 - u)^seg(b) z^(-wt b)."""
    items = [(weight_neg(b).coeffs, seg(b)) for b in _elements(r, D, strategy, elements)]
    return TruncatedSeries.from_weighted(r, D, items)


def string_side(r: int, D: int, strategy: Optional[str] = None, elements: Optional[List[MLTableau]] = None) -> TruncatedSeries:
    """sum over b of (1 - u)^nc(psi b) z^(-wt b), psi computed through e-operators."""
    items = [(weight_neg(b).coeffs, nc(bzl_path(b))) for b in _elements(r, D, strategy, elements)]
    return TruncatedSeries.from_weighted(r, D, items)


def lusztig_side(r: int, D: int, strategy: Optional[str] = None, elements: Optional[List[MLTableau]] = None) -> TruncatedSeries:
    """sum over b of (1 - u)^nz(phi b) z^(-wt b)."""
    items = [(weight_neg(b).coeffs, nz(to_lusztig(bzl_path(b)))) for b in _elements(r, D, strategy, elements)]
    return TruncatedSeries.from_weighted(r, D, items)


def compare(lhs: TruncatedSeries, rhs: TruncatedSeries) -> MatchReport:
    """
    Coefficientwise comparison in canonical exponent order.

    Raises:
        CapMismatchError: the two series are truncated at different heights.
    """
    if lhs.cap != rhs.cap:
        raise CapMismatchError(f"{ERR_CAP_MISMATCH}: {lhs.cap} != {rhs.cap}")
    if lhs.rank != rhs.rank:
        raise ValueError(f"Series ranks differ: {lhs.rank} != {rhs.rank}")
    exponents = sorted(set(lhs.terms) | set(rhs.terms), key=exponent_key)
    mismatches = [
        Mismatch(exponent=exponent, lhs=lhs.coefficient(exponent), rhs=rhs.coefficient(exponent))
        for exponent in exponents
        if lhs.coefficient(exponent) != rhs.coefficient(exponent)
    ]
    return MatchReport(cap=lhs.cap, terms_checked=len(exponents), mismatches=mismatches)


def exponents_up_to(r: int, D: int) -> Iterator[Exponent]:
    """Every nonnegative exponent of length r and height <= D, graded order."""
    def compositions(length: int, total: int) -> Iterator[Exponent]:
        if length == 1:
            yield (total,)
            return
        for head in range(total + 1):
            for tail in compositions(length - 1, total - head):
                yield (head,) + tail

    for height in range(D + 1):
        yield from sorted(compositions(r, height))


@cached(cache=settings_cache("kostant"))
def kostant_table(r: int, D: int) -> Dict[Exponent, int]:
    """Kostant partition function on every exponent of height <= D (coin-change DP over positive roots)."""
    check_rank(r)
    order = list(exponents_up_to(r, D))
    ways = {exponent: 0 for exponent in order}
    ways[(0,) * r] = 1
    for root in positive_roots(r):
        alpha = interval_vector(r, root).coeffs
        for exponent in order:
            rest = tuple(x - a for x, a in zip(exponent, alpha))
            if min(rest) >= 0:
                ways[exponent] += ways[rest]
    return ways


def kostant(r: int, mu) -> int:
    """Number of multisets of positive roots summing to mu."""
    exponent = mu.coeffs if isinstance(mu, RootVector) else tuple(mu)
    if len(exponent) != r:
        raise ValueError(f"Exponent {exponent} does not have length {r}")
    if min(exponent) < 0:
        return 0
    return kostant_table(r, sum(exponent))[exponent]


def kostant_check(series: TruncatedSeries) -> KostantCheck:
    """The u = 0 specialization must equal the Kostant partition function at every exponent."""
    table = kostant_table(series.rank, series.cap)
    failures = []
    for exponent, count in table.items():
        value = series.coefficient(exponent).evaluate(0)
        if value != count:
            failures.append((exponent, value, count))
    return KostantCheck(exponents_checked=len(table), failures=failures)


def collapses_to_one(series: TruncatedSeries) -> bool:
    """At u = 1 only b_infinity survives."""
    return series.evaluate(1) == {(0,) * series.rank: 1}


def is_positive(series: TruncatedSeries) -> bool:
    """Every coefficient has nonnegative coordinates in the (1 - u)^k basis."""
    return all(min(poly.to_one_minus_u_basis()) >= 0 for poly in series.terms.values())


def verify_all(r: int, D: int, strategy: Optional[str] = None) -> VerificationReport:
    """Product side against every sum side, plus the u = 0 and u = 1 specializations."""
    strategy = strategy or get_settings().STRATEGY
    elements = enumerate_crystal(r, D, strategy)
    product = product_side(r, D)
    tableau = sum_side(r, D, elements=elements)
    built = {
        "tableau": tableau,
        "string": string_side(r, D, elements=elements),
        "lusztig": lusztig_side(r, D, elements=elements),
        "polytope": mvquiver.polytope_side(r, D),
        "quiver": mvquiver.quiver_side(r, D),
    }
    sides = {name: compare(product, built[name]) for name in SIDES}
    report = VerificationReport(
        rank=r,
        depth=D,
        strategy=strategy,
        elements=len(elements),
        sides=sides,
        kostant=kostant_check(tableau),
        u_one_constant=collapses_to_one(tableau),
        positivity=is_positive(tableau),
    )
    logger.debug(f"verify_all: r={r} D={D} matched={report.matched} mismatches={report.mismatch_count()}")
    return report


def series_to_tsv(series: TruncatedSeries) -> str:
    """One line per exponent: coordinates, a tab, coefficients by u-degree."""
    lines = [
        ",".join(str(x) for x in exponent) + "\t" + poly.to_text()
        for exponent, poly in series.to_rows()
    ]
    return "\n".join(lines) + "\n" if lines else ""


def series_to_json(series: TruncatedSeries) -> str:
    payload = {
        "rank": series.rank,
        "cap": series.cap,
        "terms": [
            {"exponent": list(exponent), "coefficients": list(poly.coeffs)}
            for exponent, poly in series.to_rows()
        ],
    }
    return json.dumps(payload, indent=2)
