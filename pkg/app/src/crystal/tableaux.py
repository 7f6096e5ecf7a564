# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Marginally large tableaux: the T(infinity) model of B(infinity) in type A_r.

An element is stored through its reduced form as counts n[j][k]. Row j of the full
tableau is forced to be (|row j+1| + 1) required j-boxes followed by the variable
boxes in increasing letter order, so materializing an element is a bottom-up pass.

The Kashiwara operators follow the tableau procedure: locate the acting box with the
signature rule over the Far-Eastern reading word (columns right to left, each column
top to bottom), change its letter, then restore marginal largeness by inserting or
removing a column 1..i. In counts form the shape maintenance is implicit, because
required boxes are recomputed from the variable ones.
"""

from typing import List, Optional, Sequence, Tuple

from cachetools import cached

from src.common.caching import settings_cache
from src.crystal import ERR_NOT_MARGINALLY_LARGE, check_index, check_rank
from src.crystal.libs import text_codec
from src.models.roots import RootVector
from src.models.tableau import Box, BoxWord, FullTableau, MLTableau, Signature
from src import logger

PLUS, MINUS, BLANK = "+", "-", "."

_rows_cache = settings_cache("rows")
_f_cache = settings_cache("f")
_e_cache = settings_cache("e")

Triple = Tuple[int, int, int]


def highest(r: int) -> MLTableau:
    """The weight-zero element b_infinity: all counts zero."""
    check_rank(r)
    return MLTableau(rank=r, counts=(0,) * (r * (r + 1) // 2))


@cached(cache=_rows_cache)
def _rows(b: MLTableau) -> Tuple[Tuple[int, ...], ...]:
    r = b.rank
    rows: List[Tuple[int, ...]] = [()] * r
    below = 0
    for j in range(r, 0, -1):
        row = [j] * (below + 1)
        for k in range(j + 1, r + 2):
            row.extend([k] * b.n(j, k))
        rows[j - 1] = tuple(row)
        below = len(row)
    return tuple(rows)


def materialize(b: MLTableau) -> FullTableau:
    """The full tableau of b, required boxes included."""
    return FullTableau(rows=_rows(b))


def _reading(rows: Sequence[Sequence[int]]) -> List[Triple]:
    """(letter, row, col) triples in Far-Eastern order."""
    width = len(rows[0]) if rows else 0
    triples = []
    for col in range(width, 0, -1):
        for row_index, row in enumerate(rows, start=1):
            if len(row) < col:
                break
            triples.append((row[col - 1], row_index, col))
    return triples


def reading_word(t: FullTableau) -> BoxWord:
    """Far-Eastern reading: columns right to left, each column top to bottom."""
    return BoxWord(boxes=tuple(Box(letter=l, row=r, col=c) for l, r, c in _reading(t.rows)))


def _reduce(letters: Sequence[int], i: int) -> Tuple[List[str], List[str], Optional[int], Optional[int]]:
    """
    Signature rule on a letter sequence.

    Returns the raw signs, the reduced signs (cancelled positions blanked) and the
    positions of the rightmost surviving "-" and the leftmost surviving "+".
    """
    signs = [PLUS if letter == i else MINUS if letter == i + 1 else BLANK for letter in letters]
    reduced = list(signs)
    open_plus: List[int] = []
    for position, sign in enumerate(signs):
        if sign == PLUS:
            open_plus.append(position)
        elif sign == MINUS and open_plus:
            reduced[open_plus.pop()] = BLANK
            reduced[position] = BLANK
    minus_positions = [p for p, s in enumerate(reduced) if s == MINUS]
    e_position = minus_positions[-1] if minus_positions else None
    f_position = open_plus[0] if open_plus else None
    return signs, reduced, e_position, f_position


def signature(word: BoxWord, i: int) -> Signature:
    """The i-signature of any reading word (every +- pair cancelled)."""
    if i < 1:
        raise ValueError(f"Signature index must be positive, got {i}")
    signs, reduced, e_position, f_position = _reduce(word.letters, i)
    return Signature(
        index=i,
        signs=tuple(signs),
        reduced=tuple(reduced),
        e_target=word.boxes[e_position] if e_position is not None else None,
        f_target=word.boxes[f_position] if f_position is not None else None,
    )


def i_signature(b: MLTableau, i: int) -> Signature:
    """The i-signature of b over its materialized reading word."""
    check_index(b.rank, i)
    return signature(reading_word(materialize(b)), i)


def _target(b: MLTableau, i: int, raising: bool) -> Optional[Triple]:
    triples = _reading(_rows(b))
    _, _, e_position, f_position = _reduce([t[0] for t in triples], i)
    position = e_position if raising else f_position
    return triples[position] if position is not None else None


def f(b: MLTableau, i: int) -> MLTableau:
    """
    Lowering operator f_i. Always defined on T(infinity).

    The acting box is the leftmost surviving "+". A variable i in row j < i becomes
    i+1; a required i in row i turns into a variable i+1 after the column 1..i is
    re-inserted.
    """
    check_index(b.rank, i)
    return _f(b, i)


@cached(cache=_f_cache)
def _f(b: MLTableau, i: int) -> MLTableau:
    target = _target(b, i, raising=False)
    if target is None:
        # a required i always survives in row i
        raise RuntimeError(f"f_{i} found no acting box on {b.counts}")
    _, row, _ = target
    if row == i:
        return b.with_updates({(i, i + 1): 1})
    return b.with_updates({(row, i): -1, (row, i + 1): 1})


def e(b: MLTableau, i: int) -> Optional[MLTableau]:
    """
    Raising operator e_i; None when e_i annihilates b.

    The acting box is the rightmost surviving "-", always a variable i+1 in some
    row j <= i. In row i it merges into the required i's and the inserted column
    is removed.
    """
    check_index(b.rank, i)
    return _e(b, i)


@cached(cache=_e_cache)
def _e(b: MLTableau, i: int) -> Optional[MLTableau]:
    target = _target(b, i, raising=True)
    if target is None:
        return None
    _, row, _ = target
    if row > i:
        raise RuntimeError(f"e_{i} selected a required box in row {row} of {b.counts}")
    if row == i:
        return b.with_updates({(i, i + 1): -1})
    return b.with_updates({(row, i + 1): -1, (row, i): 1})


def e_max(b: MLTableau, i: int) -> int:
    """Largest m with e_i^m b defined."""
    m = 0
    current = e(b, i)
    while current is not None:
        m += 1
        current = e(current, i)
    return m


def apply_e(b: MLTableau, i: int, power: int) -> Optional[MLTableau]:
    current: Optional[MLTableau] = b
    for _ in range(power):
        current = e(current, i)
        if current is None:
            return None
    return current


def apply_f(b: MLTableau, i: int, power: int) -> MLTableau:
    current = b
    for _ in range(power):
        current = f(current, i)
    return current


def weight_neg(b: MLTableau) -> RootVector:
    """-wt(b): coordinate i is the number of variable boxes k in rows j with j <= i < k."""
    r = b.rank
    coords = [0] * r
    for (j, k), count in b.items():
        if count:
            for i in range(j, k):
                coords[i - 1] += count
    return RootVector(coeffs=tuple(coords))


def weight_by_path(b: MLTableau) -> RootVector:
    """-wt(b) counted operationally: raise b to b_infinity and tally the e_i used."""
    r = b.rank
    coords = [0] * r
    current = b
    while True:
        for i in range(1, r + 1):
            raised = e(current, i)
            if raised is not None:
                coords[i - 1] += 1
                current = raised
                break
        else:
            break
    return RootVector(coeffs=tuple(coords))


def seg_k(b: MLTableau, k: int) -> int:
    """Number of k-segments: rows j < k holding at least one variable k-box."""
    if not 2 <= k <= b.rank + 1:
        raise ValueError(f"seg_k needs 2 <= k <= {b.rank + 1}, got {k}")
    return sum(1 for j in range(1, k) if b.n(j, k) > 0)


def seg(b: MLTableau) -> int:
    """Total number of segments, i.e. the number of nonzero counts."""
    return sum(1 for count in b.counts if count > 0)


def segments(b: MLTableau) -> List[Tuple[int, int, int]]:
    """Every segment as (row, letter, length), in (row, letter) order."""
    return [(j, k, count) for (j, k), count in b.items() if count > 0]


def is_marginally_large(t: FullTableau) -> bool:
    return t.is_marginally_large()


def to_mltableau(t: FullTableau) -> MLTableau:
    """Inverse of materialize for tableaux satisfying the T(infinity) conditions."""
    if not t.is_marginally_large():
        raise ValueError(f"{ERR_NOT_MARGINALLY_LARGE}: {t.rows}")
    r = len(t.rows)
    counts = {}
    for j, row in enumerate(t.rows, start=1):
        for k in range(j + 1, r + 2):
            counts[(j, k)] = row.count(k)
    return MLTableau.from_rows(r, counts)


def f_full(t: FullTableau, i: int) -> Optional[FullTableau]:
    """f_i on an arbitrary semistandard tableau (no shape maintenance); None if no "+" survives."""
    triples = _reading(t.rows)
    _, _, _, position = _reduce([x[0] for x in triples], i)
    if position is None:
        return None
    return _replace_box(t.rows, triples[position], i + 1)


def e_full(t: FullTableau, i: int) -> Optional[FullTableau]:
    """e_i on an arbitrary semistandard tableau (no shape maintenance); None if no "-" survives."""
    triples = _reading(t.rows)
    _, _, position, _ = _reduce([x[0] for x in triples], i)
    if position is None:
        return None
    return _replace_box(t.rows, triples[position], i)


def _replace_box(rows, triple: Triple, letter: int) -> FullTableau:
    _, row, col = triple
    new_rows = [list(r) for r in rows]
    new_rows[row - 1][col - 1] = letter
    return FullTableau(rows=tuple(tuple(r) for r in new_rows))


def f_materialized(b: MLTableau, i: int) -> FullTableau:
    """
    f_i by the literal tableau procedure: act with the signature rule, then, if the
    result is not marginally large, insert a column (1, ..., i) left of the changed box.
    """
    check_index(b.rank, i)
    rows = _rows(b)
    triples = _reading(rows)
    _, _, _, position = _reduce([x[0] for x in triples], i)
    _, row, col = triples[position]
    new_rows = [list(r) for r in rows]
    new_rows[row - 1][col - 1] = i + 1
    candidate = FullTableau(rows=tuple(tuple(r) for r in new_rows))
    if candidate.is_marginally_large():
        return candidate
    for k in range(1, i + 1):
        new_rows[k - 1].insert(col - 1, k)
    return FullTableau(rows=tuple(tuple(r) for r in new_rows))


def e_materialized(b: MLTableau, i: int) -> Optional[FullTableau]:
    """
    e_i by the literal tableau procedure: act with the signature rule, then, if the
    result is not marginally large, remove the column (1, ..., i) holding the changed box.
    """
    check_index(b.rank, i)
    rows = _rows(b)
    triples = _reading(rows)
    _, _, position, _ = _reduce([x[0] for x in triples], i)
    if position is None:
        return None
    _, row, col = triples[position]
    new_rows = [list(r) for r in rows]
    new_rows[row - 1][col - 1] = i
    candidate = FullTableau(rows=tuple(tuple(r) for r in new_rows))
    if candidate.is_marginally_large():
        return candidate
    for k in range(1, i + 1):
        del new_rows[k - 1][col - 1]
    return FullTableau(rows=tuple(tuple(r) for r in new_rows))


def parse_tableau(text: str, mode: str = "reduced", rank: Optional[int] = None) -> MLTableau:
    """Parse reduced ("2,3/3") or full ("1,1,1,2/2,2/3") tableau text."""
    return text_codec.parse_tableau(text, mode=mode, rank=rank)


def format_tableau(b: MLTableau, mode: str = "reduced") -> str:
    if mode == "reduced":
        return text_codec.format_reduced(b)
    if mode == "full":
        return text_codec.format_rows(_rows(b))
    raise ValueError(f"Unknown tableau mode '{mode}', expected one of {text_codec.MODES}")
