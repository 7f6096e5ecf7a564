# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
String (BZL path) and Lusztig parametrizations for the word (1; 2,1; ...; r,...,1).

Word position m of row j carries the letter j-m+1 and the root [m, j]. The string
triangle a[j][1..j] lists the maximal e-powers along the word; the Lusztig datum is its
row-wise difference. On T(infinity) both are read directly off the segment counts:
a[i][j] is the total length of the (i+1)-segments in rows 1..i-j+1, and row i of the
Lusztig datum is (n[1][i+1], ..., n[i][i+1]).
"""

from typing import List, Optional, Tuple

from src.crystal import ERR_CONE_VIOLATION, ERR_INVALID_WORD, ConeViolationError, InvalidWordError, TableauParseError
from src.crystal.libs import text_codec
from src.crystal.roots import default_long_word
from src.crystal.tableaux import apply_e, apply_f, e_max, highest
from src.models.params import LusztigDatum, StringParam
from src.models.roots import LongWord
from src.models.tableau import MLTableau
from src import logger


def word_letter(j: int, m: int) -> int:
    """Letter at position m of row j of the default word."""
    return j - m + 1


def _check_word(r: int, w: Optional[LongWord]) -> None:
    if w is not None and w != default_long_word(r):
        raise InvalidWordError(f"{ERR_INVALID_WORD}: only (1;2,1;...;r,...,1) is supported, got {w}")


def bzl_path(b: MLTableau, w: Optional[LongWord] = None) -> StringParam:
    """
    String parametrization psi(b): a_k is the largest power of e_{i_k} applicable
    after positions 1..k-1 have been exhausted.
    """
    r = b.rank
    _check_word(r, w)
    current = b
    rows = []
    for j in range(1, r + 1):
        row = []
        for m in range(1, j + 1):
            i = word_letter(j, m)
            power = e_max(current, i)
            current = apply_e(current, i, power)
            row.append(power)
        rows.append(tuple(row))
    if current != highest(r):
        raise RuntimeError(f"BZL path of {b.counts} ended at {current.counts} instead of b_infinity")
    return StringParam(rank=r, rows=tuple(rows))


def check_cone(sp: StringParam) -> StringParam:
    """Every row weakly decreasing and nonnegative."""
    for j, row in enumerate(sp.rows, start=1):
        if row[-1] < 0 or any(row[l] < row[l + 1] for l in range(len(row) - 1)):
            raise ConeViolationError(f"{ERR_CONE_VIOLATION}: row {j} = {row}")
    return sp


def nc_rows(sp: StringParam) -> List[int]:
    """Uncircled entries per row; entry k-2 equals seg_k of the element."""
    return [sum(1 for flag in row if not flag) for row in sp.circles]


def nc(sp: StringParam) -> int:
    return sum(nc_rows(sp))


def circled_count(sp: StringParam) -> int:
    return sum(1 for row in sp.circles for flag in row if flag)


def to_lusztig(sp: StringParam) -> LusztigDatum:
    """
    Row j of the datum is (a[j][j], a[j][j-1] - a[j][j], ..., a[j][1] - a[j][2]).

    Raises:
        ConeViolationError: sp is outside the string cone.
    """
    check_cone(sp)
    rows = []
    for j in range(1, sp.rank + 1):
        rows.append(tuple(sp.entry(j, l) - sp.entry(j, l + 1) for l in range(j, 0, -1)))
    return LusztigDatum(rank=sp.rank, rows=tuple(rows))


def from_lusztig(c: LusztigDatum) -> StringParam:
    """Row-wise partial sums: a[j][j-m] = c[j][1] + ... + c[j][m+1]."""
    rows = []
    for row in c.rows:
        sums = []
        total = 0
        for value in row:
            total += value
            sums.append(total)
        rows.append(tuple(reversed(sums)))
    return StringParam(rank=c.rank, rows=tuple(rows))


def nz(c: LusztigDatum) -> int:
    return sum(1 for value in c.flat() if value != 0)


def zero_count(c: LusztigDatum) -> int:
    return sum(1 for value in c.flat() if value == 0)


def segment_triangle(b: MLTableau) -> StringParam:
    """a[i][j] = total length of the (i+1)-segments in rows 1..i-j+1."""
    r = b.rank
    rows = []
    for i in range(1, r + 1):
        rows.append(tuple(sum(b.n(m, i + 1) for m in range(1, i - j + 2)) for j in range(1, i + 1)))
    return StringParam(rank=r, rows=tuple(rows))


def tableau_to_lusztig(b: MLTableau) -> LusztigDatum:
    return to_lusztig(segment_triangle(b))


def lusztig_to_tableau(c: LusztigDatum) -> MLTableau:
    """Inverse of tableau_to_lusztig: n[m][j+1] is entry m of row j."""
    counts = {(m, j + 1): value for j, row in enumerate(c.rows, start=1) for m, value in enumerate(row, start=1)}
    return MLTableau.from_rows(c.rank, counts)


def string_word(sp: StringParam) -> List[Tuple[int, int]]:
    """(index, power) pairs in application order: e_{i_1}^{a_1} first."""
    return [(word_letter(j, m), sp.entry(j, m)) for j in range(1, sp.rank + 1) for m in range(1, j + 1)]


def apply_string_prefix(b: MLTableau, sp: StringParam, rows: int) -> MLTableau:
    """
    Apply the e-powers of rows 1..rows of sp to b in word order.

    With sp = bzl_path(b) this strips every j-segment for j <= rows+1.
    """
    current = b
    for i, power in string_word(sp)[: rows * (rows + 1) // 2]:
        current = apply_e(current, i, power)
        if current is None:
            raise ValueError(f"e_{i}^{power} annihilates the element; {sp.rows} is not its string")
    return current


def string_to_tableau(sp: StringParam) -> MLTableau:
    """b = f_{i_1}^{a_1} ... f_{i_N}^{a_N} b_infinity for sp in the string cone."""
    check_cone(sp)
    current = highest(sp.rank)
    for i, power in reversed(string_word(sp)):
        current = apply_f(current, i, power)
    logger.debug(f"string_to_tableau: {sp.rows} -> {current.counts}")
    return current


def parse_string_param(text: str, rank: Optional[int] = None) -> StringParam:
    """
    Parse "(a;b,c;...)". Circle marks are optional, but when any are written they
    must agree with the circling rule.

    Raises:
        TableauParseError: malformed text or inconsistent circle marks.
        ConeViolationError: the triangle is outside the string cone.
    """
    rows, marks = text_codec.parse_triangle(text, rank=rank)
    sp = StringParam(rank=len(rows), rows=rows)
    if any(flag for row in marks for flag in row) and marks != sp.circles:
        raise TableauParseError("circle marks disagree with the circling rule", 0)
    return check_cone(sp)


def format_string_param(sp: StringParam, circles: bool = True) -> str:
    return text_codec.format_triangle(sp.rows, sp.circles if circles else None)


def parse_lusztig(text: str, rank: Optional[int] = None) -> LusztigDatum:
    rows, marks = text_codec.parse_triangle(text, rank=rank)
    if any(flag for row in marks for flag in row):
        raise TableauParseError("circle marks are not part of a Lusztig datum", text.index("(", 1))
    return LusztigDatum(rank=len(rows), rows=rows)


def format_lusztig(c: LusztigDatum) -> str:
    return text_codec.format_triangle(c.rows)
