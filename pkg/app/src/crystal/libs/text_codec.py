# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Text grammars for crystal elements.

- tableau: rows separated by "/", letters separated by ",", "*" for an empty
  variable row (reduced mode only); whitespace is ignored
- triangle: "(a; b, c; d, e, f)" with row j holding j entries; a string entry may be
  written "(a)" to mark it circled
- decomposition: "[a,b]xm" tokens (the multiplication sign may also be "×")

Every parse error is a TableauParseError carrying the 0-based character offset
into the original text.
"""

import re
from typing import List, Optional, Tuple

from src.crystal import ERR_NOT_MARGINALLY_LARGE, TableauParseError
from src.crystal.libs import EMPTY_ROW_TXT, ROW_SEPARATOR
from src.models.tableau import FullTableau, MLTableau

MODES = ("reduced", "full")

_NUMBER = re.compile(r"\s*(\d+)")
_SPACE = re.compile(r"\s*")
_SEPARATORS = re.compile(r"[\s,]*")
_TOKEN = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*[x×]\s*(\d+)")


class _Scanner:
    """Character cursor over the original text; skips whitespace between tokens."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        self.pos = _SPACE.match(self.text, self.pos).end()

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def expect(self, char: str) -> None:
        if not self.accept(char):
            found = self.peek() or "end of input"
            raise TableauParseError(f"expected '{char}', found '{found}'", self.pos)

    def number(self) -> int:
        match = _NUMBER.match(self.text, self.pos)
        if not match:
            self.skip()
            found = self.peek() or "end of input"
            raise TableauParseError(f"expected a number, found '{found}'", self.pos)
        self.pos = match.end()
        return int(match.group(1))


def _scan_rows(text: str, allow_empty: bool) -> List[Tuple[List[int], int]]:
    """Rows of letters with the offset where each row starts."""
    scanner = _Scanner(text)
    if scanner.at_end():
        raise TableauParseError("empty tableau text", 0)
    rows = []
    while True:
        scanner.skip()
        start = scanner.pos
        if scanner.accept(EMPTY_ROW_TXT):
            if not allow_empty:
                raise TableauParseError("'*' is only allowed in reduced mode", start)
            rows.append(([], start))
        else:
            letters = [scanner.number()]
            while scanner.accept(","):
                letters.append(scanner.number())
            rows.append((letters, start))
        if scanner.at_end():
            return rows
        scanner.expect(ROW_SEPARATOR)


def parse_tableau(text: str, mode: str = "reduced", rank: Optional[int] = None) -> MLTableau:
    """
    Parse tableau text; the rank is the number of rows unless given explicitly.

    Reduced mode lists only the variable boxes of each row, so row j may only hold
    letters j+1..r+1 in weakly increasing order. Full mode lists every box and the
    result must be marginally large.

    Raises:
        TableauParseError: malformed text, non-semistandard rows, wrong row count or
            (full mode) a tableau that is not marginally large.
    """
    if mode not in MODES:
        raise ValueError(f"Unknown tableau mode '{mode}', expected one of {MODES}")
    rows = _scan_rows(text, allow_empty=mode == "reduced")
    r = len(rows)
    if rank is not None and rank != r:
        raise TableauParseError(f"expected {rank} rows, found {r}", len(text))

    for j, (letters, start) in enumerate(rows, start=1):
        if any(letters[c] > letters[c + 1] for c in range(len(letters) - 1)):
            raise TableauParseError(f"row {j} is not weakly increasing", start)
        low = j + 1 if mode == "reduced" else 1
        bad = [x for x in letters if not low <= x <= r + 1]
        if bad:
            raise TableauParseError(f"row {j} holds letter {bad[0]} outside {low}..{r + 1}", start)

    if mode == "reduced":
        return _from_letter_rows(r, [letters for letters, _ in rows])

    try:
        tableau = FullTableau(rows=tuple(tuple(letters) for letters, _ in rows))
    except ValueError as exc:
        raise TableauParseError(f"not semistandard ({exc.__class__.__name__})", 0) from exc
    if not tableau.is_marginally_large():
        raise TableauParseError(ERR_NOT_MARGINALLY_LARGE, 0)
    return _from_letter_rows(r, tableau.rows)


def _from_letter_rows(r: int, rows) -> MLTableau:
    """Counts n[j][k] read off rows; letters up to j in row j are required boxes and ignored."""
    return MLTableau.from_rows(r, {(j, k): row.count(k) for j, row in enumerate(rows, start=1) for k in range(j + 1, r + 2)})


def format_rows(rows) -> str:
    return ROW_SEPARATOR.join(",".join(str(x) for x in row) if row else EMPTY_ROW_TXT for row in rows)


def format_reduced(b: MLTableau) -> str:
    """b# text, e.g. "2,3/3"; "*" marks an empty variable row."""
    rows = []
    for j in range(1, b.rank + 1):
        row = []
        for k, count in b.row_counts(j).items():
            row.extend([k] * count)
        rows.append(row)
    return format_rows(rows)


def parse_triangle(text: str, rank: Optional[int] = None) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[bool, ...], ...]]:
    """
    Parse "(a; b, c; ...)" into rows and per-entry circle marks.

    Raises:
        TableauParseError: malformed text or a row of the wrong length.
    """
    scanner = _Scanner(text)
    scanner.expect("(")
    rows: List[Tuple[int, ...]] = []
    marks: List[Tuple[bool, ...]] = []
    while True:
        scanner.skip()
        row_start = scanner.pos
        values, circled = [], []
        while True:
            if scanner.accept("("):
                values.append(scanner.number())
                circled.append(True)
                scanner.expect(")")
            else:
                values.append(scanner.number())
                circled.append(False)
            if not scanner.accept(","):
                break
        if len(values) != len(rows) + 1:
            raise TableauParseError(f"row {len(rows) + 1} must have {len(rows) + 1} entries, found {len(values)}", row_start)
        rows.append(tuple(values))
        marks.append(tuple(circled))
        if not scanner.accept(";"):
            break
    scanner.expect(")")
    if not scanner.at_end():
        raise TableauParseError("trailing characters", scanner.pos)
    if rank is not None and rank != len(rows):
        raise TableauParseError(f"expected {rank} rows, found {len(rows)}", len(text))
    return tuple(rows), tuple(marks)


def format_triangle(rows, circles=None) -> str:
    """Inverse of parse_triangle; entries with a true circle flag are wrapped as "(a)"."""
    parts = []
    for j, row in enumerate(rows):
        entries = []
        for l, value in enumerate(row):
            circled = circles is not None and circles[j][l]
            entries.append(f"({value})" if circled else str(value))
        parts.append(",".join(entries))
    return "(" + ";".join(parts) + ")"


def parse_tokens(text: str) -> List[Tuple[int, int, int, int]]:
    """Decomposition tokens as (a, b, multiplicity, offset); separators are whitespace or commas."""
    tokens = []
    pos = 0
    while True:
        match = _SEPARATORS.match(text, pos)
        pos = match.end()
        if pos >= len(text):
            return tokens
        token = _TOKEN.match(text, pos)
        if not token:
            raise TableauParseError("expected a '[a,b]xm' token", pos)
        tokens.append((int(token.group(1)), int(token.group(2)), int(token.group(3)), pos))
        pos = token.end()


def format_tokens(items) -> str:
    return " ".join(f"[{a},{b}]×{m}" for a, b, m in items)
