"""Toroidal k x k^2 digit grids with row/square/column coordinates.

A grid has k rows and k^2 columns, with both pairs of opposite edges glued.
A flat column index j splits as j = s*k + c: square s, column-in-square c.
The 3-cell window of interest is an L: top cell a, bottom-left b,
bottom-right d, anchored at the position of a.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, GridParseError


def coord_of(j: int, k: int) -> tuple[int, int]:
    """Split flat column j into (square, column-in-square): j = s*k + c."""
    if k < 2:
        raise DomainError(f"alphabet size must be >= 2, got {k}")
    if not 0 <= j < k * k:
        raise DomainError(f"flat column {j} out of range for k={k}")
    return divmod(j, k)


def flat_of(s: int, c: int, k: int) -> int:
    """Inverse of coord_of: the flat column index s*k + c."""
    if k < 2:
        raise DomainError(f"alphabet size must be >= 2, got {k}")
    if not (0 <= s < k and 0 <= c < k):
        raise DomainError(f"square/column ({s}, {c}) out of range for k={k}")
    return s * k + c


@dataclass(frozen=True)
class Coord:
    """Row, square, column-in-square triple naming one cell."""

    r: int
    s: int
    c: int

    def validate(self, k: int) -> "Coord":
        for name, v in (("r", self.r), ("s", self.s), ("c", self.c)):
            if not 0 <= v < k:
                raise DomainError(f"coordinate {name}={v} out of range for k={k}")
        return self

    def flat(self, k: int) -> int:
        """Flat column index of this cell."""
        return flat_of(self.s, self.c, k)


@dataclass(frozen=True)
class LFilling:
    """The three digits of an L window: a on top, b below it, d to b's right."""

    a: int
    b: int
    d: int

    def encode(self, k: int) -> int:
        """Pack into a*k^2 + b*k + d, a unique index in 0..k^3-1."""
        return (self.a * k + self.b) * k + self.d

    @classmethod
    def decode(cls, code: int, k: int) -> "LFilling":
        ab, d = divmod(code, k)
        a, b = divmod(ab, k)
        return cls(a, b, d)

    def astuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.d)


class FillingLedger:
    """Occurrence counts over all k^3 possible L fillings."""

    def __init__(self, k: int):
        self.k = k
        self.counts = [0] * (k ** 3)

    def record(self, filling: LFilling) -> None:
        self.counts[filling.encode(self.k)] += 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def is_perfect(self) -> bool:
        """True iff every filling occurred exactly once."""
        return all(c == 1 for c in self.counts)

    def missing(self) -> list[LFilling]:
        return [LFilling.decode(i, self.k) for i, c in enumerate(self.counts) if c == 0]

    def duplicated(self) -> list[tuple[LFilling, int]]:
        return [(LFilling.decode(i, self.k), c)
                for i, c in enumerate(self.counts) if c >= 2]


class DigitGrid:
    """Immutable toroidal k x k^2 grid of digits in {0..k-1}."""

    __slots__ = ("k", "rows", "_hash")

    def __init__(self, k: int, rows: Iterable[Iterable[int]]):
        if k < 2:
            raise DomainError(f"alphabet size must be >= 2, got {k}")
        frozen = tuple(tuple(row) for row in rows)
        if len(frozen) != k:
            raise DomainError(f"expected {k} rows, got {len(frozen)}")
        width = k * k
        for r, row in enumerate(frozen):
            if len(row) != width:
                raise DomainError(f"row {r} has {len(row)} entries, expected {width}")
            for j, e in enumerate(row):
                if not isinstance(e, int) or not 0 <= e < k:
                    raise DomainError(f"entry {e!r} at ({r}, {j}) not in 0..{k - 1}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "rows", frozen)
        object.__setattr__(self, "_hash", hash((k, frozen)))

    def __setattr__(self, name, value):
        raise AttributeError("DigitGrid is immutable")

    @classmethod
    def _trusted(cls, k: int, rows: tuple) -> "DigitGrid":
        """Internal fast path: rows must already be a valid tuple-of-tuples."""
        self = object.__new__(cls)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash((k, rows)))
        return self

    def __eq__(self, other) -> bool:
        return (isinstance(other, DigitGrid)
                and self.k == other.k and self.rows == other.rows)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"DigitGrid(k={self.k}, rows={list(map(list, self.rows))})"

    def cell(self, r: int, j: int) -> int:
        """Entry at row r, flat column j (no wrapping; indices must be in range)."""
        if not 0 <= r < self.k:
            raise DomainError(f"row {r} out of range for k={self.k}")
        if not 0 <= j < self.k * self.k:
            raise DomainError(f"flat column {j} out of range for k={self.k}")
        return self.rows[r][j]

    def anchors(self) -> Iterator[tuple[int, int]]:
        """All k*k^2 window anchor positions (row, flat column)."""
        for r in range(self.k):
            for j in range(self.k * self.k):
                yield r, j

    # -- serialization ------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: k on line 1, then one line per row."""
        lines = [str(self.k)]
        lines.extend(" ".join(str(e) for e in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "rows": [list(row) for row in self.rows]},
                          separators=(", ", ": "))

    @classmethod
    def from_text(cls, text: str) -> "DigitGrid":
        k, rows = parse_grid_text(text)
        try:
            return cls(k, rows)
        except DomainError as exc:
            raise GridParseError(str(exc)) from exc

    @classmethod
    def from_json(cls, text: str) -> "DigitGrid":
        k, rows = parse_grid_json(text)
        try:
            return cls(k, rows)
        except DomainError as exc:
            raise GridParseError(str(exc)) from exc


def parse_grid_text(text: str) -> tuple[int, list[list[int]]]:
    """Parse the text grid format without shape checks: (k, rows).

    Line 1 is k; each following non-empty line is one row of space-separated
    digits.  Shape/range checking is left to the caller so torus inputs with
    R != k rows can share this parser.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GridParseError("empty input; expected alphabet size on line 1", line=1)
    try:
        k = int(lines[0].strip())
    except ValueError:
        raise GridParseError(f"bad alphabet size {lines[0].strip()!r}", line=1) from None
    rows: list[list[int]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        row = []
        for colno, tok in enumerate(line.split()):
            try:
                row.append(int(tok))
            except ValueError:
                raise GridParseError(f"bad digit {tok!r}", line=lineno,
                                     column=colno) from None
        rows.append(row)
    if not rows:
        raise GridParseError("no rows after the alphabet-size line", line=2)
    return k, rows


def parse_grid_json(text: str) -> tuple[int, list[list[int]]]:
    """Parse the JSON grid format without shape checks: (k, rows)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GridParseError(f"bad JSON: {exc.msg}", line=exc.lineno,
                             column=exc.colno) from None
    if not isinstance(obj, dict) or "k" not in obj or "rows" not in obj:
        raise GridParseError('expected a JSON object with "k" and "rows"')
    k, rows = obj["k"], obj["rows"]
    if not isinstance(k, int):
        raise GridParseError(f'"k" must be an integer, got {k!r}')
    if (not isinstance(rows, list)
            or not all(isinstance(row, list) for row in rows)):
        raise GridParseError('"rows" must be an array of arrays')
    return k, [list(row) for row in rows]


def extract_l(g: DigitGrid, r: int, j: int) -> LFilling:
    """The L filling anchored at (r, j): a = cell above, b below, d right of b.

    Rows wrap mod k and flat columns wrap mod k^2 (the torus gluing).
    """
    k, k2 = g.k, g.k * g.k
    if not 0 <= r < k:
        raise DomainError(f"row {r} out of range for k={k}")
    if not 0 <= j < k2:
        raise DomainError(f"flat column {j} out of range for k={k}")
    below = (r + 1) % k
    return LFilling(g.rows[r][j], g.rows[below][j], g.rows[below][(j + 1) % k2])


def translate(g: DigitGrid, dr: int, dj: int) -> DigitGrid:
    """Cyclically shift the grid down by dr rows and right by dj columns."""
    k, k2 = g.k, g.k * g.k
    return DigitGrid(k, (tuple(g.rows[(r - dr) % k][(j - dj) % k2]
                               for j in range(k2))
                         for r in range(k)))


def relabel(g: DigitGrid, perm: Sequence[int]) -> DigitGrid:
    """Apply a digit permutation entrywise; perm must be a bijection on 0..k-1."""
    if sorted(perm) != list(range(g.k)):
        raise DomainError(f"{list(perm)} is not a permutation of 0..{g.k - 1}")
    return DigitGrid(g.k, (tuple(perm[e] for e in row) for row in g.rows))
