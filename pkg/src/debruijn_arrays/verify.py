"""Window-coverage verification for L-arrays, rectangular tori, and sequences.

Each checker slides its window over every toroidal anchor, tallies the
fillings, and reports exact defect evidence: which fillings are missing and
which are duplicated.  A structurally malformed input raises; a well-formed
grid that simply is not de Bruijn yields a report with valid=False.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import DimensionError, DomainError
from .grid import DigitGrid, FillingLedger, extract_l

Filling = tuple  # L fillings are 3-tuples, torus fillings m-tuples of n-tuples,
                 # sequence fillings n-tuples


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    missing: list = field(default_factory=list)
    duplicated: list = field(default_factory=list)
    positions_checked: int = 0

    def to_json_dict(self) -> dict:
        def flat(f):
            return list(f) if isinstance(f, tuple) else f
        return {
            "valid": self.valid,
            "missing": [flat(f) for f in self.missing],
            "duplicated": [[flat(f), c] for f, c in self.duplicated],
            "positions_checked": self.positions_checked,
        }


def verify_l_array(g: DigitGrid) -> VerifyReport:
    """Check that the k^3 L windows of g realize every filling exactly once."""
    ledger = FillingLedger(g.k)
    for r, j in g.anchors():
        ledger.record(extract_l(g, r, j))
    return VerifyReport(
        valid=ledger.is_perfect(),
        missing=[f.astuple() for f in ledger.missing()],
        duplicated=[(f.astuple(), c) for f, c in ledger.duplicated()],
        positions_checked=ledger.total,
    )


def verify_torus(rows: Sequence[Sequence[int]], k: int, m: int, n: int) -> VerifyReport:
    """Check that an R x C toroidal grid is a (k, m, n)-de Bruijn torus.

    Any rectangle with R*C == k**(m*n) cells is admitted; each of the
    k**(m*n) possible m x n fillings must appear exactly once among the
    R*C sliding windows.
    """
    if k < 2:
        raise DomainError(f"alphabet size must be >= 2, got {k}")
    if m < 1 or n < 1:
        raise DomainError(f"window dims must be positive, got {m}x{n}")
    grid = [list(row) for row in rows]
    R = len(grid)
    if R == 0:
        raise DomainError("empty grid")
    C = len(grid[0])
    for i, row in enumerate(grid):
        if len(row) != C:
            raise DomainError(f"ragged grid: row {i} has {len(row)} entries, expected {C}")
        for j, e in enumerate(row):
            if not isinstance(e, int) or not 0 <= e < k:
                raise DomainError(f"entry {e!r} at ({i}, {j}) not in 0..{k - 1}")
    total = k ** (m * n)
    if R * C != total:
        raise DimensionError(
            f"{R}x{C} grid has {R * C} cells; a (k={k}, {m}x{n}) torus needs {total}")

    seen: Counter = Counter()
    for i in range(R):
        for j in range(C):
            window = tuple(tuple(grid[(i + di) % R][(j + dj) % C]
                                 for dj in range(n))
                           for di in range(m))
            seen[window] += 1
    missing = [w for w in _all_windows(k, m, n) if w not in seen]
    duplicated = sorted((w, c) for w, c in seen.items() if c >= 2)
    return VerifyReport(valid=not missing and not duplicated,
                        missing=missing, duplicated=duplicated,
                        positions_checked=R * C)


def _all_windows(k: int, m: int, n: int):
    from itertools import product
    for flat in product(range(k), repeat=m * n):
        yield tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(m))


def verify_sequence(word: Union[str, Sequence[int]], k: int, n: int) -> VerifyReport:
    """Check that a cyclic word of length k^n contains every n-gram exactly once."""
    if k < 2:
        raise DomainError(f"alphabet size must be >= 2, got {k}")
    if n < 1:
        raise DomainError(f"window length must be >= 1, got {n}")
    digits = [int(ch) for ch in word] if isinstance(word, str) else [int(d) for d in word]
    for i, d in enumerate(digits):
        if not 0 <= d < k:
            raise DomainError(f"digit {d} at position {i} not in 0..{k - 1}")
    total = k ** n
    if len(digits) != total:
        raise DimensionError(
            f"word length {len(digits)} != k^n = {total} for (k={k}, n={n})")

    seen: Counter = Counter()
    for i in range(total):
        seen[tuple(digits[(i + t) % total] for t in range(n))] += 1
    from itertools import product
    missing = [w for w in product(range(k), repeat=n) if w not in seen]
    duplicated = sorted((w, c) for w, c in seen.items() if c >= 2)
    return VerifyReport(valid=not missing and not duplicated,
                        missing=missing, duplicated=duplicated,
                        positions_checked=total)
