"""Modular construction of a k-de Bruijn L-array, plus its proof identities.

The grid with (s + r*c) mod k at row r, square s, column-in-square c contains
every L filling exactly once.  Two structural identities make that work and
are exposed here as checkable relations on a constructed grid:

* column relation: for vertically adjacent digits a over b, the
  column-in-square index satisfies c = (b - a) mod k;
* diagonal relation: the d cell equals (a + c + r + 1) mod k when c != k-1,
  and (s + 1) mod k when c == k-1.
"""

from __future__ import annotations

from .errors import DomainError
from .grid import DigitGrid, coord_of


def construct_l_array(k: int) -> DigitGrid:
    """Build the k x k^2 grid with entry (s + r*c) mod k at row r, column s*k + c."""
    if k < 2:
        raise DomainError(f"alphabet size must be >= 2, got {k}")
    return DigitGrid(k, (tuple((s + r * c) % k
                               for s in range(k) for c in range(k))
                         for r in range(k)))


def check_column_relation(g: DigitGrid) -> bool:
    """Does every vertical pair (a over b) sit in column (b - a) mod k?"""
    k, k2 = g.k, g.k * g.k
    for r in range(k):
        below = (r + 1) % k
        for j in range(k2):
            _, c = coord_of(j, k)
            if (g.rows[below][j] - g.rows[r][j]) % k != c:
                return False
    return True


def check_diagonal_relation(g: DigitGrid) -> bool:
    """Does every d cell match its closed form in terms of (a, r, s, c)?"""
    k, k2 = g.k, g.k * g.k
    for r in range(k):
        below = (r + 1) % k
        for j in range(k2):
            s, c = coord_of(j, k)
            d = g.rows[below][(j + 1) % k2]
            if c == k - 1:
                expected = (s + 1) % k
            else:
                expected = (g.rows[r][j] + c + r + 1) % k
            if d != expected:
                return False
    return True
