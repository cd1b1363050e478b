"""de Bruijn sequence generation and exact counting.

A (k, n)-de Bruijn sequence is a cyclic word of length k^n over {0..k-1}
containing every length-n word exactly once.  Cyclic classes of such words
correspond to Eulerian circuits of the graph on (n-1)-grams whose edges are
the n-grams, which gives both a generator (Hierholzer) and an independent
counter (BEST theorem).  The closed-form count is k!^(k^(n-1)) / k^n.

All counting is exact integer arithmetic; every division asserts a zero
remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial

from .errors import BudgetError, DomainError
from .verify import verify_sequence

# Hard budgets for the two expensive counters.
BRUTE_MAX_WORD_LEN = 12
BRUTE_MAX_WORDS = 10 ** 8
BEST_MAX_NODES = 64


@dataclass(frozen=True)
class DeBruijnGraph:
    """Directed multigraph on (n-1)-grams; each n-gram w is an edge
    prefix(w) -> suffix(w).  Every node has in- and out-degree k."""

    k: int
    n: int
    nodes: tuple
    adjacency: dict  # node -> tuple of successor nodes, one per appended digit

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.nodes) * self.k


def build_graph(k: int, n: int) -> DeBruijnGraph:
    if k < 2:
        raise DomainError(f"alphabet size must be >= 2, got {k}")
    if n < 1:
        raise DomainError(f"window length must be >= 1, got {n}")
    nodes = tuple(product(range(k), repeat=n - 1))
    adjacency = {u: tuple((u + (d,))[1:] for d in range(k)) for u in nodes}
    return DeBruijnGraph(k=k, n=n, nodes=nodes, adjacency=adjacency)


def generate_sequence(k: int, n: int, method: str = "euler") -> str:
    """Produce a (k, n)-de Bruijn word of length k^n, deterministically.

    method="euler" walks an Eulerian circuit of the (n-1)-gram graph;
    method="greedy" repeatedly appends the largest digit whose window is
    still unused, starting from the all-zero state.  Digits >= 10 are
    rendered space-separated; below that the word is a plain digit string.
    """
    if method == "euler":
        digits = _euler_digits(k, n)
    elif method == "greedy":
        digits = _greedy_digits(k, n)
    else:
        raise DomainError(f"unknown method {method!r}")
    return format_word(digits, k)


def format_word(digits: list[int], k: int) -> str:
    if k <= 10:
        return "".join(str(d) for d in digits)
    return " ".join(str(d) for d in digits)


def parse_word(text: str, k: int) -> list[int]:
    text = text.strip()
    if k <= 10:
        return [int(ch) for ch in text.replace(" ", "")]
    return [int(tok) for tok in text.split()]


def _euler_digits(k: int, n: int) -> list[int]:
    """Hierholzer's algorithm on the de Bruijn graph, iterative.

    Edges out of each node are consumed in descending digit order, starting
    from the all-zero (n-1)-gram, so the output is fixed for each (k, n).
    """
    if n == 1:
        # Single node with k loops; the descending consumption order below
        # degenerates to emitting each digit once.
        return list(range(k - 1, -1, -1))
    g = build_graph(k, n)
    next_digit = {u: k for u in g.nodes}  # digits k-1 .. 0 not yet used from u
    start = (0,) * (n - 1)
    stack = [start]
    circuit_digits: list[int] = []
    while stack:
        u = stack[-1]
        if next_digit[u] > 0:
            d = next_digit[u] - 1
            next_digit[u] = d
            stack.append((u + (d,))[1:])
        else:
            stack.pop()
            if stack:
                circuit_digits.append(u[-1])
    circuit_digits.reverse()
    return circuit_digits


def _greedy_digits(k: int, n: int) -> list[int]:
    """Prefer-largest greedy walk from the all-zero (n-1)-gram."""
    total = k ** n
    used = set()
    state = (0,) * (n - 1)
    out: list[int] = []
    for _ in range(total):
        for d in range(k - 1, -1, -1):
            window = state + (d,)
            if window not in used:
                used.add(window)
                out.append(d)
                state = window[1:]
                break
        else:
            raise AssertionError("greedy walk stuck; should not happen")
    return out


def count_formula(k: int, n: int) -> int:
    """Closed-form count of cyclic (k, n)-de Bruijn sequences: k!^(k^(n-1)) / k^n."""
    if k < 2:
        raise DomainError(f"alphabet size must be >= 2, got {k}")
    if n < 1:
        raise DomainError(f"window length must be >= 1, got {n}")
    numerator = factorial(k) ** (k ** (n - 1))
    q, rem = divmod(numerator, k ** n)
    if rem:
        raise AssertionError(f"count formula division inexact for (k={k}, n={n})")
    return q


def count_brute(k: int, n: int) -> int:
    """Count cyclic classes by testing every word of length k^n.

    Each cyclic class contributes exactly k^n distinct linear rotations
    (all rotations differ because all windows are distinct), so the raw
    pass count divides exactly by k^n.
    """
    length = k ** n
    if length > BRUTE_MAX_WORD_LEN or k ** length > BRUTE_MAX_WORDS:
        raise BudgetError(f"(k={k}, n={n}) exceeds the brute-force budget")
    hits = 0
    for word in product(range(k), repeat=length):
        if verify_sequence(word, k, n).valid:
            hits += 1
    q, rem = divmod(hits, length)
    if rem:
        raise AssertionError(f"brute count {hits} not divisible by {length}")
    return q


def count_best(k: int, n: int) -> int:
    """Count cyclic classes as Eulerian circuits via the BEST theorem.

    Circuits = arborescences (a Laplacian-minor determinant, exact integer
    Bareiss elimination) times (out-degree - 1)! per node.  Calibrated
    against count_brute on (2,2) and (2,3): the raw BEST value already
    counts cyclic de Bruijn classes, so no extra normalization factor.
    """
    g = build_graph(k, n)
    if g.node_count > BEST_MAX_NODES:
        raise BudgetError(f"(k={k}, n={n}) needs a {g.node_count}-node Laplacian, "
                          f"budget is {BEST_MAX_NODES}")
    arbs = _arborescence_count(g)
    return arbs * factorial(k - 1) ** g.node_count


def _arborescence_count(g: DeBruijnGraph) -> int:
    """Spanning-arborescence count: any principal minor of the out-degree
    Laplacian (the graph is Eulerian, so the root choice is immaterial)."""
    nodes = g.nodes
    if len(nodes) == 1:
        return 1
    index = {u: i for i, u in enumerate(nodes)}
    size = len(nodes)
    lap = [[0] * size for _ in range(size)]
    for u in nodes:
        i = index[u]
        lap[i][i] += g.k
        for v in g.adjacency[u]:
            lap[i][index[v]] -= 1
    minor = [row[1:] for row in lap[1:]]
    return bareiss_determinant(minor)


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Bareiss elimination."""
    m = [row[:] for row in matrix]
    size = len(m)
    sign = 1
    prev = 1
    for col in range(size - 1):
        if m[col][col] == 0:
            for r in range(col + 1, size):
                if m[r][col] != 0:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(col + 1, size):
            for c in range(col + 1, size):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[size - 1][size - 1]
