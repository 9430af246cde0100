"""Circulant bipartite graphs: matching parity, exact permanents, and
pseudopath counts.

A (p, p) bipartite graph on vertex classes a_1..a_p / b_1..b_p is encoded
by its circulant biadjacency matrix: edge (a_i, b_j) exists iff entry
(i, j) is set.  The permanent of the biadjacency matrix counts perfect
matchings; mod 2 it coincides with the determinant, and the number of
pseudopaths of length r between a_i and b_j is entry (i, j) of the r-th
matrix power.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import circulant as circ
from . import numtheory
from .backend import kernels
from .circulant import CirculantMatrix, DenseBitMatrix
from .errors import BudgetExceededError

RYSER_CAP = 20
PERMSUM_CAP = 10
DEFAULT_SCAN_CAP = 13


@dataclass(frozen=True)
class BipartiteCirculantGraph:
    p: int
    biadjacency: CirculantMatrix

    def __post_init__(self):
        if self.biadjacency.p != self.p:
            raise ValueError("biadjacency dimension disagrees with side size")

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as (i, j) pairs, 1-based, for debugging dumps."""
        dense = circ.materialize(self.biadjacency)
        return [
            (i + 1, j + 1)
            for i in range(self.p)
            for j in range(self.p)
            if dense.entry(i, j)
        ]

    def adjacency(self) -> dict[int, list[int]]:
        """Neighbors of each a-side vertex, 1-based."""
        out: dict[int, list[int]] = {}
        for i, j in self.edges():
            out.setdefault(i, []).append(j)
        return out


def from_first_column(p: int, bits: int) -> BipartiteCirculantGraph:
    return BipartiteCirculantGraph(p, CirculantMatrix(p, bits))


def degree(g: BipartiteCirculantGraph) -> int:
    """Common vertex degree: the weight of the first column."""
    return g.biadjacency.first_column.bit_count()


def is_complete_bipartite(g: BipartiteCirculantGraph) -> bool:
    """True iff the biadjacency matrix is the all-ones matrix."""
    return g.biadjacency.first_column == (1 << g.p) - 1


def matching_parity(g: BipartiteCirculantGraph) -> int:
    """Parity of the number of perfect matchings: the GF(2) determinant
    of the biadjacency matrix (= permanent mod 2)."""
    return circ.det_gf2(g.biadjacency)


def exact_permanent(m: DenseBitMatrix, method: str = "both") -> int:
    """Exact permanent (= number of perfect matchings for a biadjacency
    matrix).

    "ryser" runs inclusion-exclusion over column subsets in Gray-code
    order (n <= 20); "permsum" sums over all n! permutations (n <= 10);
    "both" runs every counter that fits and insists they agree.
    """
    n = m.n
    rows = list(m.rows)
    if method not in ("ryser", "permsum", "both"):
        raise ValueError(f"unknown method {method!r}")
    results = {}
    if method in ("ryser", "both"):
        if n > RYSER_CAP:
            raise BudgetExceededError(f"Ryser permanent capped at n <= {RYSER_CAP}, got {n}")
        results["ryser"] = _ryser_exact(rows, n)
    if method == "permsum" or (method == "both" and n <= PERMSUM_CAP):
        if n > PERMSUM_CAP:
            raise BudgetExceededError(f"permutation-sum permanent capped at n <= {PERMSUM_CAP}, got {n}")
        results["permsum"] = int(kernels().permanent_permsum(rows, n))
    if len(results) == 2 and results["ryser"] != results["permsum"]:
        raise AssertionError(f"permanent counters disagree: {results}")
    return next(iter(results.values()))


def _ryser_exact(rows: list[int], n: int) -> int:
    # Ryser inclusion-exclusion; Gray-code subset order keeps the row-sum
    # updates to one column per step.
    if n == 0:
        return 1
    sums = [0] * n
    total = 0
    subset = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        subset ^= 1 << j
        delta = 1 if subset >> j & 1 else -1
        for i in range(n):
            if rows[i] >> j & 1:
                sums[i] += delta
        product = 1
        for s in sums:
            if not s:
                product = 0
                break
            product *= s
        if product:
            total += -product if (n - subset.bit_count()) & 1 else product
    return total


def permanent_parity(m: DenseBitMatrix | CirculantMatrix) -> int:
    """Permanent mod 2 straight from Ryser's formula (no elimination)."""
    if isinstance(m, CirculantMatrix):
        m = circ.materialize(m)
    if m.n > RYSER_CAP:
        raise BudgetExceededError(f"parity scan capped at n <= {RYSER_CAP}, got {m.n}")
    return int(kernels().ryser_parity(list(m.rows), m.n))


@dataclass(frozen=True)
class PseudopathParityMatrix:
    """Entry (i, j) holds the parity of the number of length-r pseudopaths
    from a_i to b_j; always the GF(2) r-th power of the biadjacency.

    The power of a circulant is circulant, so entries derive from its
    first column; dense rows are materialized only on demand.
    """

    p: int
    power_column: int

    def entry(self, i: int, j: int) -> int:
        return self.power_column >> ((i - j) % self.p) & 1

    @property
    def rows(self) -> tuple[int, ...]:
        return circ.materialize(circ.CirculantMatrix(self.p, self.power_column)).rows

    @property
    def is_identity_pattern(self) -> bool:
        """True iff entry (i, j) = 1 exactly when i = j."""
        return self.power_column == 1


def pseudopath_parity(g: BipartiteCirculantGraph, r: int) -> PseudopathParityMatrix:
    """Parities of pseudopath counts of length r, via the matrix power."""
    if r < 1:
        raise ValueError("pseudopath length must be positive")
    power = circ.matpow(g.biadjacency, r)
    return PseudopathParityMatrix(g.p, power.first_column)


def pseudopath_count_matrix(g: BipartiteCirculantGraph, r: int, cap: int = 64) -> list[list[int]]:
    """Exact pseudopath counts by integer matrix power; the small-scale
    oracle behind pseudopath_parity."""
    if g.p > cap or r > cap:
        raise BudgetExceededError(f"integer pseudopath oracle capped at {cap}")
    dense = circ.materialize(g.biadjacency)
    n = g.p
    entries = [[dense.entry(i, j) for j in range(n)] for i in range(n)]
    result = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    base = entries
    e = r
    while e:
        if e & 1:
            result = _int_matmul(result, base, n)
        e >>= 1
        if e:
            base = _int_matmul(base, base, n)
    return result


def _int_matmul(a, b, n):
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def count_odd_matching_graphs(p: int, cap: int = DEFAULT_SCAN_CAP) -> int:
    """Number of labeled circulant (p, p) graphs with an odd number of
    perfect matchings, counted by permanent parity over all 2**p columns.

    The count runs through Ryser parity rather than elimination so that
    the graph-side tally stays independent of the matrix-side one.
    """
    numtheory.require_odd_prime(p)
    if p > cap:
        raise BudgetExceededError(f"matching scan capped at p <= {cap}, got {p}")
    return sum(kernels().matching_parity_flags(p))


def matching_parity_flags(p: int, cap: int = DEFAULT_SCAN_CAP) -> bytes:
    """Per-column permanent parities over all 2**p circulant graphs."""
    numtheory.require_odd_prime(p)
    if p > cap:
        raise BudgetExceededError(f"matching scan capped at p <= {cap}, got {p}")
    return kernels().matching_parity_flags(p)
