"""Exact permanents and perfect matching counts.

Everything here runs on big integers and fractions.Fraction; floating point
entries are rejected outright so no result is ever approximate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from .constructions import validate_c2kfree_bipartite_regular
from .graphs import LabeledGraph, PerfectMatching, bipartition

Entry = int | Fraction


@dataclass(frozen=True, init=False)
class BiadjacencyMatrix:
    """Square matrix with exact entries: ints or Fractions, never floats."""

    m: int
    rows: tuple[tuple[Entry, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Entry]]):
        data = tuple(tuple(row) for row in rows)
        for row in data:
            if len(row) != len(data):
                raise ValueError(
                    f"matrix must be square, got a row of length {len(row)} in size {len(data)}"
                )
            for entry in row:
                if not isinstance(entry, (int, Fraction)):
                    raise TypeError(f"entries must be int or Fraction, got {type(entry).__name__}")
        object.__setattr__(self, "m", len(data))
        object.__setattr__(self, "rows", data)


def biadjacency(g: LabeledGraph) -> tuple[BiadjacencyMatrix, tuple[int, ...], tuple[int, ...]]:
    """0/1 matrix of a bipartite graph with equal color classes.

    Rows follow the first class and columns the second, both in ascending
    vertex order; the classes are returned alongside the matrix.
    """
    classes = bipartition(g)
    if classes is None:
        raise ValueError("graph is not bipartite")
    left, right = classes
    if len(left) != len(right):
        raise ValueError(f"bipartition classes differ in size ({len(left)} vs {len(right)})")
    adj = g.adjacency
    rows = tuple(tuple(adj[u] >> v & 1 for v in right) for u in left)
    return BiadjacencyMatrix(rows), left, right


def permanent_ryser(matrix: BiadjacencyMatrix) -> Entry:
    """Permanent by inclusion-exclusion over column subsets.

    Per(A) = (-1)^m * sum over nonempty S of (-1)^|S| * prod_i sum_{j in S}
    a[i][j].  Subsets are walked in Gray code order so each step updates the m
    row sums by a single column.
    """
    m = matrix.m
    if m == 0:
        return 1
    rows = matrix.rows
    sums: list[Entry] = [0] * m
    total: Entry = 0
    previous = 0
    for counter in range(1, 1 << m):
        code = counter ^ (counter >> 1)
        flipped = code ^ previous
        j = flipped.bit_length() - 1
        if code & flipped:
            for i in range(m):
                sums[i] += rows[i][j]
        else:
            for i in range(m):
                sums[i] -= rows[i][j]
        previous = code
        product: Entry = 1
        for value in sums:
            if not value:
                product = 0
                break
            product *= value
        if code.bit_count() & 1:
            total -= product
        else:
            total += product
    return total if m % 2 == 0 else -total


def permanent_naive(matrix: BiadjacencyMatrix) -> Entry:
    """Permanent straight from the definition, as the reference route.

    A sum of m! products; limited to m <= 9 to keep the brute force honest.
    """
    m = matrix.m
    if m > 9:
        raise ValueError(f"the naive permanent is limited to m <= 9, got {m}")
    rows = matrix.rows
    total: Entry = 0
    for perm in itertools.permutations(range(m)):
        product: Entry = 1
        for i, j in enumerate(perm):
            value = rows[i][j]
            if not value:
                product = 0
                break
            product *= value
        total += product
    return total


def count_perfect_matchings(g: LabeledGraph) -> int:
    """Exact number of perfect matchings of a bipartite graph with equal classes."""
    matrix, _, _ = biadjacency(g)
    result = permanent_ryser(matrix)
    assert isinstance(result, int)
    return result


def enumerate_perfect_matchings_of(g: LabeledGraph) -> list[PerfectMatching]:
    """Every perfect matching of g, by lexicographic backtracking.

    Deliberately independent of the permanent route; the two are compared in
    tests.  A graph on an odd number of vertices has no perfect matchings.
    """
    if g.n % 2:
        return []
    adj = g.adjacency
    out: list[PerfectMatching] = []
    pairs: list[tuple[int, int]] = []

    def extend(free: int) -> None:
        if not free:
            out.append(PerfectMatching(pairs))
            return
        low = free & -free
        u = low.bit_length() - 1
        options = adj[u] & (free ^ low)
        while options:
            pick = options & -options
            options ^= pick
            v = pick.bit_length() - 1
            pairs.append((u, v))
            extend(free ^ low ^ pick)
            pairs.pop()

    extend((1 << (g.n + 1)) - 2)
    return out


def van_der_waerden_bound(m: int) -> Fraction:
    """Minimum permanent m!/m^m of an m-by-m doubly stochastic matrix."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return Fraction(factorial(m), m ** m)


@dataclass(frozen=True)
class MatchingBoundReport:
    """Matching count of a regular bipartite graph against r^m * m!/m^m."""

    half_size: int
    degree: int
    count: int
    bound: Fraction
    doubly_stochastic: bool
    passed: bool


def check_regular_matching_bound(g: LabeledGraph) -> MatchingBoundReport:
    """Count perfect matchings of an r-regular bipartite graph and compare with
    the guaranteed minimum r^m * m!/m^m.

    The scaled matrix A/r is confirmed doubly stochastic in exact rationals,
    which is what makes the minimum apply.
    """
    matrix, left, _ = biadjacency(g)
    degs = g.degrees()
    degree = degs[0] if degs else 0
    if any(d != degree for d in degs):
        raise ValueError("graph is not regular")
    if degree < 1:
        raise ValueError("graph must have positive degree")
    m = matrix.m
    count = permanent_ryser(matrix)
    assert isinstance(count, int)
    row_sums_ok = all(sum(Fraction(e, degree) for e in row) == 1 for row in matrix.rows)
    col_sums_ok = all(
        sum(Fraction(matrix.rows[i][j], degree) for i in range(m)) == 1 for j in range(m)
    )
    bound = Fraction(degree ** m) * van_der_waerden_bound(m)
    return MatchingBoundReport(
        m, degree, count, bound, row_sums_ok and col_sums_ok, count >= bound
    )


def build_noncreating_family(g: LabeledGraph, k: int) -> list[PerfectMatching]:
    """All perfect matchings of a validated C_{2k}-free bipartite regular graph.

    The union of two matchings of g lives inside g, so if g has no cycle on 2k
    vertices then no pair of the family creates one: the family is pairwise
    non-creating by construction.
    """
    report = validate_c2kfree_bipartite_regular(g, k)
    if not report.passed:
        raise ValueError(
            "graph fails the bipartite/regular/girth screen: "
            f"bipartite={report.is_bipartite} regular={report.is_regular} girth={report.girth}"
        )
    return enumerate_perfect_matchings_of(g)
