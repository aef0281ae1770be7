"""Exhaustive enumeration of small ground objects and exact maximum clique /
independent set search over pairwise compatibility graphs.

Compatibility graphs index their objects 0-based and store adjacency as
bitmasks.  The clique solver is branch and bound with greedy coloring bounds;
witnesses are always the lexicographically least optimal set and are
re-verified against the defining relation before being returned.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Sequence

from .graphs import (
    HamPath,
    LabeledGraph,
    PerfectMatching,
    Permutation,
    is_creating,
)

ENUM_LIMIT_ENV = "CYCLECREATE_MAX_ENUM"
DEFAULT_ENUM_LIMIT = 1_000_000
MAX_PATH_VERTICES = 8
MAX_MATCHING_VERTICES = 12
MAX_PERMUTATION_SIZE = 8


def enumeration_limit() -> int:
    """Cap on how many objects one enumeration call may produce.

    Read from the CYCLECREATE_MAX_ENUM environment variable on every call;
    unset means 1000000.
    """
    raw = os.environ.get(ENUM_LIMIT_ENV)
    if raw is None:
        return DEFAULT_ENUM_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENUM_LIMIT_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENUM_LIMIT_ENV} must be positive, got {value}")
    return value


def _check_enum_size(what: str, count: int) -> None:
    limit = enumeration_limit()
    if count > limit:
        raise ValueError(
            f"{what} would enumerate {count} objects, over the {ENUM_LIMIT_ENV} limit of {limit}"
        )


def enumerate_ham_paths(n: int) -> list[HamPath]:
    """All n!/2 Hamiltonian paths on 1..n, canonical orientation, lexicographic order."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if n > MAX_PATH_VERTICES:
        raise ValueError(f"path enumeration is limited to n <= {MAX_PATH_VERTICES}, got {n}")
    _check_enum_size(f"paths on {n} vertices", factorial(n) // 2)
    return [
        HamPath(p)
        for p in itertools.permutations(range(1, n + 1))
        if p[0] < p[-1]
    ]


def enumerate_perfect_matchings(n: int) -> list[PerfectMatching]:
    """All (n-1)!! perfect matchings of the complete graph on 1..n.

    The smallest free vertex is always paired next, with its partner scanned in
    increasing order, so the output order is lexicographic and reproducible.
    """
    if n < 2 or n % 2:
        raise ValueError(f"n must be a positive even number, got {n}")
    if n > MAX_MATCHING_VERTICES:
        raise ValueError(
            f"matching enumeration is limited to n <= {MAX_MATCHING_VERTICES}, got {n}"
        )
    count = 1
    for odd in range(1, n, 2):
        count *= odd
    _check_enum_size(f"matchings on {n} vertices", count)
    out: list[PerfectMatching] = []
    pairs: list[tuple[int, int]] = []

    def extend(available: list[int]) -> None:
        if not available:
            out.append(PerfectMatching(pairs))
            return
        first = available[0]
        for idx in range(1, len(available)):
            pairs.append((first, available[idx]))
            extend(available[1:idx] + available[idx + 1:])
            pairs.pop()

    extend(list(range(1, n + 1)))
    return out


def enumerate_permutations(m: int) -> list[Permutation]:
    """All m! permutations of 1..m in lexicographic image order."""
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if m > MAX_PERMUTATION_SIZE:
        raise ValueError(
            f"permutation enumeration is limited to m <= {MAX_PERMUTATION_SIZE}, got {m}"
        )
    _check_enum_size(f"permutations of 1..{m}", factorial(m))
    return [Permutation(p) for p in itertools.permutations(range(1, m + 1))]


def is_reversing(p1: Permutation, p2: Permutation) -> bool:
    """True iff positions i < j exist with p1(i) = p2(j) and p1(j) = p2(i)."""
    if p1.m != p2.m:
        raise ValueError(f"permutations act on different sets (m={p1.m} vs m={p2.m})")
    inv2 = p2.inverse
    for i in range(1, p1.m + 1):
        j = inv2[p1(i) - 1]
        if j > i and p1(j) == p2(i):
            return True
    return False


def perm_to_matching(p: Permutation) -> PerfectMatching:
    """Encode a permutation of 1..m as the matching {(i, p(i) + m)} on 1..2m."""
    return PerfectMatching((i, p(i) + p.m) for i in range(1, p.m + 1))


# ============================================================
# compatibility graphs and exact clique search
# ============================================================


@dataclass(frozen=True)
class CompatibilityGraph:
    """A pairwise relation over a fixed object tuple, as 0-based adjacency bitmasks."""

    objects: tuple
    adjacency: tuple[int, ...]
    relation: int | str  # a cycle length, or the string "reversing"

    @property
    def size(self) -> int:
        return len(self.objects)

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adjacency) // 2


def _relation_fn(objects: tuple, relation: int | str) -> Callable:
    if objects and isinstance(objects[0], Permutation):
        if relation != "reversing":
            raise ValueError(f"permutations only support the 'reversing' relation, got {relation!r}")
        return is_reversing
    if not isinstance(relation, int):
        raise ValueError(
            f"paths, matchings, and graphs need an integer cycle length, got {relation!r}"
        )

    def creating(a, b) -> bool:
        return is_creating(a, b, relation)

    return creating


def build_compatibility_graph(objects: Sequence, relation: int | str) -> CompatibilityGraph:
    """Evaluate the creating or reversing relation on every pair of objects.

    Objects must be of one kind: paths, matchings, or graphs together with an
    integer cycle length, or permutations with the "reversing" relation.
    """
    objs = tuple(objects)
    if len({type(o) for o in objs}) > 1:
        names = ", ".join(sorted({type(o).__name__ for o in objs}))
        raise TypeError(f"objects mix kinds: {names}")
    related = _relation_fn(objs, relation)
    adjacency = [0] * len(objs)
    for i in range(len(objs)):
        for j in range(i + 1, len(objs)):
            if related(objs[i], objs[j]):
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    return CompatibilityGraph(objs, tuple(adjacency), relation)


def _color_order(cand: int, adjacency: Sequence[int]) -> tuple[list[int], list[int]]:
    """Greedy coloring of a candidate mask.

    Returns the candidate vertices listed class by class together with their
    color numbers, which are nondecreasing along the list.
    """
    order: list[int] = []
    colors: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            order.append(v)
            colors.append(color)
            uncolored ^= low
            available = (available ^ low) & ~adjacency[v]
    return order, colors


def _max_clique_bits(adjacency: Sequence[int], cand: int) -> tuple[int, int]:
    """Exact maximum clique inside a candidate mask: (size, member mask)."""
    best_size = 0
    best_mask = 0

    def expand(mask: int, size: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if not cand:
            if size > best_size:
                best_size = size
                best_mask = mask
            return
        order, colors = _color_order(cand, adjacency)
        for idx in range(len(order) - 1, -1, -1):
            if size + colors[idx] <= best_size:
                return
            v = order[idx]
            bit = 1 << v
            cand ^= bit
            expand(mask | bit, size + 1, cand & adjacency[v])

    expand(0, 0, cand)
    return best_size, best_mask


def _has_clique(adjacency: Sequence[int], cand: int, target: int) -> bool:
    """Early-exit decision: does the candidate mask hold a clique of size target?"""
    if target <= 0:
        return True
    if cand.bit_count() < target:
        return False

    def expand(size: int, cand: int) -> bool:
        if size >= target:
            return True
        if not cand:
            return False
        order, colors = _color_order(cand, adjacency)
        for idx in range(len(order) - 1, -1, -1):
            if size + colors[idx] < target:
                return False
            v = order[idx]
            bit = 1 << v
            cand ^= bit
            if expand(size + 1, cand & adjacency[v]):
                return True
        return False

    return expand(0, cand)


def _lex_least_clique(adjacency: Sequence[int], size: int) -> tuple[int, ...]:
    """A maximum clique that is lexicographically least as a sorted index tuple."""
    if size == 0:
        return ()
    full = (1 << size) - 1
    omega, _ = _max_clique_bits(adjacency, full)
    chosen: list[int] = []
    cand = full
    need = omega
    for v in range(size):
        if need == 0:
            break
        bit = 1 << v
        if not cand & bit:
            continue
        if _has_clique(adjacency, cand & adjacency[v], need - 1):
            chosen.append(v)
            cand &= adjacency[v]
            need -= 1
        else:
            cand ^= bit
    if need:
        raise RuntimeError("internal error: clique reconstruction lost the optimum")
    return tuple(chosen)


def _reverify(cg: CompatibilityGraph, witness: tuple[int, ...], expect_related: bool) -> None:
    related = _relation_fn(cg.objects, cg.relation)
    for a, b in itertools.combinations(witness, 2):
        if related(cg.objects[a], cg.objects[b]) != expect_related:
            raise RuntimeError("internal error: witness failed re-verification against the relation")


def max_clique(cg: CompatibilityGraph) -> tuple[int, tuple[int, ...]]:
    """Exact clique number and the lexicographically least optimal witness.

    The witness is re-verified pair by pair against the stored relation before
    being returned.
    """
    witness = _lex_least_clique(cg.adjacency, cg.size)
    _reverify(cg, witness, expect_related=True)
    return len(witness), witness


def max_independent_set(cg: CompatibilityGraph) -> tuple[int, tuple[int, ...]]:
    """Exact independence number and the lexicographically least optimal witness."""
    full = (1 << cg.size) - 1
    complement = tuple(
        (full & ~cg.adjacency[v]) & ~(1 << v) for v in range(cg.size)
    )
    witness = _lex_least_clique(complement, cg.size)
    _reverify(cg, witness, expect_related=False)
    return len(witness), witness


# ============================================================
# exact extremal values
# ============================================================


def exact_h(n: int, length: int) -> tuple[int, tuple[HamPath, ...]]:
    """Largest family of Hamiltonian paths on 1..n whose pairwise unions all
    contain a cycle on exactly `length` vertices, with a witness family."""
    if length < 3:
        raise ValueError(f"cycle length must be at least 3, got {length}")
    paths = enumerate_ham_paths(n)
    size, indices = max_clique(build_compatibility_graph(paths, length))
    return size, tuple(paths[i] for i in indices)


def exact_m(n: int, length: int) -> tuple[int, tuple[PerfectMatching, ...]]:
    """Largest pairwise creating family of perfect matchings of the complete
    graph on 1..n, for an even cycle length, with a witness family."""
    if length < 4 or length % 2:
        raise ValueError(f"matching unions only contain even cycles of length >= 4, got {length}")
    matchings = enumerate_perfect_matchings(n)
    size, indices = max_clique(build_compatibility_graph(matchings, length))
    return size, tuple(matchings[i] for i in indices)


def exact_rp(m: int) -> tuple[int, tuple[Permutation, ...]]:
    """Largest pairwise reversing family of permutations of 1..m, with witness."""
    perms = enumerate_permutations(m)
    size, indices = max_clique(build_compatibility_graph(perms, "reversing"))
    return size, tuple(perms[i] for i in indices)


def max_triangle_creating_paths(n: int) -> int:
    """Closed form for the largest pairwise triangle-creating path family on 1..n.

    Equal to C(n, floor(n/2)) for odd n and half that for even n, the number
    of balanced bipartitions of 1..n.  Two paths with the same alternating
    position bipartition have a bipartite union and never create a triangle,
    so a family holds at most one path per balanced bipartition, and that cap
    is attained.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    value = comb(n, n // 2)
    return value if n % 2 else value // 2
