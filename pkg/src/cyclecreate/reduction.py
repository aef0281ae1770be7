"""Turning creating path families into creating matching families, and
shrinking the ground set of a matching family while keeping the pairwise
property.  All steps are deterministic, with documented tie-breaks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .graphs import HamPath, LabeledGraph, PerfectMatching, cycles_of_length, union


@dataclass(frozen=True)
class AssociatedTriple:
    """Three vertex-disjoint block classes cut out of a Hamiltonian path.

    A path on n = 3tk vertices is cut into n/k blocks of k consecutive
    positions; block i (0-based) goes to class i mod 3.  Each block is stored
    as its vertices in the path's stored orientation, and each class lists its
    blocks sorted by smallest vertex, so equality between triples is
    orientation-sensitive, block-by-block equality.
    """

    n: int
    k: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]

    def class_vertices(self, index: int) -> frozenset[int]:
        """All vertices of one class (0-based index)."""
        return frozenset(v for block in self.classes[index] for v in block)


def associated_triple(h: HamPath, k: int) -> AssociatedTriple:
    """Cut a path on 3tk vertices into its three interleaved block classes."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if h.n % (3 * k) != 0:
        raise ValueError(f"n must be a multiple of 3k; got n={h.n}, k={k}")
    blocks = [h.order[i:i + k] for i in range(0, h.n, k)]
    classes: list[list[tuple[int, ...]]] = [[], [], []]
    for i, block in enumerate(blocks):
        classes[i % 3].append(block)
    return AssociatedTriple(h.n, k, tuple(tuple(sorted(cls, key=min)) for cls in classes))


def fixed_graph(triple: AssociatedTriple) -> LabeledGraph:
    """Union of all blocks of a triple: n/k disjoint paths on k vertices each."""
    edges = [
        (block[i], block[i + 1])
        for cls in triple.classes
        for block in cls
        for i in range(triple.k - 1)
    ]
    return LabeledGraph(triple.n, edges)


def triple_count(n: int, k: int) -> int:
    """Number of distinct associated triples on n = 3tk vertices.

    Computed literally as the product of three exact factors: unordered
    partitions of 1..n into n/k blocks of size k, an oriented path on each
    block, and a choice of which blocks form each of the three equal classes.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if n % (3 * k) != 0:
        raise ValueError(f"n must be a multiple of 3k; got n={n}, k={k}")
    block_total = n // k
    per_class = n // (3 * k)
    partitions = factorial(n)
    for _ in range(block_total):
        partitions //= factorial(k)
    partitions //= factorial(block_total)
    orientations = factorial(k) ** block_total
    colorings = factorial(block_total) // factorial(per_class) ** 3
    return partitions * orientations * colorings


def pigeonhole_largest_class(
    family: Sequence[HamPath], k: int
) -> tuple[list[HamPath], AssociatedTriple]:
    """Largest subfamily sharing one associated triple, in input order.

    Ties between equally large groups go to the smallest triple encoding.
    """
    members = list(family)
    if not members:
        raise ValueError("family must be nonempty")
    groups: dict[AssociatedTriple, list[HamPath]] = {}
    for h in members:
        groups.setdefault(associated_triple(h, k), []).append(h)
    top = max(len(g) for g in groups.values())
    winner = min((t for t, g in groups.items() if len(g) == top), key=lambda t: t.classes)
    return list(groups[winner]), winner


@dataclass(frozen=True)
class StrippedFamily:
    """Matchings left after deleting the shared blocks from a path subfamily."""

    matchings: tuple[PerfectMatching, ...]
    kept_indices: tuple[int, ...]            # 0-based indices into the input subfamily
    uncovered: tuple[int, int]               # original labels of the two dropped vertices
    label_map: tuple[tuple[int, int], ...]   # (original, new) pairs, ascending


def strip_to_matchings(subfamily: Sequence[HamPath], k: int) -> StrippedFamily:
    """Delete the shared blocks and relabel what is left onto 1..n-2.

    Removing the shared block edges from a member leaves its n/k - 1
    connecting edges, which touch every vertex except the two path endpoints.
    Members of one triple class can still start and end in different blocks, so
    their leftover edges can miss different endpoint pairs; only members
    missing the same pair fit one order-preserving relabeling, and relabeling
    members separately would scramble pairwise unions.  The largest group with
    one uncovered pair is kept (ties: smallest pair) and relabeled together.
    """
    members = list(subfamily)
    if not members:
        raise ValueError("subfamily must be nonempty")
    triple = associated_triple(members[0], k)
    for idx, h in enumerate(members[1:], start=1):
        if associated_triple(h, k) != triple:
            raise ValueError(f"member {idx} does not share the subfamily's associated triple")
    fixed_edges = fixed_graph(triple).edges
    n = triple.n
    leftovers: list[frozenset[tuple[int, int]]] = []
    for idx, h in enumerate(members):
        if not fixed_edges <= h.edges:
            raise ValueError(f"member {idx} does not contain the shared blocks")
        leftovers.append(h.edges - fixed_edges)
    by_uncovered: dict[tuple[int, int], list[int]] = {}
    for idx, edges in enumerate(leftovers):
        covered = {v for e in edges for v in e}
        missing = tuple(sorted(set(range(1, n + 1)) - covered))
        by_uncovered.setdefault((missing[0], missing[1]), []).append(idx)
    top = max(len(g) for g in by_uncovered.values())
    pair = min(p for p, g in by_uncovered.items() if len(g) == top)
    kept = by_uncovered[pair]
    survivors = [v for v in range(1, n + 1) if v not in pair]
    relabel = {old: new for new, old in enumerate(survivors, start=1)}
    matchings = tuple(
        PerfectMatching((relabel[u], relabel[v]) for u, v in leftovers[idx])
        for idx in kept
    )
    return StrippedFamily(
        matchings,
        tuple(kept),
        pair,
        tuple((old, relabel[old]) for old in survivors),
    )


def verify_fixed_edges_unused(h1: HamPath, h2: HamPath, k: int) -> bool:
    """Check that no cycle on exactly 2k vertices in the union touches a block edge.

    The two paths must share their associated triple; every cycle of that
    length in their union is enumerated and tested against the shared blocks.
    """
    triple = associated_triple(h1, k)
    if associated_triple(h2, k) != triple:
        raise ValueError("paths do not share an associated triple")
    fixed_edges = fixed_graph(triple).edges
    merged = union(h1.graph, h2.graph)
    for cycle in cycles_of_length(merged, 2 * k):
        for i in range(len(cycle)):
            u, v = cycle[i], cycle[(i + 1) % len(cycle)]
            if ((u, v) if u < v else (v, u)) in fixed_edges:
                return False
    return True


@dataclass(frozen=True)
class ReducedFamily:
    """Matchings kept after deleting vertex 1 and its most common partner."""

    matchings: tuple[PerfectMatching, ...]
    kept_indices: tuple[int, ...]            # 0-based indices into the input family
    removed: tuple[int, int]                 # the deleted pair, original labels
    label_map: tuple[tuple[int, int], ...]   # (original, new) pairs, ascending


def ground_set_reduce(family: Sequence[PerfectMatching]) -> ReducedFamily:
    """Drop to a subfamily agreeing on vertex 1's partner, then delete that pair.

    Vertex 1 has at most n-1 distinct partners across the family, so the kept
    subfamily has at least ceil(|family| / (n-1)) members (ties between equally
    common partners go to the smallest).  Two kept members share the deleted
    pair as a common component of their union, so no cycle of their union ever
    touches it and every created cycle survives the deletion.  The remaining
    vertices are relabeled onto 1..n-2 preserving order.
    """
    members = list(family)
    if not members:
        raise ValueError("family must be nonempty")
    n = members[0].n
    if any(m.n != n for m in members):
        raise ValueError("family members live on different ground sets")
    if n < 4:
        raise ValueError(f"ground set must have at least 4 vertices, got {n}")
    partners = Counter(m.partner[1] for m in members)
    top = max(partners.values())
    chosen = min(p for p, c in partners.items() if c == top)
    kept = [i for i, m in enumerate(members) if m.partner[1] == chosen]
    survivors = [v for v in range(1, n + 1) if v not in (1, chosen)]
    relabel = {old: new for new, old in enumerate(survivors, start=1)}
    matchings = tuple(
        PerfectMatching(
            (relabel[u], relabel[v])
            for u, v in members[i].pairs
            if 1 not in (u, v)
        )
        for i in kept
    )
    return ReducedFamily(
        matchings,
        tuple(kept),
        (1, chosen),
        tuple((old, relabel[old]) for old in survivors),
    )
