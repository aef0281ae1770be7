import itertools
import random
from math import factorial

import pytest

from cyclecreate.graphs import (
    HamPath,
    PerfectMatching,
    is_creating,
    verify_pairwise_creating,
)
from cyclecreate.reduction import (
    AssociatedTriple,
    associated_triple,
    fixed_graph,
    ground_set_reduce,
    pigeonhole_largest_class,
    strip_to_matchings,
    triple_count,
    verify_fixed_edges_unused,
)

IDENTITY_12 = HamPath(range(1, 13))
# Same block classes as the identity path: the two middle-class blocks swap slots.
SWAPPED_MIDDLE_12 = HamPath((1, 2, 9, 10, 5, 6, 7, 8, 3, 4, 11, 12))
# Same block classes again, but the first-class swap moves the path endpoints.
SWAPPED_FIRST_12 = HamPath((7, 8, 3, 4, 5, 6, 1, 2, 9, 10, 11, 12))


def random_sharing_pair(rng):
    """Two distinct-looking paths guaranteed to share their associated triple:
    shuffle each class's blocks among that class's slots, directions kept."""
    base = list(range(1, 13))
    rng.shuffle(base)
    h1 = HamPath(base)
    blocks = [h1.order[i:i + 2] for i in range(0, 12, 2)]
    while True:
        class_orders = []
        for c in range(3):
            slots = [c, c + 3]
            rng.shuffle(slots)
            class_orders.append(slots)
        order = []
        for slot in range(6):
            order.extend(blocks[class_orders[slot % 3][slot // 3]])
        if order[0] < order[-1]:
            return h1, HamPath(order)


# ------------------------------------------------------------
# associated triples
# ------------------------------------------------------------

def test_associated_triple_identity_path():
    triple = associated_triple(IDENTITY_12, 2)
    assert triple.n == 12 and triple.k == 2
    assert triple.classes == (
        ((1, 2), (7, 8)),
        ((3, 4), (9, 10)),
        ((5, 6), (11, 12)),
    )
    assert triple.class_vertices(0) == frozenset({1, 2, 7, 8})


def test_associated_triple_validation():
    with pytest.raises(ValueError, match="multiple of 3k"):
        associated_triple(HamPath(range(1, 11)), 2)
    with pytest.raises(ValueError, match="at least 2"):
        associated_triple(IDENTITY_12, 1)


def test_associated_triple_is_orientation_sensitive():
    flipped_block = HamPath((2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12))
    assert associated_triple(flipped_block, 2) != associated_triple(IDENTITY_12, 2)


def test_associated_triple_same_for_reversed_input():
    # reversal canonicalizes back to the identical stored orientation
    assert HamPath(range(12, 0, -1)) == IDENTITY_12
    assert associated_triple(HamPath(range(12, 0, -1)), 2) == associated_triple(IDENTITY_12, 2)


def test_block_swaps_preserve_the_triple():
    base = associated_triple(IDENTITY_12, 2)
    assert associated_triple(SWAPPED_MIDDLE_12, 2) == base
    assert associated_triple(SWAPPED_FIRST_12, 2) == base


def test_fixed_graph_shape():
    triple = associated_triple(IDENTITY_12, 2)
    fg = fixed_graph(triple)
    assert fg.n == 12
    assert fg.edges == frozenset({(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12)})
    nine = associated_triple(HamPath(range(1, 10)), 3)
    assert fixed_graph(nine).edges == frozenset(
        {(1, 2), (2, 3), (4, 5), (5, 6), (7, 8), (8, 9)}
    )


# ------------------------------------------------------------
# triple counting
# ------------------------------------------------------------

def test_triple_count_small_case_by_enumeration():
    # n = 6, k = 2: one directed block per class, so every arrangement of the
    # six vertices into three ordered directed pairs is its own triple.
    distinct = set()
    for perm in itertools.permutations(range(1, 7)):
        distinct.add(
            AssociatedTriple(
                6, 2, (((perm[0], perm[1]),), ((perm[2], perm[3]),), ((perm[4], perm[5]),))
            )
        )
    assert len(distinct) == 720
    assert triple_count(6, 2) == 720


def test_triple_count_closed_form_identity():
    for n, k in ((6, 2), (12, 2), (18, 2), (9, 3), (18, 3), (24, 4)):
        per_class = n // (3 * k)
        assert triple_count(n, k) == factorial(n) // factorial(per_class) ** 3, (n, k)
    assert triple_count(12, 2) == 59875200


def test_triple_count_validation():
    with pytest.raises(ValueError, match="multiple of 3k"):
        triple_count(10, 2)
    with pytest.raises(ValueError, match="at least 2"):
        triple_count(6, 1)


def test_triples_from_paths_land_in_the_counted_set():
    rng = random.Random(31001)
    count = triple_count(6, 2)
    seen = set()
    for _ in range(300):
        order = list(range(1, 7))
        rng.shuffle(order)
        seen.add(associated_triple(HamPath(order), 2))
    assert len(seen) <= count


# ------------------------------------------------------------
# pigeonholing
# ------------------------------------------------------------

def test_pigeonhole_finds_largest_class():
    extras = [
        HamPath((1, 4, 3, 6, 5, 8, 7, 10, 9, 12, 11, 2)),
        HamPath((1, 3, 5, 7, 9, 11, 2, 4, 6, 8, 10, 12)),
    ]
    family = [extras[0], IDENTITY_12, extras[1], SWAPPED_MIDDLE_12]
    subfamily, triple = pigeonhole_largest_class(family, 2)
    assert subfamily == [IDENTITY_12, SWAPPED_MIDDLE_12]
    assert triple == associated_triple(IDENTITY_12, 2)


def test_pigeonhole_tie_breaks_by_smallest_encoding():
    shifted = HamPath((3, 4, 1, 2, 5, 6, 7, 8, 9, 10, 11, 12))
    subfamily, triple = pigeonhole_largest_class([shifted, IDENTITY_12], 2)
    assert subfamily == [IDENTITY_12]
    assert triple == associated_triple(IDENTITY_12, 2)


def test_pigeonhole_empty_family():
    with pytest.raises(ValueError):
        pigeonhole_largest_class([], 2)


# ------------------------------------------------------------
# stripping to matchings
# ------------------------------------------------------------

def test_strip_to_matchings_two_member_class():
    stripped = strip_to_matchings([IDENTITY_12, SWAPPED_MIDDLE_12], 2)
    assert stripped.kept_indices == (0, 1)
    assert stripped.uncovered == (1, 12)
    assert stripped.label_map == tuple((v, v - 1) for v in range(2, 12))
    assert [m.sorted_pairs for m in stripped.matchings] == [
        ((1, 2), (3, 4), (5, 6), (7, 8), (9, 10)),
        ((1, 8), (2, 7), (3, 10), (4, 9), (5, 6)),
    ]
    assert all(m.n == 10 for m in stripped.matchings)
    assert verify_pairwise_creating(stripped.matchings, 4).passed


def test_strip_to_matchings_reconstructs_the_originals():
    stripped = strip_to_matchings([IDENTITY_12, SWAPPED_MIDDLE_12], 2)
    back = {new: old for old, new in stripped.label_map}
    fixed = fixed_graph(associated_triple(IDENTITY_12, 2)).edges
    for member, original in zip(stripped.matchings, (IDENTITY_12, SWAPPED_MIDDLE_12)):
        restored = {tuple(sorted((back[u], back[v]))) for u, v in member.pairs}
        assert restored | fixed == original.edges


def test_strip_to_matchings_splits_on_uncovered_pair():
    stripped = strip_to_matchings([IDENTITY_12, SWAPPED_FIRST_12], 2)
    assert stripped.kept_indices == (0,)
    assert stripped.uncovered == (1, 12)
    assert len(stripped.matchings) == 1


def test_strip_to_matchings_requires_shared_triple():
    with pytest.raises(ValueError, match="share"):
        strip_to_matchings([IDENTITY_12, HamPath((1, 3, 5, 7, 9, 11, 2, 4, 6, 8, 10, 12))], 2)
    with pytest.raises(ValueError):
        strip_to_matchings([], 2)


def test_strip_to_matchings_random_sharing_pairs():
    rng = random.Random(31002)
    for _ in range(200):
        h1, h2 = random_sharing_pair(rng)
        stripped = strip_to_matchings([h1, h2], 2)
        assert len(stripped.matchings) in (1, 2)
        assert all(m.n == 10 for m in stripped.matchings)
        if h1 != h2 and len(stripped.matchings) == 2:
            assert verify_pairwise_creating(stripped.matchings, 4).passed


# ------------------------------------------------------------
# shared blocks stay out of created cycles
# ------------------------------------------------------------

def test_fixed_edges_unused_on_designed_pairs():
    assert verify_fixed_edges_unused(IDENTITY_12, SWAPPED_MIDDLE_12, 2)
    assert verify_fixed_edges_unused(IDENTITY_12, SWAPPED_FIRST_12, 2)
    assert verify_fixed_edges_unused(IDENTITY_12, IDENTITY_12, 2)


def test_fixed_edges_unused_requires_shared_triple():
    with pytest.raises(ValueError, match="share"):
        verify_fixed_edges_unused(
            IDENTITY_12, HamPath((1, 3, 5, 7, 9, 11, 2, 4, 6, 8, 10, 12)), 2
        )


def test_fixed_edges_unused_random_trials():
    rng = random.Random(31003)
    for _ in range(1000):
        h1, h2 = random_sharing_pair(rng)
        assert verify_fixed_edges_unused(h1, h2, 2), (h1.order, h2.order)


# ------------------------------------------------------------
# ground set reduction
# ------------------------------------------------------------

def test_ground_set_reduce_complete_graph_triple():
    family = [
        PerfectMatching([(1, 2), (3, 4)]),
        PerfectMatching([(1, 3), (2, 4)]),
        PerfectMatching([(1, 4), (2, 3)]),
    ]
    reduced = ground_set_reduce(family)
    assert reduced.removed == (1, 2)
    assert reduced.kept_indices == (0,)
    assert reduced.label_map == ((3, 1), (4, 2))
    assert [m.sorted_pairs for m in reduced.matchings] == [((1, 2),)]


def test_ground_set_reduce_keeps_agreeing_members():
    family = [
        PerfectMatching([(1, 2), (3, 4), (5, 6)]),
        PerfectMatching([(1, 2), (3, 5), (4, 6)]),
        PerfectMatching([(1, 3), (2, 4), (5, 6)]),
    ]
    reduced = ground_set_reduce(family)
    assert reduced.removed == (1, 2)
    assert reduced.kept_indices == (0, 1)
    assert all(m.n == 4 for m in reduced.matchings)
    assert is_creating(reduced.matchings[0], reduced.matchings[1], 4)


def test_ground_set_reduce_validation():
    with pytest.raises(ValueError):
        ground_set_reduce([])
    with pytest.raises(ValueError, match="different ground sets"):
        ground_set_reduce(
            [PerfectMatching([(1, 2), (3, 4)]), PerfectMatching([(1, 2), (3, 4), (5, 6)])]
        )
    with pytest.raises(ValueError, match="at least 4"):
        ground_set_reduce([PerfectMatching([(1, 2)])])
