import itertools
import random

import pytest

from chromaspec import (
    CanonicalSizeError,
    Graph,
    canonical_form,
    enumerate_census,
    graph_from_canonical,
)


def reference_min_bits(g: Graph) -> int:
    """Independent oracle: minimum column-major bitstring over all orderings."""
    masks = g.adjacency_masks()
    best = None
    for perm in itertools.permutations(range(g.n)):
        bits = 0
        for j in range(1, g.n):
            for i in range(j):
                bits = (bits << 1) | (masks[perm[i]] >> perm[j] & 1)
        if best is None or bits < best:
            best = bits
    return best


def unpack_bits(form: bytes, n: int) -> int:
    nbits = n * (n - 1) // 2
    raw = int.from_bytes(form[1:], "big")
    pad = (-nbits) % 8
    return raw >> pad


def test_p3_relabelings_agree():
    forms = {
        canonical_form(Graph.build(3, [(a, b), (b, c)]))
        for a, b, c in itertools.permutations(range(3))
    }
    assert len(forms) == 1


def test_k3_vs_p3_differ():
    assert canonical_form(Graph.complete(3)) != canonical_form(Graph.path(3))


def test_k4_minus_edge_all_labelings_one_form():
    base = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]  # K4 minus (2,3)
    forms = set()
    for perm in itertools.permutations(range(4)):
        forms.add(canonical_form(Graph.build(4, [(perm[a], perm[b]) for a, b in base])))
    assert len(forms) == 1
    # and the form is the true minimum over all orderings
    assert unpack_bits(forms.pop(), 4) == reference_min_bits(Graph.build(4, base))


def test_matches_reference_on_all_small_graphs():
    for n in range(1, 6):
        for g in enumerate_census(n).graphs:
            assert unpack_bits(canonical_form(g), n) == reference_min_bits(g)


def test_matches_reference_on_random_six_vertex_graphs():
    rng = random.Random(17)
    for _ in range(60):
        edges = [(i, j) for i in range(6) for j in range(i + 1, 6) if rng.random() < 0.5]
        g = Graph.build(6, edges)
        assert unpack_bits(canonical_form(g), 6) == reference_min_bits(g)


def test_isomorphism_invariance_random():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(1, 7)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        g = Graph.build(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        h = Graph.build(n, [(perm[a], perm[b]) for a, b in edges])
        assert canonical_form(g) == canonical_form(h)


def test_round_trip_through_canonical_labels():
    rng = random.Random(29)
    for _ in range(50):
        n = rng.randint(1, 7)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        form = canonical_form(Graph.build(n, edges))
        assert canonical_form(graph_from_canonical(form)) == form


def test_limit_and_simplicity_guards():
    with pytest.raises(CanonicalSizeError):
        canonical_form(Graph.edgeless(9))
    with pytest.raises(ValueError):
        canonical_form(Graph.build(2, [(0, 1, 2)]))
    # raising the limit explicitly is allowed; twin pruning keeps K_10 instant
    assert canonical_form(Graph.complete(10), limit=10)[0] == 10


def test_distinct_classes_distinct_forms():
    # canonical forms over a census level are pairwise distinct by construction;
    # re-derive a level from scratch and compare against the census size
    n = 5
    forms = set()
    for mask in range(1 << 10):
        pairs = list(itertools.combinations(range(n), 2))
        edges = [pairs[i] for i in range(10) if mask >> i & 1]
        forms.add(canonical_form(Graph.build(n, edges)))
    assert len(forms) == len(enumerate_census(n).graphs) == 34
