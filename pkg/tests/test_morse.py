import pytest

from cyclotri import cyclic_polytope_boundary
from cyclotri.homology import betti_numbers_f2
from cyclotri.morse import (
    critical_points,
    heegaard_upper_bound,
    identity_rsl,
    index1_total,
    morse_vector,
    random_rsl,
)
from cyclotri.mpqr import build_fibre, derive_params, manifold_complex


def test_sphere_has_two_critical_points():
    c = cyclic_polytope_boundary(6).expand()
    points = critical_points(c, identity_rsl(c))
    assert [(p.index, p.multiplicity) for p in points] == [(0, 1), (3, 1)]
    assert morse_vector(c, points) == (1, 0, 0, 1)


def test_family_identity_critical_points():
    c = manifold_complex(2, 3, 1)
    points = critical_points(c, identity_rsl(c))
    assert sum(p.multiplicity for p in points) == 6 == 2 * 1 * 2 + 2
    index1 = [(p.vertex, p.multiplicity) for p in points if p.index == 1]
    assert index1 == [(2, 1), (3, 1)]
    assert morse_vector(c, points) == (1, 2, 2, 1)


def test_larger_family_morse_vector():
    c = manifold_complex(3, 4, 12)
    points = critical_points(c, identity_rsl(c))
    assert morse_vector(c, points) == (1, 6, 6, 1)


def test_morse_relations_random_orderings():
    complexes = [cyclic_polytope_boundary(8).expand(), manifold_complex(2, 3, 2)]
    for c in complexes:
        betti_sum = sum(betti_numbers_f2(c))
        for seed in range(12):
            points = critical_points(c, random_rsl(c, seed))
            vector = morse_vector(c, points)  # raises on a relation violation
            assert vector[0] - vector[1] + vector[2] - vector[3] == 0
            assert sum(vector) >= betti_sum


def test_absent_vertex_profiles_repeat():
    # when -v is missing from the link of 0, vertices v and v-1 are critical
    # of the same index and multiplicity under the identity order
    c = manifold_complex(3, 4, 2)
    n = 26
    link_vertices = set(c.link((0,)).vertices)
    profile = {}
    for p in critical_points(c, identity_rsl(c)):
        profile.setdefault(p.vertex, []).append((p.index, p.multiplicity))
    absent = [v for v in range(2, n) if (n - v) % n not in link_vertices]
    assert absent  # the complex is not neighbourly, so the test has content
    for v in absent:
        assert profile.get(v, []) == profile.get(v - 1, [])


def test_fibre_spans_never_disconnect():
    for (p, q, r) in [(3, 4, 2), (2, 5, 3)]:
        params = derive_params(p, q, r)
        n, pq = params.n, p * q
        for which in (1, 2):
            fibre = build_fibre(params, which)
            if not fibre.cycles:
                continue
            link = fibre.expand().link((0,))
            for v in range(1, pq + 1):
                window = {(n - j) % n for j in range(1, v + 1)}
                span = link.span(window)
                comps = len(span.connected_components()) if span.facets else 0
                assert comps <= 1


def test_full_link_spans_connected_beyond_pq():
    for (p, q, r) in [(2, 3, 3), (3, 4, 2)]:
        params = derive_params(p, q, r)
        n, pq = params.n, p * q
        link = manifold_complex(p, q, r).link((0,))
        for v in range(pq, n):
            window = {(n - j) % n for j in range(1, v + 1)}
            assert len(link.span(window).connected_components()) == 1


def test_heegaard_bound_sphere():
    c = cyclic_polytope_boundary(10).expand()
    bound, witness = heegaard_upper_bound(c, seed=1)
    assert bound == 0
    assert index1_total(c, witness) == 0


def test_heegaard_bound_family_members():
    for (p, q, r) in [(2, 3, 5), (2, 5, 1)]:
        c = manifold_complex(p, q, r)
        bound, _ = heegaard_upper_bound(c, strategies=("identity",))
        assert bound <= (p - 1) * (q - 1)


def test_heegaard_search_improves_lens_space():
    c = manifold_complex(2, 3, 2)
    bound, witness = heegaard_upper_bound(c, seed=0, restarts=32, iterations=1000)
    assert bound == 1
    assert index1_total(c, witness) == 1


def test_rejects_wrong_vertex_set():
    c = manifold_complex(2, 3, 1)
    with pytest.raises(ValueError):
        critical_points(c, identity_rsl(cyclic_polytope_boundary(6).expand()))
