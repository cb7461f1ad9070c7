import random
from math import gcd

import pytest

from cyclotri import (
    CyclicComplex,
    SimplicialComplex,
    canonicalize,
    compress,
    cyclic_polytope_boundary,
    gale_facets,
    parse_cycle,
    short_cycle,
    torus_decomposition,
)
from cyclotri.homology import homology_groups
from cyclotri.mpqr import build_manifold


def test_canonical_rotation():
    assert canonicalize((1, 3, 1, 2)).entries == (1, 2, 1, 3)
    assert canonicalize((7, 1, 3, 2)).entries == (1, 3, 2, 7)


def test_short_orbit_length():
    c = canonicalize((1, 6, 1, 6))
    assert c.entries == (1, 6, 1, 6)
    assert c.period == 2
    assert c.orbit_length == 7
    assert c.is_short_orbit


def test_full_symmetry_orbit():
    c = canonicalize((1, 1, 1, 1))
    assert c.orbit_length == 1


def test_entries_must_be_positive():
    with pytest.raises(ValueError):
        canonicalize((1, 0, 2))
    with pytest.raises(ValueError):
        parse_cycle("1:x:2")


def test_expand_single_tetrahedron():
    cc = CyclicComplex(4, (canonicalize((1, 1, 1, 1)),))
    assert cc.expand().facets == frozenset({(0, 1, 2, 3)})


def test_expand_short_orbit():
    cc = CyclicComplex(6, (canonicalize((1, 2, 1, 2)),))
    assert len(cc.expand().facets) == 3


def test_expand_matches_gale_enumeration():
    cc = CyclicComplex(7, (canonicalize((1, 1, 1, 4)), canonicalize((1, 2, 1, 3))))
    assert cc.expand().facets == gale_facets(7).facets
    assert cc.facet_count() == 14


def test_compress_round_trip():
    for n in (8, 11, 14):
        cc = cyclic_polytope_boundary(n)
        assert compress(cc.expand(), n) == cc


def test_compress_single_tetrahedron():
    cc = compress(SimplicialComplex([(0, 1, 2, 3)], n=4), 4)
    assert cc == CyclicComplex(4, (canonicalize((1, 1, 1, 1)),))


def test_compress_rejects_asymmetric():
    with pytest.raises(ValueError, match="not shift-invariant"):
        compress(SimplicialComplex([(0, 1, 2, 3)], n=5), 5)


def test_multipliers_contain_one_and_reversal():
    for n in (7, 9, 12):
        mults = cyclic_polytope_boundary(n).multipliers()
        assert 1 in mults
        assert n - 1 in mults


def test_multipliers_match_brute_force():
    m = build_manifold(2, 3, 1)
    brute = {
        u
        for u in range(1, 13)
        if gcd(u, 13) == 1 and m.relabel(u) == m
    }
    assert m.multipliers() == brute == {1}


def test_unit_relabelling_is_isomorphism():
    rng = random.Random(7)
    cc = cyclic_polytope_boundary(11)
    facets = cc.expand().facets
    for _ in range(5):
        u = rng.choice([x for x in range(2, 11) if gcd(x, 11) == 1])
        mapped = {tuple(sorted((u * v) % 11 for v in f)) for f in facets}
        assert mapped == cc.relabel(u).expand().facets


def test_shift_invariance_of_expansion():
    cc = build_manifold(2, 3, 2)
    facets = cc.expand().facets
    shifted = {tuple(sorted((v + 1) % cc.n for v in f)) for f in facets}
    assert shifted == facets


def test_orbit_length_matches_brute_force():
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.randint(6, 40)
        parts = []
        remaining = n
        for _ in range(3):
            a = rng.randint(1, max(1, remaining - 3))
            parts.append(a)
            remaining -= a
        if remaining < 1:
            continue
        parts.append(remaining)
        cycle = canonicalize(tuple(parts))
        base = set(cycle.base_simplex())
        orbit = {tuple(sorted((v + j) % n for v in base)) for j in range(n)}
        assert cycle.orbit_length == len(orbit)


def test_cyclic_polytope_cycles():
    assert {str(c) for c in cyclic_polytope_boundary(6).cycles} == {"1:1:1:3", "1:2:1:2"}
    assert {str(c) for c in cyclic_polytope_boundary(7).cycles} == {"1:1:1:4", "1:2:1:3"}
    # indices 3 and 4 coincide after rotation, leaving three distinct cycles
    assert {str(c) for c in cyclic_polytope_boundary(9).cycles} == {
        "1:1:1:6",
        "1:2:1:5",
        "1:3:1:4",
    }


def test_cyclic_polytope_matches_gale():
    for n in range(5, 16):
        assert cyclic_polytope_boundary(n).expand().facets == gale_facets(n).facets


def test_short_cycle():
    assert short_cycle(14).entries == (1, 6, 1, 6)
    with pytest.raises(ValueError):
        short_cycle(13)


def test_torus_decomposition_partition():
    inner, outer = torus_decomposition(9, 1)
    assert len(inner.cycles) == 1 and len(outer.cycles) == 2
    union = CyclicComplex(9, inner.cycles + outer.cycles)
    assert union == cyclic_polytope_boundary(9)
    with pytest.raises(ValueError):
        torus_decomposition(9, 3)  # the top index duplicates an inner cycle


def test_torus_decomposition_solid_tori():
    for n in range(8, 15):
        l = 1
        while True:
            try:
                inner, outer = torus_decomposition(n, l)
            except ValueError:
                break
            for tag, part in (("inner", inner), ("outer", outer)):
                h = homology_groups(part.expand())
                assert (h.betti, h.torsion[1]) == ((1, 1, 0, 0), ()), (n, l, tag)
            l += 1


def test_torus_decomposition_rejects_pinched_split():
    # splitting off everything but the half-length ring is refused: the ring
    # is pinched along edges and its complement has the homology of a wedge
    # of 2-spheres rather than of a solid torus
    with pytest.raises(ValueError):
        torus_decomposition(8, 2)
    with pytest.raises(ValueError):
        torus_decomposition(10, 3)


def test_duplicate_cycles_collapse():
    a = canonicalize((1, 2, 1, 3))
    b = canonicalize((1, 3, 1, 2))
    cc = CyclicComplex(7, (a, b))
    assert len(cc.cycles) == 1
