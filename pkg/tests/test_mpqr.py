import pytest

from cyclotri.homology import HomologyGroups, homology_groups
from cyclotri.mpqr import (
    build_base,
    build_fibre,
    build_manifold,
    derive_params,
    expected_homology,
    expected_seifert,
    fibre_component,
    manifold_complex,
    meridian_paths,
    meridian_vertex_paths,
    rotation_h1_action,
    shift_homology_check,
    subtractive_euclid,
)


def test_multiplier_pair():
    params = derive_params(2, 3, 1)
    assert (params.m, params.k) == (2, 1)
    params = derive_params(3, 4, 0)
    assert (params.m, params.k) == (3, 2)
    assert params.m * 3 - params.k * 4 == 1


def test_gcd_ladders():
    assert derive_params(2, 3, 1).euclid1 == ()
    assert derive_params(2, 3, 1).euclid2 == ((2, 2),)
    assert derive_params(3, 4, 0).euclid1 == ((4, 4),)
    assert derive_params(3, 4, 0).euclid2 == ((6, 3), (3, 3))
    assert derive_params(2, 5, 0).euclid2 == ((2, 4), (2, 2))
    assert subtractive_euclid(9, 3) == [(6, 3), (3, 3)]
    assert subtractive_euclid(3, 9) == [(6, 3), (3, 3)]
    assert subtractive_euclid(5, 5) == []


def test_gcd_fields():
    params = derive_params(2, 3, 6)
    assert (params.a, params.b) == (2, 3)
    params = derive_params(2, 3, 0)
    assert (params.a, params.b) == (2, 3)
    params = derive_params(3, 5, 10)
    assert (params.a, params.b) == (1, 5)


def test_parameter_validation():
    with pytest.raises(ValueError, match="coprime"):
        derive_params(2, 4, 1)
    with pytest.raises(ValueError):
        derive_params(3, 2, 1)
    with pytest.raises(ValueError):
        derive_params(2, 3, -1)


def test_base_cycles():
    base = build_base(derive_params(2, 3, 1))
    assert {str(c) for c in base.cycles} == {"1:3:2:7", "1:3:7:2", "1:7:3:2"}
    assert base.facet_count() == 3 * 13


def test_base_homology_is_punctured_bundle():
    # over the (a+b+1)-punctured genus-(a-1)(b-1)/2 surface when the first
    # fibre family exists; one puncture fewer in the degenerate p = 2 case
    params = derive_params(3, 4, 1)
    h = homology_groups(build_base(params).expand())
    assert h == HomologyGroups((1, 3, 2, 0), ((), (), (), ()))
    params = derive_params(2, 3, 1)
    h = homology_groups(build_base(params).expand())
    assert h == HomologyGroups((1, 2, 1, 0), ((), (), (), ()))


def test_fibre_cycles():
    params = derive_params(2, 3, 1)
    assert build_fibre(params, 1).cycles == ()
    assert {str(c) for c in build_fibre(params, 2).cycles} == {"2:2:2:7"}
    assert {str(c) for c in build_fibre(params, 3).cycles} == {"1:5:1:6"}
    params34 = derive_params(3, 4, 1)
    assert {str(c) for c in build_fibre(params34, 1).cycles} == {"4:4:4:13"}
    assert {str(c) for c in build_fibre(params34, 2).cycles} == {"3:3:3:16", "3:6:3:13"}


def test_fibre_tail_r0_short_cycle():
    params = derive_params(2, 3, 0)
    tail = build_fibre(params, 3)
    assert {str(c) for c in tail.cycles} == {"1:5:1:5"}
    assert tail.facet_count() == 6


def test_fibre_component_structure():
    for (p, q, r) in [(3, 4, 12), (3, 5, 10), (4, 5, 5)]:
        params = derive_params(p, q, r)
        comps1 = build_fibre(params, 1).expand().connected_components()
        assert len(comps1) == params.b
        comps2 = build_fibre(params, 2).expand().connected_components()
        assert len(comps2) == params.a
        assert len(build_fibre(params, 3).expand().connected_components()) == 1
        for comp in comps1 + comps2:
            assert homology_groups(comp).betti == (1, 1, 0, 0)
            assert comp.boundary_complex().identify_closed_surface().is_torus


def test_manifold_construction():
    m = build_manifold(2, 3, 1)
    assert m.n == 13
    assert m.facet_count() == 65
    assert m.verify_manifold().is_manifold
    assert {str(c) for c in m.cycles} == {
        "1:3:2:7",
        "1:3:7:2",
        "1:7:3:2",
        "2:2:2:7",
        "1:5:1:6",
    }


def test_manifold_homology_spotchecks():
    assert str(homology_groups(manifold_complex(2, 3, 2))) == "(Z, Z_3, 0, Z)"
    assert str(homology_groups(manifold_complex(2, 3, 5))) == "(Z, 0, 0, Z)"
    assert homology_groups(manifold_complex(2, 3, 0)).betti == (1, 2, 2, 1)


def test_expected_homology_formula():
    assert expected_homology(2, 3, 6) == HomologyGroups((1, 2, 2, 1), ((), (), (), ()))
    assert expected_homology(2, 3, 0) == HomologyGroups((1, 2, 2, 1), ((), (), (), ()))
    assert expected_homology(3, 5, 10) == HomologyGroups(
        (1, 0, 0, 1), ((), (3, 3, 3, 3), (), ())
    )
    assert expected_homology(2, 3, 2).torsion[1] == (3,)


def test_meridian_path_shapes():
    params = derive_params(2, 3, 1)
    paths = {(f, i): p for f, i, p in meridian_vertex_paths(params)}
    assert paths[(2, 0)] == (0, 4, 8, 12, 6, 0)
    assert paths[(3, 0)] == (0, 6, 7, 0)
    params232 = derive_params(2, 3, 2)
    paths232 = {(f, i): p for f, i, p in meridian_vertex_paths(params232)}
    assert paths232[(3, 0)] == (0, 6, 7, 8, 0)
    params341 = derive_params(3, 4, 1)
    paths341 = {(f, i): p for f, i, p in meridian_vertex_paths(params341)}
    assert paths341[(1, 0)] == (0, 8, 16, 24, 12, 0)


def test_meridian_verification():
    for (p, q, r) in [(2, 3, 2), (3, 4, 1), (3, 4, 6), (2, 5, 5)]:
        paths = meridian_paths(derive_params(p, q, r))
        assert paths  # every produced curve passed the four-way check
        fibres = {m.fibre for m in paths}
        assert 3 in fibres and 2 in fibres


def test_meridian_counts_match_components():
    params = derive_params(3, 4, 6)
    paths = meridian_paths(params)
    count = {1: 0, 2: 0, 3: 0}
    for m in paths:
        count[m.fibre] += 1
    assert count == {1: params.b, 2: params.a, 3: 1}


def test_fibre_component_lookup():
    params = derive_params(3, 4, 6)
    even = fibre_component(params, 1, 0)
    odd = fibre_component(params, 1, 1)
    assert 0 in even.vertices and 1 in odd.vertices and even != odd
    with pytest.raises(ValueError):
        fibre_component(params, 1, 99)


def test_seifert_data_brieskorn():
    data = expected_seifert(2, 3, 5)
    assert data.sfs and data.base_genus == 0
    assert data.residual == 0
    alphas = [f[0] for f in data.fibres]
    counts = [f[2] for f in data.fibres]
    assert alphas == [-2, 3, -5]
    assert counts == [1, 1, 1]
    b1, b2, b3 = (f[1] for f in data.fibres)
    assert 15 * b1 - 10 * b2 + 6 * b3 == 1


def test_seifert_data_lens_case():
    data = expected_seifert(2, 3, 2)
    assert data.residual == 0
    assert [f[2] for f in data.fibres] == [1, 2, 1]
    assert data.fibres[0][0] == -1  # the first family degenerates


def test_seifert_connected_sum_case():
    data = expected_seifert(2, 3, 0)
    assert not data.sfs
    assert data.connected_sum_copies == 2


def test_seifert_same_h1_for_congruent_r():
    a = expected_homology(2, 3, 2)
    b = expected_homology(2, 3, 8)
    assert (a.betti[1], a.torsion[1]) == (b.betti[1], b.torsion[1])


def test_rotation_action_matrix():
    action, order = rotation_h1_action(3, 0)
    assert order == 6
    assert action == [[0, -1], [1, 1]]
    action1, order1 = rotation_h1_action(3, 1)
    assert (action1, order1) == (action, 6)


def test_rotation_action_shifts_basis():
    action, _ = rotation_h1_action(5, 0)
    for j in range(3):  # columns of the first q-2 generators are unit vectors
        col = [action[i][j] for i in range(4)]
        assert col == [1 if i == j + 1 else 0 for i in range(4)]


def test_shift_homology_check():
    assert shift_homology_check(2, 3, 6)
    assert shift_homology_check(3, 4, 12)
    assert shift_homology_check(2, 3, 5)


def test_neighbourliness_reality():
    # the smallest pair stays neighbourly for every r; larger pairs never are
    for r in range(0, 6):
        assert manifold_complex(2, 3, r).is_neighbourly()
    assert not manifold_complex(3, 4, 1).is_neighbourly()
    assert not manifold_complex(2, 5, 1).is_neighbourly()


def test_meridian_search_fallback_cases():
    paths = meridian_paths(derive_params(2, 5, 4))
    by_source = {m.source for m in paths}
    assert "search" in by_source  # the closed form wraps onto itself here
    paths = meridian_paths(derive_params(3, 4, 1))
    assert {m.source for m in paths} == {"formula"}
