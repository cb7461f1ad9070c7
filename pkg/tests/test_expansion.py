import pytest

from cyclotri import CyclicComplex, canonicalize, cyclic_polytope_boundary, short_cycle
from cyclotri.expansion import (
    ExpansionFamily,
    check_expandable,
    contract_once,
    expand_family,
    search_violating_family,
)
from cyclotri.mpqr import build_manifold


def test_polytope_boundary_is_expandable():
    report = check_expandable(cyclic_polytope_boundary(14))
    assert report.expandable
    assert not report.violators


def test_family_member_is_expandable():
    report = check_expandable(build_manifold(2, 3, 2))
    assert report.expandable


def test_violating_complex_reported():
    cc = CyclicComplex(
        10,
        (
            short_cycle(10),
            canonicalize((1, 2, 2, 5)),
            canonicalize((1, 2, 3, 4)),
            canonicalize((2, 2, 3, 3)),
        ),
    )
    report = check_expandable(cc)
    assert not report.expandable
    assert {str(v) for v in report.violators} == {"1:2:3:4", "2:2:3:3"}


def test_odd_vertex_count_not_expandable():
    report = check_expandable(build_manifold(2, 3, 1))
    assert not report.n_even
    assert not report.expandable


def test_expansion_reproduces_polytope_boundaries():
    for n in (10, 12, 14):
        family = ExpansionFamily.from_cyclic(cyclic_polytope_boundary(n))
        for k in range(0, 7):
            assert expand_family(family, k) == cyclic_polytope_boundary(n + k)


def test_expansion_reproduces_family_members():
    for (p, q, r) in [(2, 3, 2), (2, 5, 0), (2, 5, 2)]:
        family = ExpansionFamily.from_cyclic(build_manifold(p, q, r))
        for k in range(0, 5):
            assert expand_family(family, k) == build_manifold(p, q, r + k)


def test_expansion_base_case():
    family = ExpansionFamily.from_cyclic(cyclic_polytope_boundary(12))
    assert expand_family(family, 0) == family.base == cyclic_polytope_boundary(12)


def test_expansion_outputs_are_manifolds():
    family = ExpansionFamily.from_cyclic(build_manifold(2, 3, 4))
    for k in range(0, 5):
        assert expand_family(family, k).verify_manifold().is_manifold


def test_expansion_preserves_neighbourliness():
    base = cyclic_polytope_boundary(14)
    family = ExpansionFamily.from_cyclic(base)
    assert base.expand().is_neighbourly()
    for k in range(1, 6):
        assert expand_family(family, k).expand().is_neighbourly()


def test_expansion_vertex_counts():
    family = ExpansionFamily.from_cyclic(cyclic_polytope_boundary(12))
    for k in range(0, 6):
        stretched = expand_family(family, k)
        assert stretched.n == 12 + k
        assert len(stretched.expand().vertices) == 12 + k


def test_expand_requires_short_cycle():
    with pytest.raises(ValueError, match="even"):
        ExpansionFamily.from_cyclic(build_manifold(2, 3, 1))
    no_short = CyclicComplex(6, (canonicalize((1, 1, 1, 3)),))
    with pytest.raises(ValueError, match="half-length orbit"):
        ExpansionFamily.from_cyclic(no_short)


def test_expand_enforces_criterion():
    cc = CyclicComplex(
        10,
        (
            short_cycle(10),
            canonicalize((1, 2, 2, 5)),
            canonicalize((1, 2, 3, 4)),
            canonicalize((2, 2, 3, 3)),
        ),
    )
    family = ExpansionFamily.from_cyclic(cc)
    with pytest.raises(ValueError, match="criterion"):
        expand_family(family, 2)
    assert expand_family(family, 0, enforce_criterion=False) == cc


def test_negative_k_rejected():
    family = ExpansionFamily.from_cyclic(cyclic_polytope_boundary(12))
    with pytest.raises(ValueError):
        expand_family(family, -1)


def test_contract_family_member():
    family = ExpansionFamily.from_cyclic(build_manifold(2, 3, 2))
    contracted, report = contract_once(family)
    assert contracted == build_manifold(2, 3, 1)
    assert report.is_manifold


def test_contract_polytope_boundary():
    family = ExpansionFamily.from_cyclic(cyclic_polytope_boundary(14))
    contracted, report = contract_once(family)
    assert contracted == cyclic_polytope_boundary(13)
    assert report.is_manifold


def test_contract_rejects_bare_short_cycle():
    family = ExpansionFamily.from_cyclic(CyclicComplex(4, (short_cycle(4),)))
    with pytest.raises(ValueError, match="nothing to contract"):
        contract_once(family)


def test_search_finds_breaking_violator():
    witness = search_violating_family(max_n=12)
    assert witness is not None
    assert witness.violators
    assert 1 <= witness.k_failing <= 6
    assert witness.singular_vertex is not None
    # the base itself is a combinatorial manifold, only the stretch breaks
    assert witness.base.verify_manifold().is_manifold
    family = ExpansionFamily.from_cyclic(witness.base)
    stretched = expand_family(family, witness.k_failing, enforce_criterion=False)
    assert not stretched.verify_manifold().is_manifold


def test_expansion_reproduces_larger_family_member():
    family = ExpansionFamily.from_cyclic(build_manifold(3, 4, 2))
    for k in range(0, 4):
        assert expand_family(family, k) == build_manifold(3, 4, 2 + k)
