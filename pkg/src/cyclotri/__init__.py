"""Cyclic combinatorial 3-manifolds by exact integer computation.

The package builds and analyses simplicial 3-manifolds that are invariant
under the full cyclic group of vertex rotations.  Complexes are described
compactly by difference cycles; analysis covers exact integral homology via
Smith normal forms, polyhedral Morse theory with Heegaard-genus bounds, a
stretching construction that turns a single symmetric manifold into an
infinite family, and a three-parameter family of Seifert-type manifolds
whose fibre structure, homology and symmetry action are all verified by
integer arithmetic alone.
"""

from .diffcycles import (
    CyclicComplex,
    DifferenceCycle,
    canonicalize,
    compress,
    cyclic_polytope_boundary,
    gale_facets,
    parse_cycle,
    short_cycle,
    torus_decomposition,
)
from .expansion import (
    ExpansionFamily,
    check_expandable,
    contract_once,
    expand_family,
    search_violating_family,
)
from .homology import (
    CycleClass,
    HomologyGroups,
    are_homologous,
    betti_numbers_f2,
    h1_data,
    homology_groups,
    induced_h1_matrix,
    path_to_cycle,
    smith_normal_form,
)
from .morse import (
    CriticalPoint,
    RslFunction,
    critical_points,
    heegaard_upper_bound,
    identity_rsl,
    morse_vector,
    random_rsl,
)
from .mpqr import (
    MpqrParams,
    SeifertData,
    build_base,
    build_fibre,
    build_manifold,
    derive_params,
    expected_homology,
    expected_seifert,
    meridian_paths,
    rotation_h1_action,
    shift_homology_check,
)
from .simplicial import ManifoldReport, SimplicialComplex, SurfaceError, SurfaceType

__all__ = [
    "CriticalPoint",
    "CycleClass",
    "CyclicComplex",
    "DifferenceCycle",
    "ExpansionFamily",
    "HomologyGroups",
    "ManifoldReport",
    "MpqrParams",
    "RslFunction",
    "SeifertData",
    "SimplicialComplex",
    "SurfaceError",
    "SurfaceType",
    "are_homologous",
    "betti_numbers_f2",
    "build_base",
    "build_fibre",
    "build_manifold",
    "canonicalize",
    "check_expandable",
    "compress",
    "contract_once",
    "critical_points",
    "cyclic_polytope_boundary",
    "derive_params",
    "expand_family",
    "expected_homology",
    "expected_seifert",
    "gale_facets",
    "h1_data",
    "heegaard_upper_bound",
    "homology_groups",
    "identity_rsl",
    "induced_h1_matrix",
    "meridian_paths",
    "morse_vector",
    "parse_cycle",
    "path_to_cycle",
    "random_rsl",
    "rotation_h1_action",
    "search_violating_family",
    "shift_homology_check",
    "short_cycle",
    "smith_normal_form",
    "torus_decomposition",
]

__version__ = "0.1.0"
