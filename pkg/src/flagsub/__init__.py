"""Exact face enumeration and subdivision invariants of simplicial
complexes: h- and gamma-vectors, local h- and gamma-vectors, homology
sphere/ball certification, subdivision constructors and a seeded
conjecture-check harness."""

__version__ = "0.1.0"

from .complexes import (
    SimplicialComplex,
    cross_polytope,
    cross_polytope_on,
    from_facets,
    from_faces,
    simplex,
    sphere_zero,
)
from .constructions import (
    FacetChoice,
    ball_to_sphere,
    example_complexes,
    sigma_cross_polytope_map,
)
from .harness import (
    GeneratorSpec,
    Instance,
    random_flag_sphere,
    random_simplex_subdivision,
    random_sphere_pair,
    run_conjecture_suite,
)
from .homology import (
    GF2,
    QQ,
    BettiVector,
    FieldSpec,
    HomologyClass,
    classify,
    interior_faces,
    reduced_betti,
)
from .polynomials import (
    GammaVector,
    IntPolynomial,
    SymmetryFailure,
    gamma_from_symmetric,
    gamma_vector,
    h_polynomial,
    interior_h_polynomial,
    is_eulerian,
    reduced_euler_characteristic,
)
from .subdivisions import (
    SubdivisionMap,
    SubdivisionVerdict,
    barycentric_subdivision,
    check_h_decomposition,
    check_locality,
    compose,
    edge_subdivision,
    join_subdivision,
    link_subdivision,
    stellar_subdivision,
    trivial_subdivision,
)
