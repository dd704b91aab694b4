import random

import pytest

from flagsub.complexes import cross_polytope, from_facets, simplex
from flagsub.errors import (
    BaseMismatch,
    BaseNotSimplex,
    CarrierMismatch,
    InvalidCarrier,
    NotAFace,
    VertexCollision,
)
from flagsub.harness import random_simplex_subdivision
from flagsub.polynomials import IntPolynomial, h_polynomial
from flagsub.subdivisions import (
    SubdivisionMap,
    barycentric_subdivision,
    barycenter_name,
    check_h_decomposition,
    check_locality,
    compose,
    edge_subdivision,
    join_subdivision,
    link_subdivision,
    stellar_subdivision,
    trivial_subdivision,
)

from conftest import literal_quasi_geometric, poly_coeffs, sympy_local_h

X = IntPolynomial([0, 1])


def letters(d):
    return [chr(97 + i) for i in range(d)]


def tag(K, masks):
    return sorted(sorted(K.names(m)) for m in masks)


# -- carrier invariants -------------------------------------------------------


def test_constructor_rejects_missing_faces():
    K = simplex(["a", "b"])
    carrier = {E: E for E in K.faces()}
    del carrier[K.mask(["a"])]
    with pytest.raises(InvalidCarrier):
        SubdivisionMap(K, K, carrier)


def test_constructor_rejects_non_monotone():
    K = simplex(["a", "b"])
    carrier = {E: E for E in K.faces()}
    carrier[K.mask(["a"])] = K.mask(["b"])
    with pytest.raises(InvalidCarrier):
        SubdivisionMap(K, K, carrier)


def test_constructor_rejects_dimension_drop():
    K = simplex(["a", "b"])
    carrier = {E: K.mask(["a", "b"]) for E in K.faces()}
    carrier[0] = 0
    with pytest.raises(InvalidCarrier):
        SubdivisionMap(K, K, carrier)


def test_constructor_rejects_non_surjective():
    total = simplex(["a", "b"])
    base = simplex(["p", "q"])
    full = base.mask(["p", "q"])
    carrier = {0: 0}
    carrier[total.mask(["a"])] = base.mask(["p"])
    carrier[total.mask(["b"])] = base.mask(["p"])
    carrier[total.mask(["a", "b"])] = full
    with pytest.raises(InvalidCarrier):
        SubdivisionMap(total, base, carrier)


# -- stellar and edge subdivisions -------------------------------------------


def test_stellar_on_full_simplex_is_cone_over_boundary():
    for d in range(2, 7):
        K = simplex(letters(d))
        s = stellar_subdivision(K, (1 << d) - 1)
        assert s.local_h() == IntPolynomial([0] + [1] * (d - 1))


def test_stellar_square_edge_gives_pentagon():
    K = cross_polytope(2)
    e = K.mask(["u1", "u2"])
    s = stellar_subdivision(K, e)
    assert s.total.f_vector() == (1, 5, 5)
    assert s.total.is_flag()


def test_stellar_octahedron_edge():
    K = cross_polytope(3)
    s = stellar_subdivision(K, K.mask(["u1", "u2"]))
    assert s.total.f_vector()[1] == 7
    assert s.total.is_flag()
    h = h_polynomial(s.total)
    assert h == IntPolynomial([1, 4, 4, 1])


def test_stellar_carrier_rules():
    K = cross_polytope(2)
    e = K.mask(["u1", "u2"])
    s = stellar_subdivision(K, e, "m")
    v = s.total.mask(["m"])
    assert s.carrier[v] == e
    assert s.carrier[s.total.mask(["m", "u1"])] == e
    old = s.total.mask(["v1", "v2"])
    assert s.carrier[old] == K.mask(["v1", "v2"])
    assert not s.total.has_face(e)  # the subdivided edge is gone


def test_stellar_errors():
    K = simplex(["a", "b"])
    with pytest.raises(NotAFace):
        stellar_subdivision(K, 0)
    with pytest.raises(VertexCollision):
        stellar_subdivision(K, K.mask(["a", "b"]), "a")
    with pytest.raises(NotAFace):
        edge_subdivision(K, K.mask(["a"]))


def test_stellar_default_vertex_name():
    K = simplex(["a", "b"])
    s = stellar_subdivision(K, K.mask(["a", "b"]))
    assert barycenter_name(("b", "a")) == "b{a.b}"
    assert "b{a.b}" in s.total.labels


def test_stellar_validates_fully():
    K = cross_polytope(2)
    s = stellar_subdivision(K, K.mask(["u1", "u2"]))
    v = s.validate()
    assert v.is_homology_subdivision
    assert v.is_quasi_geometric
    assert v.is_vertex_induced
    assert v.is_flag_subdivision


# -- local h / local gamma ----------------------------------------------------


def test_trivial_subdivision_local_h():
    assert trivial_subdivision(from_facets([], [])).local_h() == IntPolynomial([1])
    for d in (1, 2, 3, 4):
        s = trivial_subdivision(simplex(letters(d)))
        assert not s.local_h()


def test_local_h_requires_simplex_base():
    K = cross_polytope(2)
    with pytest.raises(BaseNotSimplex):
        trivial_subdivision(K).local_h()


def test_local_h_matches_symbolic_oracle_on_random_instances():
    for seed in range(12):
        d = 2 + seed % 3
        s = random_simplex_subdivision(tuple(letters(d)), seed % 5, seed)
        assert poly_coeffs(s.local_h()) == sympy_local_h(s)


def test_local_h_symmetry_on_random_instances():
    for seed in range(12):
        d = 2 + seed % 3
        s = random_simplex_subdivision(tuple(letters(d)), 1 + seed % 4, seed)
        assert s.local_h().is_symmetric(d)


def test_local_h_nonnegative_on_quasi_geometric_instances():
    for seed in range(8):
        d = 2 + seed % 3
        s = random_simplex_subdivision(tuple(letters(d)), 1 + seed % 4, seed)
        assert s.validate(fast=True).is_quasi_geometric
        assert s.local_h().is_nonnegative()


def test_barycentric_small_cases():
    assert barycentric_subdivision(["a"]).total == simplex(["a"])
    assert barycentric_subdivision(["a", "b"]).local_h() == X
    b3 = barycentric_subdivision(["a", "b", "c"])
    assert b3.local_h() == IntPolynomial([0, 1, 1])
    assert b3.local_gamma().to_list() == [0, 1]
    v = b3.validate()
    assert v.is_homology_subdivision and v.is_vertex_induced
    assert v.is_flag_subdivision and b3.total.is_flag()


def test_barycentric_matches_chain_model():
    # independent model: faces are chains of nonempty subsets of V,
    # carrier of a chain is its maximal element
    names = ("a", "b", "c")
    b = barycentric_subdivision(names)
    subsets = []
    for m in range(1, 8):
        subsets.append(frozenset(n for i, n in enumerate(names) if (m >> i) & 1))

    def vertex_name(S):
        return min(S) if len(S) == 1 else barycenter_name(tuple(S))

    chains = [frozenset()]
    for S in subsets:
        chains += [c | {S} for c in chains if all(T < S or S < T for T in c)]
    model_faces = {
        tuple(sorted(vertex_name(S) for S in c)): (
            max(c, key=len) if c else frozenset()
        )
        for c in chains
    }
    got_faces = {
        tuple(sorted(b.total.names(E))): frozenset(b.base.names(c))
        for E, c in b.carrier.items()
    }
    assert got_faces == model_faces


def test_interior_stats_fixtures():
    t = trivial_subdivision(simplex(letters(3)))
    assert t.interior_stats().to_dict() == {
        "interior_vertices": 0,
        "interior_edges": 0,
        "codim1_relint_vertices": 0,
    }
    st = stellar_subdivision(simplex(letters(4)), 0b1111)
    assert st.interior_stats().f0_interior == 1
    b4 = barycentric_subdivision(letters(4))
    stats = b4.interior_stats()
    assert stats.f0_interior == 1
    assert stats.f0_codim1_relint == 4


def test_local_gamma_low_dimension_is_interior_vertex_count():
    for seed in range(8):
        d = 2 + seed % 2
        s = random_simplex_subdivision(tuple(letters(d)), 1 + seed % 4, seed)
        xi = s.local_gamma()
        t = s.interior_stats().f0_interior
        assert xi.to_list() == [0] + ([t] if d >= 2 else [])


def test_xi_coefficient_formulas():
    for seed in range(6):
        s = random_simplex_subdivision(tuple(letters(4)), 2 + seed % 3, seed)
        xi = s.local_gamma()
        stats = s.interior_stats()
        assert xi.coeffs[0] == 0
        assert xi.coeffs[1] == stats.f0_interior
        assert xi.coeffs[2] == (
            -5 * stats.f0_interior
            + stats.f1_interior
            - stats.f0_codim1_relint
        )


# -- relative local h ---------------------------------------------------------


def test_relative_local_h_at_empty_face_is_local_h():
    for seed in range(6):
        d = 2 + seed % 3
        s = random_simplex_subdivision(tuple(letters(d)), seed % 4, seed)
        assert s.relative_local_h(0) == s.local_h()


def test_relative_local_h_of_trivial_subdivision():
    for d in (3, 4, 5):
        s = trivial_subdivision(simplex(letters(d)))
        edge = s.total.mask(letters(2))
        assert not s.relative_local_h(edge)
        full = (1 << d) - 1
        assert s.relative_local_h(full) == IntPolynomial([1])


def test_relative_local_h_symmetry():
    for seed in range(6):
        d = 2 + seed % 3
        s = random_simplex_subdivision(tuple(letters(d)), 1 + seed % 3, seed)
        for E in s.total.faces():
            ell = s.relative_local_h(E)
            assert ell.reflect(d - E.bit_count()) == ell


def test_relative_local_h_rejects_non_face():
    s = trivial_subdivision(simplex(["a", "b"]))
    with pytest.raises(NotAFace):
        s.relative_local_h(0b1100)


# -- restriction --------------------------------------------------------------


def test_restriction_of_trivial_is_trivial():
    s = trivial_subdivision(simplex(letters(4)))
    F = s.base.mask(["a", "c"])
    r = s.restriction(F)
    assert r == trivial_subdivision(simplex(["a", "c"]))


def test_restriction_to_empty_face():
    s = trivial_subdivision(simplex(["a", "b"]))
    r = s.restriction(0)
    assert r.total.faces() == (0,) and r.base.faces() == (0,)


def test_restriction_carrier_commutes():
    s = random_simplex_subdivision(("a", "b", "c"), 3, seed=4)
    F = s.base.mask(["a", "b"])
    r = s.restriction(F)
    for E, c in r.carrier.items():
        names = r.total.names(E)
        assert set(r.base.names(c)) == set(
            s.base.names(s.carrier[s.total.mask(names)])
        )


def test_restriction_rejects_non_face():
    s = trivial_subdivision(simplex(["a", "b"]))
    with pytest.raises(NotAFace):
        s.restriction(0b111)


# -- validation hierarchy -----------------------------------------------------


def test_trivial_subdivision_validates_everywhere():
    for K in (simplex(letters(3)), cross_polytope(2)):
        v = trivial_subdivision(K).validate()
        assert v.is_homology_subdivision
        assert v.is_quasi_geometric
        assert v.is_vertex_induced
        assert v.is_flag_subdivision
        assert v.failures == ()


def test_fast_validation_agrees_on_valid_and_invalid_fixtures():
    from flagsub.constructions import example_complexes

    for name in ("ex-2.3a", "ex-2.3b", "ex-2.3c"):
        s = example_complexes(name)
        full = s.validate()
        fast = s.validate(fast=True)
        assert full.is_homology_subdivision == fast.is_homology_subdivision
        assert full.is_quasi_geometric == fast.is_quasi_geometric
        assert full.is_vertex_induced == fast.is_vertex_induced
        assert full.is_flag_subdivision == fast.is_flag_subdivision


def test_quasi_geometric_cardinality_criterion_matches_literal_form():
    from flagsub.constructions import example_complexes

    cases = [
        example_complexes("ex-2.3a"),
        example_complexes("ex-2.3b"),
        example_complexes("rem-4.5"),
        random_simplex_subdivision(("a", "b", "c"), 3, 1),
        stellar_subdivision(cross_polytope(2), 0b11),
    ]
    for s in cases:
        assert s.validate(fast=True).is_quasi_geometric == literal_quasi_geometric(s)


def test_hierarchy_on_random_instances():
    for seed in range(10):
        d = 2 + seed % 3
        s = random_simplex_subdivision(tuple(letters(d)), seed % 5, seed)
        v = s.validate(fast=True)
        assert not (v.is_vertex_induced and not v.is_quasi_geometric)
        if v.is_vertex_induced and s.total.is_flag():
            assert v.is_flag_subdivision


def test_validation_reports_failures():
    from flagsub.constructions import example_complexes

    v = example_complexes("ex-2.3a").validate()
    assert any("lower-dimensional" in reason for _, reason in v.failures)


# -- decomposition and locality ----------------------------------------------


def test_h_decomposition_trivial():
    K = cross_polytope(2)
    chk = check_h_decomposition(trivial_subdivision(K))
    assert chk.h_lhs == chk.h_rhs == h_polynomial(K)
    assert chk.gamma_lhs == chk.gamma_rhs  # base is Eulerian


def test_h_decomposition_stellar_octahedron_edge():
    K = cross_polytope(3)
    s = stellar_subdivision(K, K.mask(["u1", "u2"]))
    chk = check_h_decomposition(s)
    assert chk.h_lhs == IntPolynomial([1, 4, 4, 1])
    assert chk.h_equal and chk.gamma_equal


def test_h_decomposition_simplex_base_has_no_gamma_part():
    s = random_simplex_subdivision(("a", "b", "c"), 2, 3)
    chk = check_h_decomposition(s)
    assert chk.h_equal
    assert chk.gamma_lhs is None


def test_locality_trivial_inner():
    outer = random_simplex_subdivision(("a", "b", "c"), 2, 5)
    inner = trivial_subdivision(outer.total)
    chk = check_locality(outer, inner)
    assert chk.ok
    assert chk.lhs == outer.local_h()


def test_locality_trivial_outer():
    d = 3
    outer = trivial_subdivision(simplex(letters(d)))
    inner = random_simplex_subdivision(tuple(letters(d)), 2, 6)
    chk = check_locality(outer, inner)
    assert chk.ok


def test_locality_on_composed_random_instances():
    rng = random.Random(0)
    for seed in range(6):
        d = 2 + seed % 3
        outer = random_simplex_subdivision(tuple(letters(d)), 1 + seed % 3, seed)
        edges = [f for f in outer.total.faces() if f.bit_count() == 2]
        inner = edge_subdivision(outer.total, edges[rng.randrange(len(edges))])
        assert check_locality(outer, inner).ok


def test_edge_recursion_identity():
    for seed in range(6):
        d = 2 + seed % 3
        before = random_simplex_subdivision(tuple(letters(d)), seed % 3, seed)
        edges = [f for f in before.total.faces() if f.bit_count() == 2]
        e = edges[seed % len(edges)]
        after = compose(before, edge_subdivision(before.total, e))
        assert after.local_h() == before.local_h() + X * before.relative_local_h(e)


def test_compose_requires_matching_complexes():
    s1 = trivial_subdivision(simplex(["a", "b"]))
    s2 = trivial_subdivision(simplex(["p", "q"]))
    with pytest.raises(BaseMismatch):
        compose(s1, s2)


# -- joins and links ----------------------------------------------------------


def test_join_of_barycentric_edges():
    a = barycentric_subdivision(["a1", "a2"])
    b = barycentric_subdivision(["b1", "b2"])
    j = join_subdivision(a, b)
    assert j.local_h() == IntPolynomial([0, 0, 1])
    v = j.validate()
    assert v.is_homology_subdivision and v.is_vertex_induced
    assert v.is_flag_subdivision


def test_join_with_trivial_vertex_kills_local_h():
    a = barycentric_subdivision(["a1", "a2"])
    t = trivial_subdivision(simplex(["z"]))
    assert not join_subdivision(a, t).local_h()


def test_xi_multiplicativity_on_random_pairs():
    for seed in range(6):
        s1 = random_simplex_subdivision(("a", "b"), 1 + seed % 3, seed)
        s2 = random_simplex_subdivision(("p", "q", "r"), seed % 3, seed + 50)
        j = join_subdivision(s1, s2)
        lhs = j.local_gamma().polynomial()
        rhs = s1.local_gamma().polynomial() * s2.local_gamma().polynomial()
        assert lhs == rhs


def test_link_subdivision_at_empty_face_is_identity():
    s = random_simplex_subdivision(("a", "b", "c"), 2, 9)
    assert link_subdivision(s, []) == s


def test_link_subdivision_of_stellar_outside_the_star():
    K = cross_polytope(3)
    s = stellar_subdivision(K, K.mask(["u1", "u2"]))
    ls = link_subdivision(s, ["v1"])
    # v1 is far from the subdivided edge, so its link is untouched
    assert ls.total.facets == ls.base.facets == cross_polytope(3).link(
        K.mask(["v1"])
    ).facets
    assert all(E == c for E, c in ls.carrier.items())


def test_link_subdivision_preserves_validity():
    K = cross_polytope(3)
    s = stellar_subdivision(K, K.mask(["u1", "u2"]))
    ls = link_subdivision(s, ["u1"])
    v = ls.validate()
    assert v.is_homology_subdivision and v.is_vertex_induced


def test_link_subdivision_requires_fixed_face():
    from flagsub.constructions import example_complexes

    s = example_complexes("ex-2.3a")
    # the pushed face is common to total and base but carries to the
    # whole simplex, so it cannot be linked
    with pytest.raises(CarrierMismatch):
        link_subdivision(s, ["b", "c", "d"])


def test_unimodality_counterexample_is_pinned():
    from flagsub.constructions import example_complexes

    s = example_complexes("ex-2.3b")
    assert s.validate(fast=True).is_quasi_geometric
    assert not s.local_h().is_unimodal()
