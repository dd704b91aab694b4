"""Subdivision maps: carrier validation, local invariants, constructors.

A subdivision is a total complex together with a carrier map assigning
to each of its faces a face of the base complex.  Carriers are stored
explicitly on every face, because they are not determined by vertex
carriers for maps that are not vertex-induced.  Structural invariants
(totality, monotonicity, dimension growth, surjectivity, empty to
empty) are enforced at construction; the homological axioms and the
quasi-geometric / vertex-induced / flag hierarchy are checked by
`SubdivisionMap.validate`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    SimplicialComplex,
    from_faces,
    iter_bits,
    iter_submasks,
    simplex,
)
from .errors import (
    BaseMismatch,
    BaseNotSimplex,
    CarrierMismatch,
    InvalidCarrier,
    NotAFace,
    NotHomologySubdivision,
    VertexCollision,
)
from .homology import GF2, FieldSpec, classify, interior_faces
from .polynomials import (
    ZERO,
    GammaVector,
    IntPolynomial,
    SymmetryFailure,
    gamma_from_symmetric,
    h_from_face_counts,
    h_polynomial,
    is_eulerian,
)


@dataclass(frozen=True)
class SubdivisionVerdict:
    """Outcome of validating a subdivision map.

    ``failures`` lists (face, reason) pairs; faces are printed as
    comma-joined vertex names, with "()" for the empty face.
    """

    is_homology_subdivision: bool
    is_quasi_geometric: bool
    is_vertex_induced: bool
    is_flag_subdivision: bool
    failures: tuple[tuple[str, str], ...] = ()

    def to_dict(self) -> dict:
        return {
            "homology_subdivision": self.is_homology_subdivision,
            "quasi_geometric": self.is_quasi_geometric,
            "vertex_induced": self.is_vertex_induced,
            "flag_subdivision": self.is_flag_subdivision,
            "failures": [list(f) for f in self.failures],
        }


@dataclass(frozen=True)
class InteriorStats:
    """Interior vertex/edge counts of a subdivision of a simplex."""

    f0_interior: int
    f1_interior: int
    f0_codim1_relint: int

    def to_dict(self) -> dict:
        return {
            "interior_vertices": self.f0_interior,
            "interior_edges": self.f1_interior,
            "codim1_relint_vertices": self.f0_codim1_relint,
        }


@dataclass(frozen=True)
class DecompositionCheck:
    """Both sides of the face-sum decomposition of h(total).

    The gamma-level pair is present only when the base is Eulerian.
    """

    h_lhs: IntPolynomial
    h_rhs: IntPolynomial
    gamma_lhs: IntPolynomial | None = None
    gamma_rhs: IntPolynomial | None = None

    @property
    def h_equal(self) -> bool:
        return self.h_lhs == self.h_rhs

    @property
    def gamma_equal(self) -> bool:
        if self.gamma_lhs is None:
            return True
        return self.gamma_lhs == self.gamma_rhs

    @property
    def ok(self) -> bool:
        return self.h_equal and self.gamma_equal


@dataclass(frozen=True)
class LocalityCheck:
    lhs: IntPolynomial
    rhs: IntPolynomial

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def _translate(mask: int, table: dict[int, int]) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << table[i]
    return out


def _face_repr(K: SimplicialComplex, mask: int) -> str:
    if mask >> len(K.labels):
        return bin(mask)
    return ",".join(K.names(mask)) or "()"


class SubdivisionMap:
    """Total complex, base complex, and an explicit total carrier map.

    Immutable after construction; all operations are pure functions.
    """

    __slots__ = ("total", "base", "carrier")

    def __init__(
        self,
        total: SimplicialComplex,
        base: SimplicialComplex,
        carrier: dict[int, int],
    ):
        self.total = total
        self.base = base
        try:
            self.carrier = {E: carrier[E] for E in total.faces()}
        except KeyError as exc:
            raise InvalidCarrier(f"carrier missing for face {exc}") from None
        if len(carrier) != total.num_faces():
            raise InvalidCarrier("carrier defined on non-faces")
        if self.carrier[0] != 0:
            raise InvalidCarrier("empty face must carry to the empty face")
        base_faces = base.face_set
        for E, c in self.carrier.items():
            if c not in base_faces:
                raise InvalidCarrier(
                    f"carrier of {total.names(E)} is not a face of the base"
                )
            if c.bit_count() < E.bit_count():
                raise InvalidCarrier(
                    f"carrier of {total.names(E)} has smaller dimension"
                )
            for b in iter_bits(E):
                sub = self.carrier[E & ~(1 << b)]
                if sub & c != sub:
                    raise InvalidCarrier(
                        f"carrier not monotone at {total.names(E)}"
                    )
        if len(set(self.carrier.values())) != len(base_faces):
            raise InvalidCarrier("carrier map is not surjective onto the base")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubdivisionMap):
            return NotImplemented
        return (
            self.total == other.total
            and self.base == other.base
            and self.carrier == other.carrier
        )

    def __hash__(self) -> int:
        return hash((self.total, self.base, tuple(sorted(self.carrier.items()))))

    def __repr__(self) -> str:
        return (
            f"SubdivisionMap({len(self.total.faces())} faces over "
            f"{len(self.base.faces())} base faces)"
        )

    # -- restrictions ----------------------------------------------------

    def restriction_face_masks(self, F: int) -> list[int]:
        """Total faces whose carrier lies inside base face ``F``."""
        return [E for E, c in self.carrier.items() if c & F == c]

    def restriction_complex(self, F: int) -> SimplicialComplex:
        """The restriction as a subcomplex on the full total ground set."""
        return from_faces(self.total.labels, self.restriction_face_masks(F))

    def restriction(self, F: int) -> "SubdivisionMap":
        """Restriction over base face ``F``, as a subdivision of a simplex.

        The total ground set is trimmed to the vertex support, so the
        restriction of a trivial subdivision to F is literally the
        trivial subdivision of the simplex on F.
        """
        if F not in self.base.face_set:
            raise NotAFace(f"{_face_repr(self.base, F)} is not a base face")
        masks = self.restriction_face_masks(F)
        support = 0
        for m in masks:
            support |= m
        keep = [i for i in range(len(self.total.labels)) if (support >> i) & 1]
        t_table = {old: new for new, old in enumerate(keep)}
        t_labels = tuple(self.total.labels[i] for i in keep)
        b_keep = list(iter_bits(F))
        b_table = {old: new for new, old in enumerate(b_keep)}
        new_total = from_faces(t_labels, [_translate(m, t_table) for m in masks])
        new_base = simplex(tuple(self.base.labels[i] for i in b_keep))
        carrier = {
            _translate(E, t_table): _translate(self.carrier[E], b_table)
            for E in masks
        }
        return SubdivisionMap(new_total, new_base, carrier)

    # -- validation --------------------------------------------------------

    def validate(
        self, spec: FieldSpec = GF2, fast: bool = False
    ) -> SubdivisionVerdict:
        """Check the subdivision axioms and the property hierarchy.

        Full validation certifies every restriction as a homology ball
        of the right dimension with interior equal to the carrier
        preimage.  With ``fast=True`` homology is skipped: restrictions
        are only checked for purity and for interior match against the
        unique-facet boundary rule.
        """
        failures: list[tuple[str, str]] = []
        hs = qg = vi = fl = True

        def face_name(c: SimplicialComplex, m: int) -> str:
            return ",".join(c.names(m)) if m else "()"

        for F in self.base.faces():
            if F == 0:
                continue
            masks = self.restriction_face_masks(F)
            K_F = from_faces(self.total.labels, masks)
            preimage = {E for E in masks if self.carrier[E] == F}
            card = F.bit_count()

            if fast:
                if not all(f.bit_count() == card for f in K_F.facets):
                    hs = False
                    failures.append(
                        (face_name(self.base, F), "restriction not pure of full dimension")
                    )
                    continue
                codim1 = [
                    f
                    for f in K_F.faces()
                    if f.bit_count() == card - 1
                    and sum(1 for g in K_F.facets if f & g == f) == 1
                ]
                boundary: set[int] = set()
                for f in codim1:
                    boundary.update(iter_submasks(f))
                interior = set(masks) - boundary
                if preimage != interior:
                    hs = False
                    failures.append(
                        (face_name(self.base, F), "carrier preimage is not the interior")
                    )
            else:
                hc = classify(K_F, spec)
                if not hc.is_ball or hc.dimension != card - 1:
                    hs = False
                    failures.append(
                        (
                            face_name(self.base, F),
                            f"restriction classifies as {hc.kind}({hc.dimension}),"
                            f" expected ball({card - 1})",
                        )
                    )
                elif preimage != interior_faces(K_F, hc):
                    hs = False
                    failures.append(
                        (face_name(self.base, F), "carrier preimage is not the interior")
                    )

            # vertex-induced: restriction equals the induced subcomplex
            # on its own vertex set.
            W = 0
            for m in masks:
                W |= m
            mask_set = set(masks)
            for E in self.total.faces():
                if E & W == E and E not in mask_set:
                    vi = False
                    failures.append(
                        (
                            face_name(self.total, E),
                            f"induced by vertices of the restriction to "
                            f"{face_name(self.base, F)} but not carried into it",
                        )
                    )
                    break

            if not K_F.is_flag():
                fl = False
                failures.append(
                    (face_name(self.base, F), "restriction is not flag")
                )

        # quasi-geometric, via the vertex-carrier-union cardinality
        # criterion: the union of vertex carriers is itself a base face,
        # so a lower-dimensional witness exists iff the union is smaller
        # than the face.
        for E in self.total.faces():
            union = 0
            for b in iter_bits(E):
                union |= self.carrier[1 << b]
            if union.bit_count() < E.bit_count():
                qg = False
                failures.append(
                    (
                        face_name(self.total, E),
                        "vertex carriers fit inside a lower-dimensional base face",
                    )
                )
                break

        return SubdivisionVerdict(hs, qg, vi, fl, tuple(failures))

    # -- local invariants ------------------------------------------------

    def _simplex_width(self) -> int:
        full = (1 << len(self.base.labels)) - 1
        if self.base.facets != frozenset({full}):
            raise BaseNotSimplex("operation requires a full simplex base")
        return len(self.base.labels)

    def local_h(self) -> IntPolynomial:
        """Alternating face-count sum of restriction h-polynomials."""
        d = self._simplex_width()
        full = (1 << d) - 1
        items = list(self.carrier.items())
        out = ZERO
        for F in iter_submasks(full):
            card = F.bit_count()
            counts = [0] * (card + 1)
            for E, c in items:
                if c & F == c:
                    counts[E.bit_count()] += 1
            term = h_from_face_counts(counts, card)
            out = out + (term if (d - card) % 2 == 0 else -term)
        return out

    def relative_local_h(self, E: int) -> IntPolynomial:
        """Local contribution at a total face, summing links over the
        base faces containing its carrier.  Reduces to `local_h` at the
        empty face."""
        d = self._simplex_width()
        if E not in self.total.face_set:
            raise NotAFace(f"{_face_repr(self.total, E)} is not a face")
        c0 = self.carrier[E]
        e_card = E.bit_count()
        full = (1 << d) - 1
        over = [
            (G, c) for G, c in self.carrier.items() if G & E == E
        ]
        out = ZERO
        for T in iter_submasks(full & ~c0):
            F = c0 | T
            card = F.bit_count()
            counts = [0] * (card - e_card + 1)
            for G, c in over:
                if c & F == c:
                    counts[G.bit_count() - e_card] += 1
            term = h_from_face_counts(counts, card - e_card)
            out = out + (term if (d - card) % 2 == 0 else -term)
        return out

    def local_gamma(self) -> GammaVector:
        """Gamma coordinates of the local h-polynomial, centered at d/2."""
        d = self._simplex_width()
        g = gamma_from_symmetric(self.local_h(), d)
        if isinstance(g, SymmetryFailure):
            raise ArithmeticError(
                f"local h-polynomial not symmetric at pair {g.i},{g.j}; "
                "this indicates an invalid subdivision or a defect"
            )
        return g

    def interior_stats(self) -> InteriorStats:
        d = self._simplex_width()
        full = (1 << d) - 1
        f0 = f1 = f0_rel = 0
        for E, c in self.carrier.items():
            k = E.bit_count()
            if k == 1:
                if c == full:
                    f0 += 1
                elif c.bit_count() == d - 1:
                    f0_rel += 1
            elif k == 2 and c == full:
                f1 += 1
        return InteriorStats(f0, f1, f0_rel)


# -- structural check operations ------------------------------------------


def check_h_decomposition(
    s: SubdivisionMap, verify: bool = False, spec: FieldSpec = GF2
) -> DecompositionCheck:
    """h(total) against the face sum of local contributions times links.

    When the base is Eulerian the gamma-level identity is emitted as
    well.  Equality is the caller's property to assert, not assumed.
    """
    if verify and not s.validate(spec).is_homology_subdivision:
        raise NotHomologySubdivision("input failed homology validation")
    h_lhs = h_polynomial(s.total)
    h_rhs = ZERO
    pieces: list[tuple[int, SubdivisionMap, SimplicialComplex]] = []
    for F in s.base.faces():
        piece = s.restriction(F)
        link = s.base.link(F)
        pieces.append((F, piece, link))
        h_rhs = h_rhs + piece.local_h() * h_polynomial(link)
    if not is_eulerian(s.base):
        return DecompositionCheck(h_lhs, h_rhs)
    d = s.base.dim + 1
    g_lhs = gamma_from_symmetric(h_lhs, d)
    if isinstance(g_lhs, SymmetryFailure):
        raise ArithmeticError(
            "h of a subdivision of an Eulerian base is not symmetric: "
            f"pair {g_lhs.i},{g_lhs.j}"
        )
    g_rhs = ZERO
    for F, piece, link in pieces:
        g_link = gamma_from_symmetric(h_polynomial(link), d - F.bit_count())
        if isinstance(g_link, SymmetryFailure):
            raise ArithmeticError("link of an Eulerian complex is not Eulerian")
        g_rhs = g_rhs + piece.local_gamma().polynomial() * g_link.polynomial()
    return DecompositionCheck(h_lhs, h_rhs, g_lhs.polynomial(), g_rhs)


def check_locality(outer: SubdivisionMap, inner: SubdivisionMap) -> LocalityCheck:
    """Local h of a composed subdivision against the locality face sum."""
    composed = compose(outer, inner)
    lhs = composed.local_h()
    rhs = ZERO
    for E in outer.total.faces():
        rhs = rhs + inner.restriction(E).local_h() * outer.relative_local_h(E)
    return LocalityCheck(lhs, rhs)


def compose(outer: SubdivisionMap, inner: SubdivisionMap) -> SubdivisionMap:
    """Composite map: carriers of ``inner`` pushed through ``outer``."""
    if inner.base != outer.total:
        raise BaseMismatch("inner base must equal outer total")
    carrier = {E: outer.carrier[c] for E, c in inner.carrier.items()}
    return SubdivisionMap(inner.total, outer.base, carrier)


# -- constructors ----------------------------------------------------------


def trivial_subdivision(K: SimplicialComplex) -> SubdivisionMap:
    return SubdivisionMap(K, K, {E: E for E in K.faces()})


def barycenter_name(names: tuple[str, ...]) -> str:
    return "b{" + ".".join(sorted(names)) + "}"


def stellar_subdivision(
    K: SimplicialComplex, face: int, new_vertex: str | None = None
) -> SubdivisionMap:
    """Replace the star of ``face`` by the cone over its boundary joined
    with its link.  Old faces keep their identity carrier; faces through
    the new vertex carry to their closure union ``face``."""
    if face not in K.face_set:
        raise NotAFace(f"{K.names(face)} is not a face")
    if face == 0:
        raise NotAFace("cannot subdivide the empty face")
    if new_vertex is None:
        new_vertex = barycenter_name(K.names(face))
    if new_vertex in K.labels:
        raise VertexCollision(f"label {new_vertex!r} already present")
    v_bit = 1 << len(K.labels)
    facets: list[int] = []
    for G in K.facets:
        if G & face != face:
            facets.append(G)
        else:
            for b in iter_bits(face):
                facets.append(v_bit | (G & ~(1 << b)))
    total = SimplicialComplex(K.labels + (new_vertex,), facets)
    carrier = {
        E: ((E & ~v_bit) | face) if E & v_bit else E for E in total.faces()
    }
    return SubdivisionMap(total, K, carrier)


def edge_subdivision(
    K: SimplicialComplex, edge: int, new_vertex: str | None = None
) -> SubdivisionMap:
    if edge.bit_count() != 2:
        raise NotAFace("edge subdivision requires a two-vertex face")
    return stellar_subdivision(K, edge, new_vertex)


def barycentric_subdivision(names) -> SubdivisionMap:
    """First barycentric subdivision of the simplex on ``names``, built
    as iterated stellar subdivisions of its faces in decreasing
    dimension order.  Vertices are kept; each subdivided face gets the
    deterministic barycenter name derived from its members."""
    names = tuple(names)
    base = simplex(names)
    s = trivial_subdivision(base)
    d = len(names)
    full = (1 << d) - 1
    by_card: dict[int, list[int]] = {}
    for m in iter_submasks(full):
        by_card.setdefault(m.bit_count(), []).append(m)
    for card in range(d, 1, -1):
        # faces of the original simplex survive top-down subdivision
        for F in sorted(by_card[card]):
            step = stellar_subdivision(s.total, F, barycenter_name(base.names(F)))
            s = compose(s, step)
    return s


def join_subdivision(s1: SubdivisionMap, s2: SubdivisionMap) -> SubdivisionMap:
    """Join of two subdivisions: carriers are unions of the factors'."""
    total = s1.total.join(s2.total)
    base = s1.base.join(s2.base)
    ts = len(s1.total.labels)
    bs = len(s1.base.labels)
    carrier = {}
    for E1, c1 in s1.carrier.items():
        for E2, c2 in s2.carrier.items():
            carrier[E1 | (E2 << ts)] = c1 | (c2 << bs)
    return SubdivisionMap(total, base, carrier)


def link_subdivision(s: SubdivisionMap, names) -> SubdivisionMap:
    """Link of the map at a face common to total and base and fixed by
    the carrier."""
    names = tuple(names)
    Ft = s.total.mask(names)
    Fb = s.base.mask(names)
    if Ft not in s.total.face_set or Fb not in s.base.face_set:
        raise NotAFace(f"{names} is not a common face")
    if s.carrier[Ft] != Fb:
        raise CarrierMismatch(f"{names} is not fixed by the carrier map")
    ltotal = s.total.link(Ft)
    lbase = s.base.link(Fb)
    t_back = {new: old for new, old in enumerate(
        i for i in range(len(s.total.labels)) if not (Ft >> i) & 1
    )}
    b_fwd = {old: new for new, old in enumerate(
        i for i in range(len(s.base.labels)) if not (Fb >> i) & 1
    )}
    carrier = {}
    for E in ltotal.faces():
        orig = Ft
        for b in iter_bits(E):
            orig |= 1 << t_back[b]
        carrier[E] = _translate(s.carrier[orig] & ~Fb, b_fwd)
    return SubdivisionMap(ltotal, lbase, carrier)
