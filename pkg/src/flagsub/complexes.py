"""Finite abstract simplicial complexes over a labeled ground set.

Faces are encoded as integer bitmasks relative to the owning complex's
label tuple, so containment tests and set algebra are single integer
operations.  The empty face (mask 0) belongs to every complex; the
minimal representable complex is ``{empty}``.  Complexes are immutable
and every operation is a pure function returning new values, so they
are safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (
    GroundSetOverlap,
    GroundSetTooLarge,
    NotAFace,
    UnknownVertex,
)

#: Default bitset width for ground sets built through `from_facets`.
DEFAULT_MAX_VERTICES = 64


def iter_submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask`` (including 0 and ``mask``)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimplicialComplex:
    """A downward-closed family of subsets of a labeled ground set.

    Stored as the antichain of facets plus the eagerly computed full
    face list, ordered by (cardinality, bitmask value) so that output
    is deterministic.
    """

    __slots__ = ("labels", "facets", "_index", "_faces", "_face_set", "_mnf")

    def __init__(self, labels: Iterable[str], facet_masks: Iterable[int]):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise UnknownVertex("ground set labels must be distinct")
        self._index = {name: i for i, name in enumerate(self.labels)}
        self.facets = frozenset(_antichain(facet_masks))
        faces: set[int] = set()
        for f in self.facets:
            faces.update(iter_submasks(f))
        self._faces = tuple(sorted(faces, key=lambda m: (m.bit_count(), m)))
        self._face_set = frozenset(faces)
        self._mnf = None

    # -- basic accessors ------------------------------------------------

    def mask(self, names: Iterable[str]) -> int:
        """Bitmask of a vertex-name collection."""
        m = 0
        for name in names:
            try:
                m |= 1 << self._index[name]
            except KeyError:
                raise UnknownVertex(f"unknown vertex {name!r}") from None
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        """Vertex names of a face mask, in label order."""
        return tuple(self.labels[i] for i in iter_bits(mask))

    def faces(self) -> tuple[int, ...]:
        """All faces including the empty face, each exactly once."""
        return self._faces

    @property
    def face_set(self) -> frozenset[int]:
        return self._face_set

    def has_face(self, mask: int) -> bool:
        return mask in self._face_set

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def vertex_support(self) -> int:
        """Mask of labels that actually occur as vertices."""
        m = 0
        for f in self.facets:
            m |= f
        return m

    def num_faces(self) -> int:
        return len(self._faces)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts (f_-1, f_0, ..., f_{dim}) with f_-1 = 1."""
        counts = [0] * (self.dim + 2)
        for f in self._faces:
            counts[f.bit_count()] += 1
        return tuple(counts)

    def is_pure(self) -> bool:
        cards = {f.bit_count() for f in self.facets}
        return len(cards) == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labels == other.labels and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.labels, self.facets))

    def __repr__(self) -> str:
        facets = sorted(",".join(self.names(f)) for f in self.facets)
        return f"SimplicialComplex({list(self.labels)!r}, facets={facets!r})"

    # -- derived complexes ----------------------------------------------

    def link(self, face: int) -> "SimplicialComplex":
        """Link of ``face``, on the ground set of the remaining labels."""
        if face not in self._face_set:
            raise NotAFace(f"{self.names(face)} is not a face")
        keep = [i for i in range(len(self.labels)) if not (face >> i) & 1]
        table = {old: new for new, old in enumerate(keep)}
        labels = tuple(self.labels[i] for i in keep)
        facet_masks = [
            _translate(g & ~face, table)
            for g in self.facets
            if face & g == face
        ]
        return SimplicialComplex(labels, facet_masks)

    def open_star(self, face: int) -> frozenset[int]:
        """All faces containing ``face``.  Not downward closed."""
        if face not in self._face_set:
            raise NotAFace(f"{self.names(face)} is not a face")
        return frozenset(g for g in self._faces if g & face == face)

    def closed_star(self, face: int) -> "SimplicialComplex":
        """Downward closure of the open star, on the same ground set."""
        if face not in self._face_set:
            raise NotAFace(f"{self.names(face)} is not a face")
        return SimplicialComplex(
            self.labels, [g for g in self.facets if g & face == face]
        )

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Simplicial join; requires disjoint ground sets."""
        overlap = set(self.labels) & set(other.labels)
        if overlap:
            raise GroundSetOverlap(f"shared labels: {sorted(overlap)}")
        shift = len(self.labels)
        facet_masks = [
            f1 | (f2 << shift) for f1 in self.facets for f2 in other.facets
        ]
        return SimplicialComplex(self.labels + other.labels, facet_masks)

    def cone(self, apex: str) -> "SimplicialComplex":
        """Cone over this complex on a new vertex ``apex``."""
        point = SimplicialComplex((apex,), [1])
        return self.join(point)

    # -- flagness ---------------------------------------------------------

    def minimal_non_faces(self) -> tuple[int, ...]:
        """Inclusion-minimal non-faces among subsets of the vertex set.

        Labels that occur in no face are ignored: flagness is a property
        of the complex on its own vertices, and this keeps links and
        joins of flag complexes flag.
        """
        if self._mnf is not None:
            return self._mnf
        support = self.vertex_support
        result: set[int] = set()
        # Candidates at cardinality k are (k-1)-faces plus one support
        # vertex; a candidate is minimal iff all its facets are faces.
        for face in self._faces:
            for i in iter_bits(support & ~face):
                cand = face | (1 << i)
                if cand in self._face_set or cand in result:
                    continue
                if all(
                    cand & ~(1 << j) in self._face_set
                    for j in iter_bits(cand)
                ):
                    result.add(cand)
        self._mnf = tuple(sorted(result, key=lambda m: (m.bit_count(), m)))
        return self._mnf

    def is_flag(self) -> bool:
        return all(m.bit_count() == 2 for m in self.minimal_non_faces())


def _antichain(masks: Iterable[int]) -> set[int]:
    """Drop dominated generators; result always contains at least 0."""
    pool = sorted(set(masks), key=lambda m: m.bit_count(), reverse=True)
    keep: list[int] = []
    for m in pool:
        if not any(m & g == m for g in keep):
            keep.append(m)
    return set(keep) if keep else {0}


def _translate(mask: int, table: dict[int, int]) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << table[i]
    return out


def from_facets(
    labels: Iterable[str],
    generators: Iterable[Iterable[str]],
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> SimplicialComplex:
    """Downward closure of the given generators.

    Dominated generators are dropped silently so the stored facets form
    an antichain.  An empty generator list yields the complex ``{empty}``.
    """
    labels = tuple(labels)
    if len(labels) > max_vertices:
        raise GroundSetTooLarge(
            f"{len(labels)} labels exceed the width limit {max_vertices}"
        )
    probe = SimplicialComplex(labels, [0])
    return SimplicialComplex(labels, [probe.mask(g) for g in generators])


def from_faces(labels: Iterable[str], face_masks: Iterable[int]) -> SimplicialComplex:
    """Complex whose facets are the maximal members of ``face_masks``.

    The input is assumed downward closed; only maximality is computed.
    """
    return SimplicialComplex(labels, face_masks)


def simplex(labels: Iterable[str]) -> SimplicialComplex:
    """The full simplex on the given vertex names."""
    labels = tuple(labels)
    return SimplicialComplex(labels, [(1 << len(labels)) - 1])


def sphere_zero(a: str, b: str) -> SimplicialComplex:
    """Two isolated vertices."""
    return SimplicialComplex((a, b), [1, 2])


def cross_polytope_on(
    u_labels: Iterable[str], v_labels: Iterable[str]
) -> SimplicialComplex:
    """Boundary complex of a cross-polytope with explicit antipodal pairs.

    Faces contain at most one of each pair ``{u_i, v_i}``; there are
    ``2**d`` facets, one per choice of a member from every pair.
    """
    u_labels, v_labels = tuple(u_labels), tuple(v_labels)
    d = len(u_labels)
    if len(v_labels) != d or d < 1:
        raise ValueError("need matching nonempty u/v label sequences")
    facet_masks = []
    for pick in range(1 << d):
        m = 0
        for i in range(d):
            if (pick >> i) & 1:
                m |= 1 << (d + i)  # v_i
            else:
                m |= 1 << i  # u_i
        facet_masks.append(m)
    return SimplicialComplex(u_labels + v_labels, facet_masks)


def cross_polytope(d: int) -> SimplicialComplex:
    """Boundary complex of the d-dimensional cross-polytope.

    The flag (d-1)-sphere on vertices u_1..u_d, v_1..v_d, equal to the
    d-fold join of two-point spheres.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    return cross_polytope_on(
        [f"u{i}" for i in range(1, d + 1)],
        [f"v{i}" for i in range(1, d + 1)],
    )
