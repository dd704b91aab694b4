"""Reduced simplicial homology over a field, and sphere/ball certification.

Ranks of boundary matrices are computed exactly: bitmask elimination
over GF(2), dense modular elimination over GF(p), and fraction-free
(Bareiss) elimination over the rationals.  Matrices are desk scale, so
no sparse machinery is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import SimplicialComplex, from_faces, iter_bits

__all__ = [
    "FieldSpec",
    "GF2",
    "QQ",
    "BettiVector",
    "HomologyClass",
    "reduced_betti",
    "classify",
    "interior_faces",
]


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: GF(p) for prime p, or the rationals (char 0)."""

    char: int

    def __post_init__(self):
        if self.char == 0:
            return
        if self.char < 2 or any(
            self.char % q == 0 for q in range(2, int(self.char**0.5) + 1)
        ):
            raise ValueError(f"{self.char} is not prime")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    def __str__(self) -> str:
        return "Q" if self.char == 0 else f"GF({self.char})"


GF2 = FieldSpec.gf(2)
QQ = FieldSpec.rationals()


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers indexed from dimension -1 upward."""

    values: tuple[int, ...]

    def get(self, i: int) -> int:
        j = i + 1
        if 0 <= j < len(self.values):
            return self.values[j]
        return 0

    @property
    def top_index(self) -> int:
        return len(self.values) - 2

    def is_concentrated(self, dim: int) -> bool:
        """Exactly one dimension of rank 1, at ``dim``; zero elsewhere."""
        return all(
            v == (1 if i - 1 == dim else 0) for i, v in enumerate(self.values)
        )

    def is_zero(self) -> bool:
        return not any(self.values)

    def to_dict(self) -> dict[str, int]:
        return {str(i - 1): v for i, v in enumerate(self.values)}


def _rank_gf2(columns: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        cur = col
        while cur:
            top = cur.bit_length() - 1
            pivot = pivots.get(top)
            if pivot is None:
                pivots[top] = cur
                rank += 1
                break
            cur ^= pivot
    return rank


def _rank_gfp(rows: list[list[int]], p: int) -> int:
    m = [r[:] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(c * inv) % p for c in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col] % p:
                factor = m[i][col]
                m[i] = [(a - factor * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Rank of an integer matrix over the rationals, fraction-free."""
    m = [r[:] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        lead = m[rank][col]
        for i in range(rank + 1, nrows):
            fi = m[i][col]
            row = m[i]
            top = m[rank]
            for j in range(col, ncols):
                row[j] = (row[j] * lead - fi * top[j]) // prev
        prev = lead
        rank += 1
        if rank == nrows:
            break
    return rank


def _boundary_rank(
    lower: list[int], upper: list[int], spec: FieldSpec
) -> int:
    """Rank of the boundary map from card-k faces to card-(k-1) faces."""
    index = {f: i for i, f in enumerate(lower)}
    if spec.char == 2:
        columns = []
        for f in upper:
            col = 0
            for b in iter_bits(f):
                col |= 1 << index[f & ~(1 << b)]
            columns.append(col)
        return _rank_gf2(columns)
    rows = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        for pos, b in enumerate(iter_bits(f)):
            rows[index[f & ~(1 << b)]][j] = -1 if pos % 2 else 1
    if spec.char == 0:
        return _rank_bareiss(rows)
    return _rank_gfp(rows, spec.char)


def reduced_betti(K: SimplicialComplex, spec: FieldSpec = GF2) -> BettiVector:
    """Reduced Betti numbers of ``K`` from exact boundary-matrix ranks.

    The chain complex is augmented: the empty face spans the chain group
    in dimension -1, so the entry at index -1 is 1 exactly for the
    complex ``{empty}``.
    """
    by_card: dict[int, list[int]] = {}
    for f in K.faces():
        by_card.setdefault(f.bit_count(), []).append(f)
    top = max(by_card)
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        ranks[k] = _boundary_rank(by_card.get(k - 1, []), by_card.get(k, []), spec)
    values = tuple(
        len(by_card.get(k, ())) - ranks[k] - ranks[k + 1]
        for k in range(top + 1)
    )
    return BettiVector(values)


@dataclass(frozen=True)
class HomologyClass:
    """Sphere / ball / other verdict with the certifying data.

    For a ball, ``boundary`` is the subcomplex spanned by the codim-1
    faces lying in a unique facet (on the same ground set, so face
    masks stay comparable).  ``evidence`` optionally maps each face to
    the Betti vector of its link.
    """

    kind: str  # "sphere" | "ball" | "other"
    dimension: int
    betti: BettiVector
    boundary: SimplicialComplex | None = None
    evidence: dict[int, BettiVector] | None = field(default=None, compare=False)

    @property
    def is_sphere(self) -> bool:
        return self.kind == "sphere"

    @property
    def is_ball(self) -> bool:
        return self.kind == "ball"


def _link_betti(
    K: SimplicialComplex, spec: FieldSpec, with_evidence: bool
) -> tuple[dict[int, BettiVector], dict[int, BettiVector] | None]:
    evidence: dict[int, BettiVector] = {}
    for f in K.faces():
        evidence[f] = reduced_betti(K.link(f), spec)
    return evidence, (evidence if with_evidence else None)


def classify(
    K: SimplicialComplex,
    spec: FieldSpec = GF2,
    with_evidence: bool = False,
) -> HomologyClass:
    """Certify ``K`` as a homology sphere, homology ball, or neither.

    Sphere: every face link (the empty face included) has homology
    concentrated as one copy of the field in top dimension.  Ball: the
    candidate boundary, spanned by the codim-1 faces in a unique facet,
    is a sphere one dimension down, boundary-face links are acyclic and
    interior-face links are concentrated in top dimension.  A sphere or
    ball verdict additionally requires all facets to share a dimension.
    """
    dim = K.dim
    betti_self = reduced_betti(K, spec)
    if dim == -1:
        # The one-face complex: concentrated in dimension -1.
        return HomologyClass("sphere", -1, betti_self)
    if not K.is_pure():
        return HomologyClass("other", dim, betti_self)
    links, evidence = _link_betti(K, spec, with_evidence)

    if all(
        b.is_concentrated(dim - f.bit_count()) for f, b in links.items()
    ):
        return HomologyClass("sphere", dim, betti_self, evidence=evidence)

    boundary_faces = [
        f
        for f in K.faces()
        if f.bit_count() == dim
        and sum(1 for g in K.facets if f & g == f) == 1
    ]
    boundary = from_faces(K.labels, boundary_faces)
    sub = classify(boundary, spec)
    if sub.is_sphere and sub.dimension == dim - 1:
        bset = boundary.face_set
        ok = all(
            b.is_zero() if f in bset else b.is_concentrated(dim - f.bit_count())
            for f, b in links.items()
        )
        if ok:
            return HomologyClass(
                "ball", dim, betti_self, boundary=boundary, evidence=evidence
            )
    return HomologyClass("other", dim, betti_self, evidence=evidence)


def interior_faces(K: SimplicialComplex, verdict: HomologyClass) -> frozenset[int]:
    """Interior face masks: everything for a sphere, complement of the
    boundary for a ball."""
    if verdict.is_sphere:
        return K.face_set
    if verdict.is_ball:
        return K.face_set - verdict.boundary.face_set
    raise ValueError("interior is defined for sphere or ball verdicts only")
