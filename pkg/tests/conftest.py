"""Shared test oracles, deliberately independent of the package's own
arithmetic: symbolic expansion through sympy for face sums, sympy
domain-matrix ranks for homology, and literal quantifier forms for the
combinatorial criteria the library implements via shortcuts."""

from __future__ import annotations

import sympy
from sympy import GF, QQ, Matrix, Poly, symbols
from sympy.polys.matrices import DomainMatrix

from flagsub.complexes import SimplicialComplex, iter_bits, iter_submasks
from flagsub.subdivisions import SubdivisionMap

x = symbols("x")


def sympy_h(face_cards: list[int], d: int) -> list[int]:
    """Face sum x**|F| (1-x)**(d-|F|) expanded symbolically.

    Takes the multiset of face cardinalities; returns dense coefficients
    [h_0 .. h_d].
    """
    expr = sympy.Integer(0)
    for k in face_cards:
        expr += x**k * (1 - x) ** (d - k)
    poly = Poly(expr, x)
    return [int(poly.coeff_monomial(x**i)) for i in range(d + 1)]


def poly_coeffs(p) -> list[int]:
    """Dense coefficient list of an IntPolynomial, for oracle compares."""
    return list(p.coeffs)


def sympy_local_h(s: SubdivisionMap) -> list[int]:
    """Literal alternating sum over the subsets of the base vertex set."""
    d = len(s.base.labels)
    full = (1 << d) - 1
    expr = sympy.Integer(0)
    for F in iter_submasks(full):
        cards = [E.bit_count() for E, c in s.carrier.items() if c & F == c]
        sign = (-1) ** (d - F.bit_count())
        for k in cards:
            expr += sign * x**k * (1 - x) ** (F.bit_count() - k)
    poly = Poly(expr, x) if expr != 0 else None
    if poly is None:
        return []
    out = [int(poly.coeff_monomial(x**i)) for i in range(d + 1)]
    while out and out[-1] == 0:
        out.pop()
    return out


def sympy_reduced_betti(K: SimplicialComplex, char: int = 0) -> list[int]:
    """Reduced Betti numbers via sympy matrix ranks.

    Faces are handled as sorted vertex-name tuples so the construction
    shares nothing with the bitmask boundary matrices under test.
    """
    by_card: dict[int, list[tuple[str, ...]]] = {}
    for f in K.faces():
        names = tuple(sorted(K.names(f)))
        by_card.setdefault(len(names), []).append(names)
    for lst in by_card.values():
        lst.sort()
    top = max(by_card)
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        lower = {f: i for i, f in enumerate(by_card.get(k - 1, []))}
        upper = by_card.get(k, [])
        if not upper or not lower:
            continue
        mat = [[0] * len(upper) for _ in lower]
        for j, f in enumerate(upper):
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1 :]
                mat[lower[sub]][j] = (-1) ** pos
        dm = DomainMatrix.from_Matrix(Matrix(mat))
        dm = dm.convert_to(GF(char) if char else QQ)
        ranks[k] = dm.rank()
    return [
        len(by_card.get(k, ())) - ranks[k] - ranks[k + 1] for k in range(top + 1)
    ]


def literal_quasi_geometric(s: SubdivisionMap) -> bool:
    """Direct quantifier form: no total face has all its vertex carriers
    inside a base face of strictly smaller dimension."""
    for E in s.total.faces():
        union = 0
        for b in iter_bits(E):
            union |= s.carrier[1 << b]
        for F in s.base.faces():
            if F.bit_count() < E.bit_count() and union & F == union:
                return False
    return True


def brute_downward_closed(K: SimplicialComplex) -> bool:
    faces = K.face_set
    return all(
        all(f & ~(1 << b) in faces for b in iter_bits(f)) for f in faces
    )
