"""Seeded instance generators and the conjecture/theorem check suite.

Checks come in two tiers.  Theorem-tier checks cover proven statements
and must pass on every generated instance; a failure is an
implementation defect.  Conjecture-tier checks cover open statements
and are reported with a replayable witness, never asserted: a genuine
counterexample is a result, not a bug.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .complexes import SimplicialComplex, cross_polytope, from_facets
from .errors import MalformedInstance
from .polynomials import (
    GammaVector,
    SymmetryFailure,
    gamma_vector,
    h_polynomial,
)
from .subdivisions import (
    SubdivisionMap,
    check_h_decomposition,
    check_locality,
    compose,
    edge_subdivision,
    join_subdivision,
    trivial_subdivision,
)

#: Identity of the pseudo-random generator used for instance sampling,
#: recorded in every report header.
RNG_NAME = "mersenne-twister (python random.Random)"

#: Refuse to grow instances beyond this many total faces.
MAX_FACES = 1 << 22

EDGE_SUBDIVIDE = "edge-subdivide"
JOIN_WITH_S0 = "join-with-S0"


@dataclass(frozen=True)
class GeneratorSpec:
    """Reproducible recipe for a random flag sphere."""

    dimension: int
    steps: int
    seed: int
    moves: tuple[str, ...] = (EDGE_SUBDIVIDE,)

    def __post_init__(self):
        if self.dimension < 1:
            raise MalformedInstance("dimension must be >= 1")
        bad = set(self.moves) - {EDGE_SUBDIVIDE, JOIN_WITH_S0}
        if bad or not self.moves:
            raise MalformedInstance(f"unknown moves: {sorted(bad)}")


def _random_edge_step(K: SimplicialComplex, rng: random.Random) -> SubdivisionMap:
    edges = [f for f in K.faces() if f.bit_count() == 2]
    if not edges:
        raise MalformedInstance("complex has no edges to subdivide")
    return edge_subdivision(K, edges[rng.randrange(len(edges))])


def random_flag_sphere(
    spec: GeneratorSpec, max_faces: int = MAX_FACES
) -> tuple[SimplicialComplex, SubdivisionMap]:
    """Random flag sphere with its subdivision trail over the starting
    cross-polytope boundary.

    Starts from the boundary of the ``dimension``-dimensional
    cross-polytope and applies ``steps`` uniformly random moves; edge
    subdivisions and joins with two-point spheres both preserve the
    flag-sphere class.  Identical specs yield identical outputs.
    """
    rng = random.Random(spec.seed)
    K = cross_polytope(spec.dimension)
    trail = trivial_subdivision(K)
    for _ in range(spec.steps):
        move = spec.moves[rng.randrange(len(spec.moves))]
        if move == EDGE_SUBDIVIDE:
            step = _random_edge_step(K, rng)
            trail = compose(trail, step)
        else:
            pair_index = len(trail.base.labels) // 2 + 1
            s0 = from_facets(
                (f"u{pair_index}", f"v{pair_index}"),
                [[f"u{pair_index}"], [f"v{pair_index}"]],
            )
            trail = join_subdivision(trail, trivial_subdivision(s0))
        K = trail.total
        if K.num_faces() > max_faces:
            raise MalformedInstance(
                f"instance exceeded {max_faces} faces; refuse to continue"
            )
    return K, trail


def random_simplex_subdivision(
    vertices: tuple[str, ...], steps: int, seed: int, max_faces: int = MAX_FACES
) -> SubdivisionMap:
    """Iterated random edge subdivisions of the trivial subdivision of a
    simplex.  Always geometric, hence flag, vertex-induced and
    quasi-geometric."""
    from .complexes import simplex

    rng = random.Random(seed)
    s = trivial_subdivision(simplex(vertices))
    for _ in range(steps):
        step = _random_edge_step(s.total, rng)
        s = compose(s, step)
        if s.total.num_faces() > max_faces:
            raise MalformedInstance(
                f"instance exceeded {max_faces} faces; refuse to continue"
            )
    return s


def random_sphere_pair(
    dimension: int, pre_steps: int, extra_steps: int, seed: int
) -> SubdivisionMap:
    """A flag sphere and a flag subdivision of it, as one map.

    The base is reached by ``pre_steps`` random edge subdivisions of a
    cross-polytope boundary; the total applies ``extra_steps`` more.
    """
    rng = random.Random(seed)
    K = cross_polytope(dimension)
    for _ in range(pre_steps):
        K = _random_edge_step(K, rng).total
    inner = trivial_subdivision(K)
    for _ in range(extra_steps):
        inner = compose(inner, _random_edge_step(inner.total, rng))
    return inner


# -- check suite -------------------------------------------------------------

THEOREM = "theorem"
CONJECTURE = "conjecture"


@dataclass(frozen=True)
class CheckResult:
    status: str  # "pass" | "fail" | "skipped"
    witness: dict | None = None

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Instance:
    """A suite instance; checks use whichever fields are present."""

    id: str
    complex: SimplicialComplex | None = None
    subdivision: SubdivisionMap | None = None
    pair: SubdivisionMap | None = None  # sphere subdivision: total over base
    outer: SubdivisionMap | None = None
    inner: SubdivisionMap | None = None
    factors: tuple[SubdivisionMap, SubdivisionMap] | None = None


@dataclass
class ConjectureReport:
    instance: str
    checks: dict[str, CheckResult] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)
    digests: dict[str, list[int]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "checks": {k: v.to_dict() for k, v in self.checks.items()},
            "timings_ms": {k: round(v * 1000, 3) for k, v in self.timings.items()},
            "digests": self.digests,
        }


def _gamma_or_none(K: SimplicialComplex) -> GammaVector | None:
    g = gamma_vector(K)
    return None if isinstance(g, SymmetryFailure) else g


def _check_gal(inst: Instance) -> CheckResult:
    if inst.complex is None:
        return CheckResult("skipped")
    g = gamma_vector(inst.complex)
    if isinstance(g, SymmetryFailure):
        return CheckResult("fail", {"symmetry_failure": g.to_dict()})
    if g.is_nonnegative():
        return CheckResult("pass")
    return CheckResult("fail", {"gamma": g.to_list()})


def _check_local_gamma(inst: Instance) -> CheckResult:
    if inst.subdivision is None:
        return CheckResult("skipped")
    xi = inst.subdivision.local_gamma()
    if xi.is_nonnegative():
        return CheckResult("pass")
    return CheckResult("fail", {"xi": xi.to_list()})


def _check_monotonicity(inst: Instance) -> CheckResult:
    if inst.pair is None:
        return CheckResult("skipped")
    g_base = _gamma_or_none(inst.pair.base)
    g_total = _gamma_or_none(inst.pair.total)
    if g_base is None or g_total is None:
        return CheckResult("fail", {"reason": "gamma undefined on one side"})
    if g_total >= g_base:
        return CheckResult("pass")
    return CheckResult(
        "fail", {"gamma_base": g_base.to_list(), "gamma_total": g_total.to_list()}
    )


def _check_unimodality(inst: Instance) -> CheckResult:
    if inst.subdivision is None:
        return CheckResult("skipped")
    ell = inst.subdivision.local_h()
    if ell.is_unimodal():
        return CheckResult("pass")
    return CheckResult("fail", {"local_h": ell.to_list()})


def _check_relative_symmetry(inst: Instance) -> CheckResult:
    if inst.subdivision is None:
        return CheckResult("skipped")
    s = inst.subdivision
    d = len(s.base.labels)
    for E in s.total.faces():
        ell = s.relative_local_h(E)
        if ell.reflect(d - E.bit_count()) != ell:
            return CheckResult(
                "fail",
                {"face": list(s.total.names(E)), "relative_local_h": ell.to_list()},
            )
    return CheckResult("pass")


def _check_local_h_symmetry(inst: Instance) -> CheckResult:
    if inst.subdivision is None:
        return CheckResult("skipped")
    ell = inst.subdivision.local_h()
    d = len(inst.subdivision.base.labels)
    if ell.is_symmetric(d):
        return CheckResult("pass")
    return CheckResult("fail", {"local_h": ell.to_list()})


def _check_local_h_nonneg(inst: Instance) -> CheckResult:
    if inst.subdivision is None:
        return CheckResult("skipped")
    if not inst.subdivision.validate(fast=True).is_quasi_geometric:
        return CheckResult("skipped")
    ell = inst.subdivision.local_h()
    if ell.is_nonnegative():
        return CheckResult("pass")
    return CheckResult("fail", {"local_h": ell.to_list()})


def _check_h_decomposition(inst: Instance) -> CheckResult:
    s = inst.subdivision or inst.pair
    if s is None:
        return CheckResult("skipped")
    chk = check_h_decomposition(s)
    if chk.ok:
        return CheckResult("pass")
    return CheckResult(
        "fail",
        {"h_lhs": chk.h_lhs.to_list(), "h_rhs": chk.h_rhs.to_list()},
    )


def _check_locality(inst: Instance) -> CheckResult:
    if inst.outer is None or inst.inner is None:
        return CheckResult("skipped")
    chk = check_locality(inst.outer, inst.inner)
    if chk.ok:
        return CheckResult("pass")
    return CheckResult(
        "fail", {"lhs": chk.lhs.to_list(), "rhs": chk.rhs.to_list()}
    )


def _check_xi_product(inst: Instance) -> CheckResult:
    if inst.factors is None or inst.subdivision is None:
        return CheckResult("skipped")
    s1, s2 = inst.factors
    lhs = inst.subdivision.local_gamma().polynomial()
    rhs = s1.local_gamma().polynomial() * s2.local_gamma().polynomial()
    if lhs == rhs:
        return CheckResult("pass")
    return CheckResult("fail", {"lhs": lhs.to_list(), "rhs": rhs.to_list()})


def _check_xi_formulas(inst: Instance) -> CheckResult:
    if inst.subdivision is None:
        return CheckResult("skipped")
    s = inst.subdivision
    d = len(s.base.labels)
    if d < 1:
        return CheckResult("skipped")
    xi = s.local_gamma()
    stats = s.interior_stats()
    if xi.coeffs[0] != 0:
        return CheckResult("fail", {"xi": xi.to_list(), "reason": "xi_0 != 0"})
    xi1 = xi.coeffs[1] if len(xi.coeffs) > 1 else 0
    if xi1 != stats.f0_interior:
        return CheckResult(
            "fail", {"xi": xi.to_list(), "stats": stats.to_dict()}
        )
    if d >= 4:
        want = (
            -(2 * d - 3) * stats.f0_interior
            + stats.f1_interior
            - stats.f0_codim1_relint
        )
        xi2 = xi.coeffs[2] if len(xi.coeffs) > 2 else 0
        if xi2 != want:
            return CheckResult(
                "fail", {"xi": xi.to_list(), "stats": stats.to_dict()}
            )
    return CheckResult("pass")


def _check_field_agreement(inst: Instance) -> CheckResult:
    if inst.complex is None:
        return CheckResult("skipped")
    from .homology import GF2, QQ, classify

    over_gf2 = classify(inst.complex, GF2)
    over_q = classify(inst.complex, QQ)
    if (over_gf2.kind, over_gf2.dimension) == (over_q.kind, over_q.dimension):
        return CheckResult("pass")
    return CheckResult(
        "fail",
        {"gf2": over_gf2.kind, "q": over_q.kind, "dimension": over_gf2.dimension},
    )


def _check_hierarchy(inst: Instance) -> CheckResult:
    s = inst.subdivision or inst.pair
    if s is None:
        return CheckResult("skipped")
    v = s.validate(fast=True)
    if v.is_vertex_induced and not v.is_quasi_geometric:
        return CheckResult("fail", {"reason": "vertex-induced but not quasi-geometric"})
    if v.is_vertex_induced and s.total.is_flag() and not v.is_flag_subdivision:
        return CheckResult(
            "fail", {"reason": "flag total + vertex-induced but not flag subdivision"}
        )
    return CheckResult("pass")


@dataclass(frozen=True)
class Check:
    name: str
    tier: str
    fn: object


CHECKS: dict[str, Check] = {
    c.name: c
    for c in [
        Check("gal", CONJECTURE, _check_gal),
        Check("local-gamma", CONJECTURE, _check_local_gamma),
        Check("monotonicity", CONJECTURE, _check_monotonicity),
        Check("unimodality", CONJECTURE, _check_unimodality),
        Check("relative-symmetry", CONJECTURE, _check_relative_symmetry),
        Check("field-agreement", CONJECTURE, _check_field_agreement),
        Check("local-h-symmetry", THEOREM, _check_local_h_symmetry),
        Check("local-h-nonneg", THEOREM, _check_local_h_nonneg),
        Check("h-decomposition", THEOREM, _check_h_decomposition),
        Check("locality", THEOREM, _check_locality),
        Check("xi-product", THEOREM, _check_xi_product),
        Check("xi-formulas", THEOREM, _check_xi_formulas),
        Check("hierarchy", THEOREM, _check_hierarchy),
    ]
}


def _digests(inst: Instance) -> dict[str, list[int]]:
    out: dict[str, list[int]] = {}
    if inst.complex is not None:
        g = _gamma_or_none(inst.complex)
        if g is not None:
            out["gamma"] = g.to_list()
        out["h"] = h_polynomial(inst.complex).to_list()
    if inst.subdivision is not None:
        try:
            out["local_h"] = inst.subdivision.local_h().to_list()
            out["xi"] = inst.subdivision.local_gamma().to_list()
        except Exception:
            pass
    return out


def run_conjecture_suite(
    instances: list[Instance], checks: set[str]
) -> list[ConjectureReport]:
    """Evaluate the named checks on every instance.

    Failures never raise; they are recorded with witnesses.  Use
    `has_theorem_failure` to decide whether a run uncovered an
    implementation defect.
    """
    unknown = checks - CHECKS.keys()
    if unknown:
        raise MalformedInstance(f"unknown checks: {sorted(unknown)}")
    reports = []
    for inst in instances:
        rep = ConjectureReport(instance=inst.id)
        for name in sorted(checks):
            t0 = time.perf_counter()
            rep.checks[name] = CHECKS[name].fn(inst)
            rep.timings[name] = time.perf_counter() - t0
        rep.digests = _digests(inst)
        reports.append(rep)
    return reports


def has_theorem_failure(reports: list[ConjectureReport]) -> bool:
    return any(
        res.status == "fail" and CHECKS[name].tier == THEOREM
        for rep in reports
        for name, res in rep.checks.items()
    )


def summarize(reports: list[ConjectureReport]) -> dict[str, dict[str, int]]:
    """Per-check pass/fail/skip tallies."""
    out: dict[str, dict[str, int]] = {}
    for rep in reports:
        for name, res in rep.checks.items():
            bucket = out.setdefault(
                name, {"pass": 0, "fail": 0, "skipped": 0}
            )
            bucket[res.status] += 1
    return out
