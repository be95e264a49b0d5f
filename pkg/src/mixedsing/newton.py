"""Lattice geometry of the Newton boundary of a mixed polynomial.

The support of g is the set of exponent sums nu + mu of its terms.  The
Newton polygon is the convex hull of support + R^n_+, and the Newton
boundary is the union of its compact faces.  For two variables the boundary
is a staircase: a chain of vertices joined by edges with negative slope,
each edge supported by a primitive weight vector with positive entries.

Weight vectors with zero entries are accepted by :func:`weight_data` (they
are needed for local tameness, where the zero set of the weight singles out
a vanishing coordinate subspace) even though the corresponding face of the
polygon may be non-compact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Sequence

from .mixedpoly import GaussianRational, MixedPolynomial

__all__ = [
    "WeightVector",
    "Face",
    "NewtonPolygon",
    "StratumDescriptor",
    "support",
    "compact_faces",
    "weight_data",
    "face_function",
    "canonical_strata",
]

LatticePoint = tuple[int, ...]


@dataclass(frozen=True)
class WeightVector:
    """A nonzero vector of non-negative integer weights."""

    p: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.p or all(x == 0 for x in self.p):
            raise ValueError("weight vector must be nonzero")
        if any(x < 0 for x in self.p):
            raise ValueError("weight entries must be non-negative")

    def zero_set(self) -> frozenset[int]:
        """I(P) = {i : p_i = 0}, 1-based."""
        return frozenset(i + 1 for i, x in enumerate(self.p) if x == 0)

    def pairing(self, xi: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.p, xi))


@dataclass(frozen=True)
class Face:
    """A face of the Newton polygon, recorded through its lattice points.

    dim is the dimension of the affine span of the points; supporting_weight
    attains its minimum over the support exactly on the points.
    """

    dim: int
    lattice_points: tuple[LatticePoint, ...]
    supporting_weight: WeightVector

    def point_set(self) -> frozenset[LatticePoint]:
        return frozenset(self.lattice_points)


@dataclass(frozen=True)
class NewtonPolygon:
    n: int
    support: frozenset[LatticePoint]
    faces: tuple[Face, ...]
    # argmin data for the axis weights (zero entries), non-compact directions
    noncompact: tuple[Face, ...] = ()

    def vertices(self) -> list[LatticePoint]:
        return [f.lattice_points[0] for f in self.faces if f.dim == 0]

    def edges(self) -> list[Face]:
        return [f for f in self.faces if f.dim == 1]

    def to_json(self) -> dict:
        return {
            "support": [list(pt) for pt in sorted(self.support)],
            "faces": [
                {
                    "dim": f.dim,
                    "points": [list(pt) for pt in f.lattice_points],
                    "weight": list(f.supporting_weight.p),
                }
                for f in self.faces
            ],
        }


def support(p: MixedPolynomial) -> frozenset[LatticePoint]:
    """{nu + mu over the stored terms}; distinct terms may merge."""
    if p.is_zero():
        raise ValueError("zero polynomial has no Newton data")
    return frozenset(
        tuple(a + b for a, b in zip(nu, mu)) for (nu, mu) in p.terms
    )


def _affine_dim(points: Iterable[LatticePoint]) -> int:
    pts = list(points)
    if len(pts) <= 1:
        return 0
    base = pts[0]
    vecs = [tuple(a - b for a, b in zip(q, base)) for q in pts[1:]]
    # small scale: rank via fraction-free elimination on integer rows
    rows = [list(v) for v in vecs]
    rank = 0
    cols = len(base)
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c]
                g = rows[r][c]
                rows[i] = [g * x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        rank = r
    return rank


def weight_data(p: MixedPolynomial, P: WeightVector) -> tuple[int, Face]:
    """Minimal value d(P) of the weight pairing and the argmin face."""
    if p.is_zero():
        raise ValueError("zero polynomial has no Newton data")
    if len(P.p) != p.n:
        raise ValueError("weight length does not match variable count")
    pts = sorted(support(p))
    values = [P.pairing(pt) for pt in pts]
    d = min(values)
    delta = tuple(pt for pt, v in zip(pts, values) if v == d)
    return d, Face(_affine_dim(delta), delta, P)


def face_function(p: MixedPolynomial, delta: Face | Iterable[LatticePoint]) -> MixedPolynomial:
    """Sum of exactly the terms whose nu + mu lies in the face."""
    pts = delta.point_set() if isinstance(delta, Face) else frozenset(tuple(q) for q in delta)
    kept = {
        (nu, mu): c
        for (nu, mu), c in p.terms.items()
        if tuple(a + b for a, b in zip(nu, mu)) in pts
    }
    return MixedPolynomial(p.n, kept)


def weight_face(p: MixedPolynomial, P: WeightVector) -> MixedPolynomial:
    """Face function of the weight P, i.e. of the argmin face Delta(P)."""
    _, delta = weight_data(p, P)
    return face_function(p, delta)


def _pareto_minimal(points: Iterable[LatticePoint]) -> list[LatticePoint]:
    pts = sorted(points)
    out = []
    for q in pts:
        if not any(
            all(a <= b for a, b in zip(r, q)) and r != q for r in pts
        ):
            out.append(q)
    return out


def _vertex_weight(pts: list[LatticePoint], v: LatticePoint) -> WeightVector:
    # lexicographically smallest primitive positive weight isolating v
    bound = 2 * max(max(pt) for pt in pts) + 3
    for p1 in range(1, bound + 1):
        for p2 in range(1, bound + 1):
            if gcd(p1, p2) != 1:
                continue
            w = WeightVector((p1, p2))
            vals = [w.pairing(pt) for pt in pts]
            d = min(vals)
            argmin = [pt for pt, val in zip(pts, vals) if val == d]
            if argmin == [v]:
                return w
    raise AssertionError(f"no isolating weight found for vertex {v}")


def compact_faces(p: MixedPolynomial) -> NewtonPolygon:
    """Vertices and bounded edges of the Newton boundary, n = 2 only.

    Faces are listed in order of increasing first coordinate, alternating
    vertex, edge, vertex, ...  Each edge carries its primitive inward normal
    (both entries positive); each vertex carries the lexicographically
    smallest primitive positive weight isolating it.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no Newton data")
    if p.n != 2:
        raise NotImplementedError("compact face enumeration is implemented for n = 2")
    supp = sorted(support(p))
    pareto = _pareto_minimal(supp)  # x ascending, y strictly descending

    # lower-left convex chain (monotone chain keeping strict turns)
    chain: list[LatticePoint] = []
    for q in pareto:
        while len(chain) >= 2:
            a, b = chain[-2], chain[-1]
            cross = (b[0] - a[0]) * (q[1] - b[1]) - (b[1] - a[1]) * (q[0] - b[0])
            if cross <= 0:
                chain.pop()
            else:
                break
        chain.append(q)

    faces: list[Face] = []
    for k, v in enumerate(chain):
        faces.append(Face(0, (v,), _vertex_weight(supp, v)))
        if k + 1 < len(chain):
            w = chain[k + 1]
            dx, dy = w[0] - v[0], w[1] - v[1]
            g = gcd(abs(dx), abs(dy))
            normal = WeightVector((-dy // g, dx // g))
            d, delta = weight_data(p, normal)
            faces.append(Face(1, delta.lattice_points, normal))

    noncompact = []
    for axis_weight in (WeightVector((1, 0)), WeightVector((0, 1))):
        _, delta = weight_data(p, axis_weight)
        noncompact.append(delta)

    return NewtonPolygon(2, frozenset(supp), tuple(faces), tuple(noncompact))


# ---------------------------------------------------------------------------
# canonical stratification descriptors


@dataclass(frozen=True)
class StratumDescriptor:
    """Symbolic description of one stratum of the canonical stratification.

    kind is one of:
      "zero-locus"      g^{-1}(0) intersected with the open torus of C^I
      "complement"      that torus minus the zero locus
      "vanishing-torus" the whole open torus of C^I (I vanishing)
    """

    kind: str
    I: frozenset[int]
    label: str
    membership: Callable[[Sequence], bool] = field(compare=False, repr=False)

    def contains(self, point: Sequence) -> bool:
        return self.membership(point)


def _is_zero_value(value) -> bool:
    if isinstance(value, GaussianRational):
        return value.is_zero()
    return abs(complex(value)) < 1e-9


def canonical_strata(p: MixedPolynomial) -> list[StratumDescriptor]:
    """Descriptors of the canonical stratification of the zero set.

    For each non-vanishing I the torus of C^I splits into the zero locus of
    g and its complement; each vanishing I contributes its whole torus.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no canonical stratification")
    nonvanishing, vanishing = p.index_sets()

    def torus_test(I: frozenset[int]) -> Callable[[Sequence], bool]:
        def inside(point: Sequence) -> bool:
            if len(point) != p.n:
                return False
            for i in range(p.n):
                zero_coord = _is_zero_value(point[i])
                if (i + 1 in I) == zero_coord:
                    return False
            return True

        return inside

    def key(I: frozenset[int]) -> tuple:
        return (len(I), sorted(I))

    out: list[StratumDescriptor] = []
    for I in sorted(nonvanishing, key=key):
        iname = "{" + ",".join(str(i) for i in sorted(I)) + "}"
        on_torus = torus_test(I)

        def in_zero(point, _t=on_torus):
            return _t(point) and _is_zero_value(p.evaluate(point))

        def in_complement(point, _t=on_torus):
            return _t(point) and not _is_zero_value(p.evaluate(point))

        out.append(
            StratumDescriptor("zero-locus", I, f"g^-1(0) n C*^{iname}", in_zero)
        )
        out.append(
            StratumDescriptor("complement", I, f"C*^{iname} \\ g^-1(0)", in_complement)
        )
    for I in sorted(vanishing, key=key):
        iname = "{" + ",".join(str(i) for i in sorted(I)) + "}"
        out.append(
            StratumDescriptor("vanishing-torus", I, f"C*^{iname}", torus_test(I))
        )
    return out
