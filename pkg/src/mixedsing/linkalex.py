"""Multilink data: components, multiplicities and Alexander polynomials.

The links that arise here live in a small 3-sphere around the origin of
C^2: the two coordinate axes K1, K2 plus the components of the curve
g^{-1}(0).  A component's multiplicity is zero exactly when g does not
vanish identically on the corresponding axis.  The Alexander polynomial is
consumed as an input invariant: built-in families cover the configurations
used by the worked examples, anything else is user-supplied JSON.  The tool
never attempts a general splice-diagram computation.

Orientations are tracked relative to the canonical complex orientation;
reversing a component negates its multiplicity and substitutes the inverse
variable into the Alexander polynomial (normalized back to non-negative
exponents, with the monomial unit recorded).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from .mixedpoly import GR_ONE, GR_ZERO, GaussianRational, MixedPolynomial
from .zetalg import (
    LaurentPoly,
    Matrix,
    mat_identity,
    mat_mul,
    mat_pow,
    mat_scale,
    mat_shape,
)

__all__ = [
    "MultilinkData",
    "builtin_alexander",
    "reverse_orientation",
    "substitute_matrices",
    "check_axis_multiplicities",
]


@dataclass(frozen=True)
class MultilinkData:
    """A multilink: labelled components with multiplicities and Delta_L.

    labels[0], labels[1] are always the axes {z1 = 0} and {z2 = 0}.
    orientations holds +1/-1 per component relative to the complex
    orientation; unit records the monomial pulled out by the most recent
    orientation reversal (component index, exponent).
    """

    r: int
    labels: tuple[str, ...]
    multiplicities: tuple[int, ...]
    alexander: LaurentPoly
    orientations: tuple[int, ...] = ()
    unit: tuple[int, int] | None = None

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("need at least one component")
        if len(self.labels) != self.r or len(set(self.labels)) != self.r:
            raise ValueError("labels must be distinct and match the component count")
        if len(self.multiplicities) != self.r:
            raise ValueError("one multiplicity per component required")
        if self.alexander.vars != self.r:
            raise ValueError("Alexander polynomial variable count must equal r")
        if not self.orientations:
            object.__setattr__(self, "orientations", (1,) * self.r)
        elif len(self.orientations) != self.r:
            raise ValueError("one orientation sign per component required")

    def to_json(self) -> dict:
        return {
            "components": [
                {"label": lab, "m": m, "orientation": o}
                for lab, m, o in zip(self.labels, self.multiplicities, self.orientations)
            ],
            "alexander": {
                "vars": self.r,
                "terms": [
                    {"c": _coeff_json(c), "e": list(e)}
                    for e, c in sorted(self.alexander.terms.items())
                ],
            },
        }

    @staticmethod
    def from_json(data: Mapping) -> "MultilinkData":
        comps = data["components"]
        alex = data["alexander"]
        terms = {
            tuple(t["e"]): _coeff_parse(t["c"]) for t in alex["terms"]
        }
        return MultilinkData(
            r=len(comps),
            labels=tuple(c["label"] for c in comps),
            multiplicities=tuple(int(c["m"]) for c in comps),
            alexander=LaurentPoly(int(alex["vars"]), terms),
            orientations=tuple(int(c.get("orientation", 1)) for c in comps),
        )


def _coeff_json(c: GaussianRational):
    if c.im == 0 and c.re.denominator == 1:
        return int(c.re)
    return str(c)


def _coeff_parse(value) -> GaussianRational:
    if isinstance(value, int):
        return GaussianRational.of(value)
    if isinstance(value, str):
        from fractions import Fraction

        return GaussianRational(Fraction(value), Fraction(0))
    raise ValueError(f"unsupported coefficient encoding {value!r}")


# ---------------------------------------------------------------------------
# built-in families


def builtin_alexander(family: str, params: Sequence[int] = ()) -> MultilinkData:
    """Built-in multilink families.

    brieskorn-with-axes(p1, p2): the curve z1^p1 + z2^p2 together with both
    axes; Delta = l1^p2 l2^p1 l3^(p1 p2) - 1, multiplicities (0, 0, 1).

    oka-family(p1, p2, k, l): the axes plus k curve components and l
    conjugated curve components of z1^p1 + a z2^p2 type; Delta =
    (l1^p2 l2^p1 (l3...l_{k+l+2})^(p1 p2) - 1)^(k+l).  Multiplicity
    magnitudes are all 1; orientation signs of the conjugated components
    are deliberately not guessed, apply reverse_orientation explicitly.

    hopf(r) [alias "hopf-3" etc.]: r Hopf fibres, the first two being the
    axes; Delta = (l1...lr - 1)^(r-2), multiplicities (0, 0, 1, ..., 1).
    """
    if family.startswith("hopf-"):
        params = (int(family.split("-", 1)[1]),)
        family = "hopf"
    if family == "brieskorn-with-axes":
        if len(params) != 2 or min(params) < 2:
            raise ValueError("brieskorn-with-axes expects p1, p2 >= 2")
        p1, p2 = params
        delta = LaurentPoly(
            3, {(p2, p1, p1 * p2): GR_ONE, (0, 0, 0): -GR_ONE}
        )
        return MultilinkData(
            3,
            ("axis-z1", "axis-z2", "brieskorn-curve"),
            (0, 0, 1),
            delta,
        )
    if family == "oka-family":
        if len(params) != 4:
            raise ValueError("oka-family expects p1, p2, k, l")
        p1, p2, k, l = params
        if p1 < 1 or p2 < 1 or k < 0 or l < 0 or k + l < 1:
            raise ValueError("oka-family needs p1, p2 >= 1 and k + l >= 1")
        r = k + l + 2
        exps = [p2, p1] + [p1 * p2] * (k + l)
        base = LaurentPoly(r, {tuple(exps): GR_ONE, (0,) * r: -GR_ONE})
        delta = base ** (k + l)
        labels = (
            ("axis-z1", "axis-z2")
            + tuple(f"curve-{i + 1}" for i in range(k))
            + tuple(f"conj-curve-{i + 1}" for i in range(l))
        )
        return MultilinkData(r, labels, (1, 1) + (1,) * (k + l), delta)
    if family == "hopf":
        if len(params) != 1 or params[0] < 3:
            raise ValueError("hopf expects a component count r >= 3")
        r = params[0]
        delta = LaurentPoly(r, {(1,) * r: GR_ONE, (0,) * r: -GR_ONE}) ** (r - 2)
        labels = ("axis-z1", "axis-z2") + tuple(
            f"fibre-{i + 1}" for i in range(r - 2)
        )
        return MultilinkData(r, labels, (0, 0) + (1,) * (r - 2), delta)
    raise ValueError(f"unknown link family {family!r}")


def reverse_orientation(L: MultilinkData, j: int) -> MultilinkData:
    """Reverse the orientation of component j (1-based).

    The multiplicity of the reversed component is negated and the Alexander
    polynomial gets lambda_j -> lambda_j^{-1}, shifted back to non-negative
    exponents; the pulled-out monomial unit lambda_j^{u'} is recorded.
    """
    if not 1 <= j <= L.r:
        raise IndexError(f"component index {j} out of range [1, {L.r}]")
    substituted = L.alexander.substitute_power(j - 1, -1)
    low = substituted.min_exponents()[j - 1]
    shift = [0] * L.r
    shift[j - 1] = -low
    normalized = substituted.shift(tuple(shift))
    mults = list(L.multiplicities)
    mults[j - 1] = -mults[j - 1]
    orients = list(L.orientations)
    orients[j - 1] = -orients[j - 1]
    return replace(
        L,
        multiplicities=tuple(mults),
        alexander=normalized,
        orientations=tuple(orients),
        unit=(j, low),
    )


# ---------------------------------------------------------------------------
# matrix substitution into the Alexander polynomial


def substitute_matrices(delta: LaurentPoly, args: Sequence[Matrix]) -> Matrix:
    """Evaluate a multivariate Laurent polynomial on commuting square matrices.

    The polynomial is first normalized to non-negative exponents (a monomial
    unit, harmless under up-to-unit comparison); the constant term
    contributes a multiple of the identity.  Arguments must be square, of
    equal size and pairwise commuting; the matrices live over univariate
    LaurentPoly entries.
    """
    if delta.vars != len(args):
        raise ValueError("argument count does not match the variable count")
    sizes = {mat_shape(a) for a in args}
    if len(sizes) > 1:
        raise ValueError("substitution arguments must share one size")
    (n, m) = sizes.pop() if sizes else (0, 0)
    if n != m:
        raise ValueError("substitution arguments must be square")
    if n == 0:
        return ()
    sample = args[0][0][0]
    if not isinstance(sample, LaurentPoly):
        raise ValueError("substitution arguments must have LaurentPoly entries")
    inner_vars = sample.vars
    zero = LaurentPoly.zero(inner_vars)
    one = LaurentPoly.const(inner_vars, 1)
    for a_idx in range(len(args)):
        for b_idx in range(a_idx + 1, len(args)):
            ab = mat_mul(args[a_idx], args[b_idx], zero)
            ba = mat_mul(args[b_idx], args[a_idx], zero)
            if ab != ba:
                raise ValueError(
                    f"substitution arguments {a_idx + 1} and {b_idx + 1} do not commute"
                )
    poly, _unit = delta.normalized_nonnegative()
    eye = mat_identity(n, one, zero)
    total = mat_scale(eye, zero)
    for e, c in sorted(poly.terms.items()):
        piece = mat_scale(eye, LaurentPoly.const(inner_vars, c))
        for t, k in enumerate(e):
            if k < 0:
                raise ValueError("negative exponent after normalization")
            if k:
                piece = mat_mul(piece, mat_pow(args[t], k, one, zero), zero)
        total = tuple(
            tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(total, piece)
        )
    return total


def check_axis_multiplicities(L: MultilinkData, g: MixedPolynomial) -> list[str]:
    """Violations of the rule m_j = 0 iff g does not vanish on the axis K_j.

    K1 is the axis {z1 = 0}, i.e. the subspace spanned by z2, so m_1 pairs
    with the restriction of g to C^{2} and vice versa.
    """
    if g.n != 2:
        raise ValueError("axis multiplicity rule applies to two variables")
    problems = []
    for j in (1, 2):
        other = 2 if j == 1 else 1
        vanishes = g.restrict({other}).is_zero()
        m = L.multiplicities[j - 1]
        if vanishes and m == 0:
            problems.append(
                f"g vanishes on the axis z{j} = 0 but m_{j} = 0"
            )
        if not vanishes and m != 0:
            problems.append(
                f"g does not vanish on the axis z{j} = 0 but m_{j} = {m}"
            )
    return problems
