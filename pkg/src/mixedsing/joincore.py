"""Assembly of the composed-singularity zeta function and its cross-checks.

For f = g(f1, f2) with a two-variable mixed g, the monodromy zeta function
is assembled from

  * the fiber point counts n1, n2 of g on the two axes (computed from the
    lowest radial part of the axis restriction, with an independent numeric
    root-counting oracle run alongside),
  * the graded monodromies of f1 and f2 combined into the commuting pair
    E_{q,1}, E_{q,2} per homology degree q, and
  * the multilink Alexander polynomial evaluated on lambda^{m_j}-scaled
    matrices, with one determinant factor per degree:

    zeta_f = zeta_{f1}(lambda^{n2}) zeta_{f2}(lambda^{n1})
             prod_q det Delta_L(lambda^{m1} E_{q,1}, lambda^{m2} E_{q,2},
                                lambda^{m3} I, ..., lambda^{mr} I)^{(-1)^q}

  with the convention that a vanished count n_j = 0 replaces its prefactor
  by 1.  Everything is exact except the counting oracle, which is a
  deterministic subdivision / interval-exclusion / Newton-polish scheme.

The counting formula a - b + sum(mu_k) is returned only under its stated
hypotheses (no torus factors, or all |delta_k| > 1); the oracle always runs
too, and a disagreement is surfaced as a mismatch report carrying both
numbers rather than silently trusting either.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _grpoly
from .degeneracy import criticality_residual
from .linkalex import MultilinkData, check_axis_multiplicities, reverse_orientation, substitute_matrices
from .mixedpoly import GR_ONE, GR_ZERO, GaussianRational, MixedPolynomial
from .zetalg import (
    GradedMonodromy,
    LaurentPoly,
    ZetaFunction,
    det_poly,
    euler_from_zeta,
    graded_E,
    mat_identity,
    mat_inverse,
    mat_scale,
    mat_to_laurent,
    zeta_from_monodromy,
)

__all__ = [
    "AxisMultiplicityError",
    "OracleBudgetError",
    "LowestFactorization",
    "FactorData",
    "lowest_part_factorization",
    "numeric_count_oracle",
    "CountResult",
    "count_fiber_points",
    "count_univariate",
    "JoinInput",
    "JoinReport",
    "join_zeta",
    "euler_join",
    "chi_without_axes",
    "cross_check",
]


class AxisMultiplicityError(ValueError):
    """Link multiplicities contradict the vanishing pattern of g on the axes."""


class OracleBudgetError(RuntimeError):
    """Subdivision budget ran out with undecided cells left."""

    def __init__(self, lower: int, upper: int, message: str):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


# ---------------------------------------------------------------------------
# lowest-part factorization of a one-variable mixed polynomial


@dataclass(frozen=True)
class FactorData:
    """One factor (z + delta zbar)^multiplicity of the lowest part."""

    delta: object  # GaussianRational when exact, complex otherwise
    multiplicity: int
    exact: bool

    def delta_abs2(self) -> Fraction | float:
        if self.exact:
            return self.delta.abs2()
        return abs(self.delta) ** 2


@dataclass(frozen=True)
class LowestFactorization:
    """g'_{d_low} = c z^a zbar^b prod (z + delta_k zbar)^{mu_k}."""

    c: GaussianRational
    a: int
    b: int
    factors: tuple[FactorData, ...]
    d_low: int
    d_high: int
    exact: bool

    def mu_total(self) -> int:
        return sum(f.multiplicity for f in self.factors)


def _recognize_gaussian(z: complex, max_den: int = 10**6) -> GaussianRational | None:
    cand = GaussianRational(
        Fraction(z.real).limit_denominator(max_den),
        Fraction(z.imag).limit_denominator(max_den),
    )
    return cand if abs(complex(cand) - z) < 1e-9 else None


def lowest_part_factorization(gp: MixedPolynomial) -> LowestFactorization:
    """Factor the lowest radial part of a one-variable mixed polynomial.

    The degree-d_low part is zbar^{d_low} P(t) with t = z/zbar and
    P(t) = sum_{nu+mu=d_low} c_{nu,mu} t^nu; the factorization of P gives
    the multiplicity a of z, the factors (z + delta zbar) from the roots
    -delta of P, and the leftover zbar power b.  Multiplicities come from
    an exact square-free decomposition; root values are exact whenever they
    are Gaussian-rational, floating (flagged) otherwise.
    """
    if gp.is_zero():
        raise ValueError("zero polynomial has no lowest part")
    uni = gp.as_univariate()
    degs = uni.degrees()
    d_low, d_high = degs[0], degs[-1]
    low = uni.radial_part(d_low)
    P = [GR_ZERO] * (d_low + 1)
    for (nu, _mu), cc in low.terms.items():
        P[nu[0]] = P[nu[0]] + cc
    P = _grpoly.strip(P)
    a = 0
    while a < len(P) and P[a].is_zero():
        a += 1
    Q = P[a:]
    c = Q[-1]
    m = len(Q) - 1
    factors: list[FactorData] = []
    exact_all = True
    if m > 0:
        for S, k in _grpoly.yun_squarefree(Q):
            roots = np.roots([complex(x) for x in reversed(S)])
            for root in roots:
                cand = _recognize_gaussian(complex(root))
                if cand is not None and _grpoly.eval_at(S, cand).is_zero():
                    factors.append(FactorData(-cand, k, True))
                else:
                    factors.append(FactorData(-complex(root), k, False))
                    exact_all = False
    factors.sort(key=lambda f: (abs(complex(f.delta).real), abs(complex(f.delta).imag), -f.multiplicity))
    b = d_low - a - m
    # reconstruction check: c t^a prod (t + delta)^mu must reproduce P
    if exact_all:
        poly = [c]
        for f in factors:
            lin = [f.delta, GR_ONE]
            for _ in range(f.multiplicity):
                poly = _grpoly.mul(poly, lin)
        rebuilt = [GR_ZERO] * a + poly
        if _grpoly.strip([x - y for x, y in _grpoly.zip_pad(rebuilt, P)]):
            raise AssertionError("exact lowest-part factorization failed to reconstruct")
    else:
        coeffs = np.array([1.0 + 0j])
        for f in factors:
            lin = np.array([1.0, complex(f.delta)])
            for _ in range(f.multiplicity):
                coeffs = np.convolve(coeffs, lin)
        rebuilt_f = complex(c) * coeffs  # descending in t
        target = np.array([complex(x) for x in reversed(Q)])
        if not np.allclose(rebuilt_f, target, atol=1e-6 * (1 + np.abs(target).max())):
            raise AssertionError("numeric lowest-part factorization failed to reconstruct")
    return LowestFactorization(c, a, b, tuple(factors), d_low, d_high, exact_all)


# ---------------------------------------------------------------------------
# interval arithmetic and the numeric counting oracle


@dataclass(frozen=True)
class _Iv:
    lo: float
    hi: float

    @staticmethod
    def point(x: float) -> "_Iv":
        return _Iv(x, x)

    def __add__(self, o: "_Iv") -> "_Iv":
        return _Iv(self.lo + o.lo, self.hi + o.hi)

    def __sub__(self, o: "_Iv") -> "_Iv":
        return _Iv(self.lo - o.hi, self.hi - o.lo)

    def __neg__(self) -> "_Iv":
        return _Iv(-self.hi, -self.lo)

    def __mul__(self, o: "_Iv") -> "_Iv":
        cands = (
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        )
        return _Iv(min(cands), max(cands))

    def contains_zero(self, slack: float = 0.0) -> bool:
        return self.lo <= slack and self.hi >= -slack


_CBox = tuple[_Iv, _Iv]


def _cmul(a: _CBox, b: _CBox) -> _CBox:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _box_eval(terms, re_iv: _Iv, im_iv: _Iv, target: float) -> _CBox:
    z: _CBox = (re_iv, im_iv)
    zbar: _CBox = (re_iv, -im_iv)
    total: _CBox = (_Iv.point(-target), _Iv.point(0.0))
    for (cre, cim, nu, mu) in terms:
        val: _CBox = (_Iv.point(cre), _Iv.point(cim))
        for _ in range(nu):
            val = _cmul(val, z)
        for _ in range(mu):
            val = _cmul(val, zbar)
        total = (total[0] + val[0], total[1] + val[1])
    return total


def _newton_mixed(gp: MixedPolynomial, z0: complex, target: float) -> tuple[complex, float]:
    dz = gp.wirtinger(1, "holomorphic")
    dzb = gp.wirtinger(1, "antiholomorphic")
    z = z0
    err = np.inf
    for _ in range(60):
        F = complex(gp.evaluate([z])) - target
        err = abs(F)
        if err < 1e-13:
            break
        aj = complex(dz.evaluate([z]))
        bj = complex(dzb.evaluate([z]))
        dx = aj + bj
        dy = 1j * (aj - bj)
        J = np.array([[dx.real, dy.real], [dx.imag, dy.imag]])
        try:
            step = np.linalg.solve(J, np.array([F.real, F.imag]))
        except np.linalg.LinAlgError:
            break
        z = z - complex(step[0], step[1])
    return z, err


def _oracle_roots(
    gp: MixedPolynomial,
    target: float,
    radius: float,
    max_cells: int,
    min_cell: float | None,
) -> tuple[list[complex], int]:
    """Distinct solutions of gp = target in the open disk, plus undecided cells."""
    if gp.is_zero():
        raise ValueError("zero polynomial")
    if target <= 0 or radius <= 0:
        raise ValueError("target and radius must be positive")
    uni = gp.as_univariate()
    terms = [
        (float(c.re), float(c.im), nu[0], mu[0]) for (nu, mu), c in uni.terms.items()
    ]
    floor = min_cell if min_cell is not None else radius / 2**11
    queue: deque[tuple[float, float, float, float]] = deque()
    queue.append((-radius, radius, -radius, radius))
    candidates: list[complex] = []
    processed = 0
    undecided_after_budget = 0
    while queue:
        if processed >= max_cells:
            undecided_after_budget = len(queue)
            break
        processed += 1
        xlo, xhi, ylo, yhi = queue.popleft()
        # skip cells entirely outside the closed disk
        nearest_x = min(abs(xlo), abs(xhi)) if xlo * xhi > 0 else 0.0
        nearest_y = min(abs(ylo), abs(yhi)) if ylo * yhi > 0 else 0.0
        if nearest_x**2 + nearest_y**2 > radius**2:
            continue
        box = _box_eval(terms, _Iv(xlo, xhi), _Iv(ylo, yhi), target)
        if not (box[0].contains_zero() and box[1].contains_zero()):
            continue
        if xhi - xlo <= floor:
            candidates.append(complex((xlo + xhi) / 2, (ylo + yhi) / 2))
            continue
        xm, ym = (xlo + xhi) / 2, (ylo + yhi) / 2
        queue.append((xlo, xm, ylo, ym))
        queue.append((xm, xhi, ylo, ym))
        queue.append((xlo, xm, ym, yhi))
        queue.append((xm, xhi, ym, yhi))
    roots: list[complex] = []
    for z0 in candidates:
        z, err = _newton_mixed(uni, z0, target)
        if err > 1e-10 or abs(z) >= radius:
            continue
        if all(abs(z - r) > 1e-8 for r in roots):
            roots.append(z)
    roots.sort(key=lambda z: (round(z.real, 10), round(z.imag, 10)))
    return roots, undecided_after_budget


def numeric_count_oracle(
    gp: MixedPolynomial,
    target: float = 1e-3,
    radius: float = 0.5,
    max_cells: int = 200_000,
    min_cell: float | None = None,
) -> int:
    """Count distinct solutions of gp(z, zbar) = target in the open disk.

    Deterministic subdivision with interval-arithmetic exclusion and Newton
    polishing (deduplication at 1e-8).  If the cell budget runs out with
    cells still undecided, an OracleBudgetError carries the lower/upper
    bound pair instead of a count.
    """
    roots, undecided = _oracle_roots(gp, target, radius, max_cells, min_cell)
    if undecided:
        raise OracleBudgetError(
            len(roots),
            len(roots) + undecided,
            f"budget exhausted: {len(roots)} confirmed roots, "
            f"{undecided} cells undecided",
        )
    return len(roots)


# ---------------------------------------------------------------------------
# fiber point counts on the axes


@dataclass(frozen=True)
class CountResult:
    """Outcome of an axis fiber-point count.

    method is "formula" (hypotheses hold and the oracle agrees), "oracle"
    (hypotheses fail, the oracle alone is trusted), "mismatch-report"
    (formula and oracle disagree; count carries the oracle value and both
    numbers are surfaced), or "undefined" (the axis is a vanishing
    subspace and carries a nonzero link multiplicity instead).
    """

    count: int | None
    method: str
    formula_value: int | None = None
    oracle_value: int | None = None
    factorization: LowestFactorization | None = None
    notes: tuple[str, ...] = ()


def count_fiber_points(
    g: MixedPolynomial,
    axis: int,
    target: float = 1e-3,
    radius: float = 0.5,
    max_cells: int = 200_000,
) -> CountResult:
    """Number of fiber points of g on the axis {z_axis = 0}.

    n_1 counts points (0, z2), so axis 1 restricts g to the z2 coordinate
    subspace, and symmetrically for axis 2.  The closed-form count
    a - b + sum(mu_k) applies when there are no mixed factors or all
    |delta_k| > 1; the numeric oracle always runs, and disagreements are
    reported rather than resolved silently.
    """
    if g.n != 2:
        raise ValueError("fiber point counting expects two variables")
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    keep = 2 if axis == 1 else 1
    restricted = g.restrict({keep})
    if restricted.is_zero():
        return CountResult(
            None,
            "undefined",
            notes=(
                f"g vanishes identically on the axis z{axis} = 0; "
                "the link carries a nonzero multiplicity for it instead",
            ),
        )
    return count_univariate(restricted.as_univariate(), target, radius, max_cells)


def count_univariate(
    gp: MixedPolynomial,
    target: float = 1e-3,
    radius: float = 0.5,
    max_cells: int = 200_000,
) -> CountResult:
    """Formula-vs-oracle count of gp(z, zbar) = target solutions in the disk."""
    lf = lowest_part_factorization(gp)
    value = lf.a - lf.b + lf.mu_total()
    hypotheses_hold = all(
        (f.delta_abs2() > 1) if f.exact else (abs(complex(f.delta)) > 1 + 1e-9)
        for f in lf.factors
    )
    formula_value = value if (hypotheses_hold and value >= 0) else None
    notes: list[str] = []
    if not hypotheses_hold:
        notes.append("some |delta_k| <= 1: the closed-form count does not apply")
    if value < 0:
        notes.append("a - b + sum(mu) is negative: routed to the oracle")
    roots, undecided = _oracle_roots(gp, target, radius, max_cells, None)
    if undecided:
        raise OracleBudgetError(
            len(roots), len(roots) + undecided, "oracle budget exhausted during count"
        )
    oracle_value = len(roots)
    for z in roots:
        if abs(z) < 1e-12:
            continue
        res = criticality_residual(gp, [z])
        if res < 1e-9:
            notes.append(
                f"fiber point {z:.6g} is nearly critical (residual {res:.2e}); "
                "the regularity hypothesis is suspect"
            )
    if formula_value is None:
        return CountResult(oracle_value, "oracle", None, oracle_value, lf, tuple(notes))
    if formula_value == oracle_value:
        return CountResult(formula_value, "formula", formula_value, oracle_value, lf, tuple(notes))
    notes.append(
        f"formula gives {formula_value} but the oracle counted {oracle_value}; "
        "returning the oracle count"
    )
    return CountResult(
        oracle_value, "mismatch-report", formula_value, oracle_value, lf, tuple(notes)
    )


# ---------------------------------------------------------------------------
# the join assembly


@dataclass(frozen=True)
class JoinInput:
    """Everything the zeta assembly needs.

    counts may override the computed (n1, n2); link multiplicities must be
    consistent with the vanishing pattern of g on the axes.
    """

    g: MixedPolynomial
    mono1: GradedMonodromy
    mono2: GradedMonodromy
    link: MultilinkData
    counts: tuple[int, int] | None = None


@dataclass(frozen=True)
class QFactor:
    q: int
    size: int
    det: LaurentPoly
    exponent: int


@dataclass(frozen=True)
class JoinReport:
    n1: int
    n2: int
    count_method1: str
    count_method2: str
    count1: CountResult | None
    count2: CountResult | None
    prefactor1: ZetaFunction
    prefactor2: ZetaFunction
    q_factors: tuple[QFactor, ...]
    zeta: ZetaFunction
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "n1": self.n1,
            "n2": self.n2,
            "count_methods": [self.count_method1, self.count_method2],
            "prefactor_f1": self.prefactor1.to_text(),
            "prefactor_f2": self.prefactor2.to_text(),
            "q_factors": [
                {
                    "q": f.q,
                    "size": f.size,
                    "det": f.det.to_text(),
                    "exponent": f.exponent,
                }
                for f in self.q_factors
            ],
            "zeta": self.zeta.to_json(),
            "zeta_text": self.zeta.to_text(),
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        lines = [
            f"n1 = {self.n1} ({self.count_method1}), n2 = {self.n2} ({self.count_method2})",
            f"prefactor zeta_f1(lambda^n2) = {self.prefactor1.to_text()}",
            f"prefactor zeta_f2(lambda^n1) = {self.prefactor2.to_text()}",
        ]
        for f in self.q_factors:
            lines.append(
                f"q = {f.q}: det ({f.size}x{f.size}) = {f.det.to_text()} "
                f"[exponent {'+1' if f.exponent > 0 else '-1'}]"
            )
        lines.append(f"zeta_f (up to +-lambda^u) = {self.zeta.to_text()}")
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines)


def _axis_counts(inp: JoinInput, target: float, radius: float, max_cells: int):
    if inp.counts is not None:
        n1, n2 = inp.counts
        return n1, n2, "override", "override", None, None
    results = []
    for axis in (1, 2):
        m = inp.link.multiplicities[axis - 1]
        if m != 0:
            results.append((0, "vanishing-axis", None))
            continue
        cr = count_fiber_points(inp.g, axis, target, radius, max_cells)
        if cr.count is None:
            raise AxisMultiplicityError(
                f"axis {axis} restriction vanishes but the link multiplicity is 0"
            )
        results.append((cr.count, cr.method, cr))
    (n1, meth1, cr1), (n2, meth2, cr2) = results
    return n1, n2, meth1, meth2, cr1, cr2


def join_zeta(
    inp: JoinInput,
    target: float = 1e-3,
    radius: float = 0.5,
    max_cells: int = 200_000,
) -> tuple[ZetaFunction, JoinReport]:
    """The zeta function of the composed singularity, with a full report.

    Raises AxisMultiplicityError when the link multiplicities contradict g,
    and ValueError on dimension or commutation failures.  The result is
    canonical up to +-lambda^u.
    """
    if inp.g.n != 2:
        raise ValueError("the composition takes a two-variable mixed polynomial")
    problems = check_axis_multiplicities(inp.link, inp.g)
    if problems:
        raise AxisMultiplicityError("; ".join(problems))
    notes: list[str] = []
    n1, n2, meth1, meth2, cr1, cr2 = _axis_counts(inp, target, radius, max_cells)
    for cr in (cr1, cr2):
        if cr is not None:
            notes.extend(cr.notes)

    zeta1 = zeta_from_monodromy(inp.mono1)
    zeta2 = zeta_from_monodromy(inp.mono2)
    pre1 = zeta1.substitute_power(n2) if n2 > 0 else ZetaFunction.one()
    pre2 = zeta2.substitute_power(n1) if n1 > 0 else ZetaFunction.one()
    if n2 == 0:
        notes.append("n2 = 0: prefactor zeta_f1(lambda^0) replaced by 1")
    if n1 == 0:
        notes.append("n1 = 0: prefactor zeta_f2(lambda^0) replaced by 1")

    lam_one = LaurentPoly.const(1, 1)
    lam_zero = LaurentPoly.zero(1)
    result = pre1 * pre2
    q_factors: list[QFactor] = []
    qmax = inp.mono1.max_degree() + inp.mono2.max_degree()
    for q in range(0, max(qmax, -1) + 1):
        E1, E2 = graded_E(inp.mono1, inp.mono2, q)
        size = len(E1)
        if size == 0:
            continue
        args = []
        for t in range(inp.link.r):
            m = inp.link.multiplicities[t]
            monomial = LaurentPoly.monomial(1, (m,), 1)
            if t == 0:
                base = E1 if inp.link.orientations[0] > 0 else mat_inverse(E1)
            elif t == 1:
                base = E2 if inp.link.orientations[1] > 0 else mat_inverse(E2)
            else:
                base = mat_identity(size, GR_ONE, GR_ZERO)
            args.append(mat_scale(mat_to_laurent(base), monomial))
        M = substitute_matrices(inp.link.alexander, args)
        Dq = det_poly(M, vars=1)
        if Dq.is_zero():
            raise ValueError(f"degree-{q} determinant vanished; singular input data")
        exponent = 1 if q % 2 == 0 else -1
        q_factors.append(QFactor(q, size, Dq, exponent))
        if exponent > 0:
            result = result * ZetaFunction(Dq, lam_one)
        else:
            result = result * ZetaFunction(lam_one, Dq)
    zeta = result.normalize()
    report = JoinReport(
        n1,
        n2,
        meth1,
        meth2,
        cr1,
        cr2,
        pre1.normalize(),
        pre2.normalize(),
        tuple(q_factors),
        zeta,
        tuple(notes),
    )
    return zeta, report


def euler_join(chi_g_minus_axes: int, chi1: int, chi2: int, n1: int, n2: int) -> int:
    """chi(F_f) = chi(F_g minus axes) chi1 chi2 + n1 chi2 + n2 chi1."""
    return chi_g_minus_axes * chi1 * chi2 + n1 * chi2 + n2 * chi1


def chi_without_axes(chi_g: int, n1: int, n2: int) -> int:
    """Remove the n1 + n2 axis fiber points from chi of the g-fiber."""
    return chi_g - n1 - n2


@dataclass(frozen=True)
class CheckEntry:
    name: str
    passed: bool
    details: str


def cross_check(
    inp: JoinInput,
    chi_g_minus_axes: int | None = None,
    chi_g: int | None = None,
    target: float = 1e-3,
    radius: float = 0.5,
) -> list[CheckEntry]:
    """Consistency report: axis rule, Euler comparison, reversal invariance.

    chi data may be given either as chi(F_g minus axes) directly or as
    chi(F_g) (the axis points are then subtracted using the computed
    counts).  Failures become report entries, not exceptions.
    """
    entries: list[CheckEntry] = []
    problems = check_axis_multiplicities(inp.link, inp.g)
    entries.append(
        CheckEntry(
            "axis-multiplicity-rule",
            not problems,
            "; ".join(problems) if problems else "m_j = 0 exactly on the non-vanishing axes",
        )
    )
    if problems:
        return entries
    zeta, report = join_zeta(inp, target=target, radius=radius)

    if chi_g_minus_axes is None and chi_g is not None:
        chi_g_minus_axes = chi_without_axes(chi_g, report.n1, report.n2)
    if chi_g_minus_axes is not None:
        chi1 = inp.mono1.euler()
        chi2 = inp.mono2.euler()
        expected = euler_join(chi_g_minus_axes, chi1, chi2, report.n1, report.n2)
        actual = euler_from_zeta(zeta)
        entries.append(
            CheckEntry(
                "euler-characteristic",
                expected == actual,
                f"euler_from_zeta = {actual}, euler_join({chi_g_minus_axes}, {chi1}, "
                f"{chi2}, {report.n1}, {report.n2}) = {expected}",
            )
        )

    for j in range(1, inp.link.r + 1):
        reversed_link = reverse_orientation(inp.link, j)
        try:
            zeta_rev, _ = join_zeta(
                JoinInput(inp.g, inp.mono1, inp.mono2, reversed_link, inp.counts),
                target=target,
                radius=radius,
            )
            ok = zeta.eq_up_to_unit(zeta_rev)
            detail = "invariant up to unit" if ok else (
                f"reversal changed the zeta function: {zeta.to_text()} vs {zeta_rev.to_text()}"
            )
        except (ValueError, ArithmeticError) as exc:
            ok = False
            detail = f"reversal failed: {exc}"
        entries.append(CheckEntry(f"reversal-invariance-K{j}", ok, detail))
    return entries
