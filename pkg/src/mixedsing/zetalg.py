"""Exact Laurent-polynomial and zeta-function arithmetic.

A LaurentPoly in r variables maps integer exponent vectors (negatives
allowed) to nonzero Gaussian-rational coefficients.  A ZetaFunction is a
ratio of univariate Laurent polynomials, compared only up to a unit
+-lambda^u: the normal form shifts both parts to minimal exponent 0,
cancels their polynomial gcd, makes the denominator a primitive integer
polynomial and gives the numerator a positive lowest coefficient.

Matrices are tuples of tuples over either GaussianRational (monodromy
blocks) or LaurentPoly (determinant work).  Everything here is exact; no
floating point enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Mapping, Sequence

from .mixedpoly import GR_ONE, GR_ZERO, GaussianRational

__all__ = [
    "LaurentPoly",
    "ZetaFunction",
    "GradedMonodromy",
    "zeta_from_monodromy",
    "euler_from_zeta",
    "tensor",
    "graded_E",
    "cyclic_block",
    "det_poly",
]

ExpVec = tuple[int, ...]


class LaurentPoly:
    """Canonical sparse Laurent polynomial over the Gaussian rationals."""

    __slots__ = ("vars", "_terms")

    def __init__(self, vars: int, terms: Mapping[ExpVec, GaussianRational] | None = None):
        if vars < 1:
            raise ValueError("need at least one variable")
        clean: dict[ExpVec, GaussianRational] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != vars:
                raise ValueError("exponent vector length does not match vars")
            c = GaussianRational.of(c)
            if c.is_zero():
                continue
            prev = clean.get(e)
            c = c if prev is None else prev + c
            if c.is_zero():
                clean.pop(e, None)
            else:
                clean[e] = c
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("LaurentPoly is immutable")

    # constructors ---------------------------------------------------------

    @staticmethod
    def const(vars: int, c) -> "LaurentPoly":
        return LaurentPoly(vars, {(0,) * vars: GaussianRational.of(c)})

    @staticmethod
    def zero(vars: int) -> "LaurentPoly":
        return LaurentPoly(vars)

    @staticmethod
    def variable(vars: int, idx: int, power: int = 1) -> "LaurentPoly":
        """The monomial x_idx^power, idx 0-based."""
        if not 0 <= idx < vars:
            raise ValueError("variable index out of range")
        e = [0] * vars
        e[idx] = power
        return LaurentPoly(vars, {tuple(e): GR_ONE})

    @staticmethod
    def monomial(vars: int, exps: Sequence[int], c=1) -> "LaurentPoly":
        return LaurentPoly(vars, {tuple(exps): GaussianRational.of(c)})

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict[ExpVec, GaussianRational]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exponents(self) -> ExpVec:
        if not self._terms:
            return (0,) * self.vars
        return tuple(min(e[i] for e in self._terms) for i in range(self.vars))

    def max_exponents(self) -> ExpVec:
        if not self._terms:
            return (0,) * self.vars
        return tuple(max(e[i] for e in self._terms) for i in range(self.vars))

    def coeff(self, exps: Sequence[int]) -> GaussianRational:
        return self._terms.get(tuple(exps), GR_ZERO)

    # univariate conveniences
    def degree(self) -> int:
        if self.vars != 1:
            raise ValueError("degree() is univariate only")
        if not self._terms:
            return 0
        return max(e[0] for e in self._terms)

    def low(self) -> int:
        if self.vars != 1:
            raise ValueError("low() is univariate only")
        if not self._terms:
            return 0
        return min(e[0] for e in self._terms)

    # ring operations --------------------------------------------------------

    def _require_same(self, other: "LaurentPoly") -> None:
        if self.vars != other.vars:
            raise ValueError("variable counts differ")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._require_same(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, GR_ZERO) + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(self.vars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(GaussianRational.of(other))
        self._require_same(other)
        out: dict[ExpVec, GaussianRational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, GR_ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(self.vars, out)

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        c = GaussianRational.of(c)
        if c.is_zero():
            return LaurentPoly(self.vars)
        return LaurentPoly(self.vars, {e: v * c for e, v in self._terms.items()})

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            ((e, c),) = self._terms.items()
            inv = GR_ONE / c
            out = LaurentPoly.const(self.vars, GR_ONE)
            piece = LaurentPoly(self.vars, {tuple(-x for x in e): inv})
            for _ in range(-k):
                out = out * piece
            return out
        out = LaurentPoly.const(self.vars, GR_ONE)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        exps = tuple(exps)
        return LaurentPoly(
            self.vars,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()},
        )

    def substitute_power(self, var: int, k: int) -> "LaurentPoly":
        """Map x_var -> x_var^k for a nonzero integer k (var 0-based)."""
        if k == 0:
            raise ValueError("substitution exponent k = 0 is not allowed")
        if not 0 <= var < self.vars:
            raise ValueError("variable index out of range")
        out: dict[ExpVec, GaussianRational] = {}
        for e, c in self._terms.items():
            ne = list(e)
            ne[var] *= k
            out[tuple(ne)] = c
        return LaurentPoly(self.vars, out)

    def normalized_nonnegative(self) -> tuple["LaurentPoly", ExpVec]:
        """Shift so every variable has minimal exponent 0.

        Returns (shifted, shift_vector) with self = shifted * x^shift_vector.
        """
        m = self.min_exponents()
        return self.shift(tuple(-x for x in m)), m

    def evaluate(self, values: Sequence[GaussianRational]) -> GaussianRational:
        """Exact evaluation at nonzero Gaussian-rational scalars."""
        if len(values) != self.vars:
            raise ValueError("value count does not match vars")
        total = GR_ZERO
        for e, c in self._terms.items():
            val = c
            for v, k in zip(values, e):
                v = GaussianRational.of(v)
                if k < 0:
                    v = GR_ONE / v
                    k = -k
                for _ in range(k):
                    val = val * v
            total = total + val
        return total

    # exact division ---------------------------------------------------------

    def exact_divide(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; raises ArithmeticError otherwise."""
        self._require_same(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly(self.vars)
        num, num_shift = self.normalized_nonnegative()
        den, den_shift = other.normalized_nonnegative()
        lead_d = max(den._terms)  # lex order
        cd = den._terms[lead_d]
        q: dict[ExpVec, GaussianRational] = {}
        r = num
        while not r.is_zero():
            lead_r = max(r._terms)
            diff = tuple(a - b for a, b in zip(lead_r, lead_d))
            if any(x < 0 for x in diff):
                raise ArithmeticError("polynomials do not divide exactly")
            c = r._terms[lead_r] / cd
            q[diff] = q.get(diff, GR_ZERO) + c
            r = r - den * LaurentPoly(self.vars, {diff: c})
        shift = tuple(a - b for a, b in zip(num_shift, den_shift))
        return LaurentPoly(self.vars, q).shift(shift)

    # comparisons and output --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.vars == other.vars
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self._terms.items())))

    def eq_up_to_unit(self, other: "LaurentPoly") -> bool:
        """Equality up to +-(monomial) in the Laurent ring."""
        self._require_same(other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        a, _ = self.normalized_nonnegative()
        b, _ = other.normalized_nonnegative()
        if set(a._terms) != set(b._terms):
            return False
        ratios = {(c / b._terms[e]) for e, c in a._terms.items()}
        if len(ratios) != 1:
            return False
        (ratio,) = ratios
        return ratio == GR_ONE or ratio == -GR_ONE

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = ["lambda"] if self.vars == 1 else [f"l{i+1}" for i in range(self.vars)]
        if self.is_zero():
            return "0"
        pieces = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k != 0:
                    factors.append(f"{name}^{k}")
            body = "*".join(factors)
            if not body:
                pieces.append(str(c))
            elif c == GR_ONE:
                pieces.append(body)
            elif c == -GR_ONE:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{c}*{body}")
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()})"


# ---------------------------------------------------------------------------
# univariate gcd over the integers (primitive pseudo-remainder sequence)


def _univar_to_int_list(p: LaurentPoly) -> tuple[list[int], int]:
    """Coefficient list (ascending) of a univariate poly scaled to integers.

    Returns (coeffs, scale_den) where p * scale_den has the integer
    coefficients in coeffs.  Requires real rational coefficients.
    """
    if p.vars != 1:
        raise ValueError("univariate only")
    poly, shift = p.normalized_nonnegative()
    if shift[0] != 0:
        raise ValueError("expected non-negative exponents")
    deg = poly.degree() if poly else 0
    fracs = []
    for k in range(deg + 1):
        c = poly.coeff((k,))
        if c.im != 0:
            raise ValueError("gcd path expects real rational coefficients")
        fracs.append(c.re)
    if not any(fracs):
        return [0], 1
    den = 1
    for f in fracs:
        den = den * f.denominator // int_gcd(den, f.denominator)
    return [int(f * den) for f in fracs], den


def _int_content(c: list[int]) -> int:
    g = 0
    for x in c:
        g = int_gcd(g, abs(x))
    return g or 1


def _poly_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (integer coefficient lists, ascending)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db or not a:
            break
        da, la = len(a) - 1, a[-1]
        a = [x * lb for x in a]
        shift = da - db
        for i, bi in enumerate(b):
            a[i + shift] -= la * bi
        while a and a[-1] == 0:
            a.pop()
    return a or [0]


def _int_poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of integer polynomials via a primitive PRS."""

    def strip(p: list[int]) -> list[int]:
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    def primitive(p: list[int]) -> list[int]:
        c = _int_content(p)
        return [x // c for x in p]

    a, b = strip(a), strip(b)
    if not a:
        return primitive(b) if b else [1]
    if not b:
        return primitive(a)
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = strip(_poly_prem(a, b))
        if not r:
            g = primitive(b)
            if g[-1] < 0:
                g = [-x for x in g]
            return g
        a, b = b, primitive(r)


def univariate_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Primitive gcd of two univariate Laurent polynomials (monomials split off)."""
    if p.is_zero():
        return q.normalized_nonnegative()[0]
    if q.is_zero():
        return p.normalized_nonnegative()[0]
    pa, _ = p.normalized_nonnegative()
    qa, _ = q.normalized_nonnegative()
    ca, _ = _univar_to_int_list(pa)
    cb, _ = _univar_to_int_list(qa)
    g = _int_poly_gcd(ca, cb)
    return LaurentPoly(1, {(k,): GaussianRational.of(c) for k, c in enumerate(g)})


# ---------------------------------------------------------------------------
# zeta functions


class ZetaFunction:
    """A ratio num/den of univariate Laurent polynomials, up to +-lambda^u."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.const(1, 1)
        if num.vars != 1 or den.vars != 1:
            raise ValueError("zeta functions are univariate")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in zeta function")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("ZetaFunction is immutable")

    @staticmethod
    def one() -> "ZetaFunction":
        return ZetaFunction(LaurentPoly.const(1, 1))

    def __mul__(self, other: "ZetaFunction") -> "ZetaFunction":
        return ZetaFunction(self.num * other.num, self.den * other.den)

    def inverse(self) -> "ZetaFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("cannot invert zero")
        return ZetaFunction(self.den, self.num)

    def __pow__(self, k: int) -> "ZetaFunction":
        if k < 0:
            return self.inverse() ** (-k)
        out = ZetaFunction.one()
        for _ in range(k):
            out = out * self
        return out

    def substitute_power(self, k: int) -> "ZetaFunction":
        """zeta(lambda^k) for nonzero k."""
        return ZetaFunction(
            self.num.substitute_power(0, k), self.den.substitute_power(0, k)
        )

    def normalize(self) -> "ZetaFunction":
        """Canonical representative of the up-to-unit class."""
        num, _ = self.num.normalized_nonnegative()
        den, _ = self.den.normalized_nonnegative()
        if num.is_zero():
            return ZetaFunction(LaurentPoly.zero(1), LaurentPoly.const(1, 1))
        g = univariate_gcd(num, den)
        if g.degree() > 0 or not g.coeff((0,)) == GR_ONE:
            num = num.exact_divide(g)
            den = den.exact_divide(g)
            num, _ = num.normalized_nonnegative()
            den, _ = den.normalized_nonnegative()
        # common rational scale making den primitive integer, low coeff > 0
        dc, dden = _univar_to_int_list(den)
        content = Fraction(_int_content(dc), dden)
        lowest_den = den.coeff((den.low(),))
        if lowest_den.re < 0:
            content = -content
        scale = GaussianRational.of(1 / content)
        num = num.scale(scale)
        den = den.scale(scale)
        # the +- unit: make the lowest numerator coefficient positive
        lown = num.coeff((num.low(),))
        if lown.re < 0 or (lown.re == 0 and lown.im < 0):
            num = -num
        return ZetaFunction(num, den)

    def eq_up_to_unit(self, other: "ZetaFunction") -> bool:
        a, b = self.normalize(), other.normalize()
        return a.num == b.num and a.den == b.den

    def to_text(self) -> str:
        z = self.normalize()
        if z.den.is_constant() and z.den.coeff((0,)) == GR_ONE:
            return z.num.to_text()
        return f"({z.num.to_text()}) / ({z.den.to_text()})"

    def __repr__(self) -> str:
        return f"ZetaFunction({self.to_text()})"

    def to_json(self) -> dict:
        z = self.normalize()

        def poly_json(p: LaurentPoly) -> dict:
            return {
                "terms": [
                    [e[0], _coeff_json(c)] for e, c in sorted(p.terms.items())
                ]
            }

        return {"num": poly_json(z.num), "den": poly_json(z.den)}


def _coeff_json(c: GaussianRational):
    if c.im == 0 and c.re.denominator == 1:
        return int(c.re)
    return str(c)


def euler_from_zeta(z: ZetaFunction) -> int:
    """Euler characteristic -(deg num - deg den) of the normalized zeta."""
    n = z.normalize()
    if n.num.is_zero():
        raise ValueError("zero zeta function has no Euler characteristic")
    return -(n.num.degree() - n.den.degree())


# ---------------------------------------------------------------------------
# exact matrices (tuples of tuples)

Matrix = tuple[tuple, ...]


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    """Coerce nested int/Fraction entries to GaussianRational."""
    out = tuple(tuple(GaussianRational.of(x) if not isinstance(x, (GaussianRational, LaurentPoly)) else x for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def mat_shape(A: Matrix) -> tuple[int, int]:
    return (len(A), len(A[0]) if A else 0)


def mat_identity(n: int, one, zero) -> Matrix:
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_mul(A: Matrix, B: Matrix, zero) -> Matrix:
    n, k = mat_shape(A)
    k2, m = mat_shape(B)
    if k != k2:
        raise ValueError("matrix dimension mismatch")
    Bt = list(zip(*B)) if B else []
    out = []
    for row in A:
        new_row = []
        for col in Bt:
            s = zero
            for a, b in zip(row, col):
                s = s + a * b
            new_row.append(s)
        out.append(tuple(new_row))
    return tuple(out)


def mat_scale(A: Matrix, s) -> Matrix:
    return tuple(tuple(x * s for x in row) for row in A)


def mat_pow(A: Matrix, k: int, one, zero) -> Matrix:
    n, m = mat_shape(A)
    if n != m:
        raise ValueError("matrix power needs a square matrix")
    out = mat_identity(n, one, zero)
    base = A
    if k < 0:
        raise ValueError("negative matrix power not supported here")
    while k:
        if k & 1:
            out = mat_mul(out, base, zero)
        base = mat_mul(base, base, zero)
        k >>= 1
    return out


def mat_inverse(A: Matrix) -> Matrix:
    """Inverse over the Gaussian rationals (Gauss-Jordan)."""
    n, m = mat_shape(A)
    if n != m:
        raise ValueError("inverse needs a square matrix")
    aug = [list(row) + [GR_ONE if i == j else GR_ZERO for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if pivot is None:
            raise ArithmeticError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = GR_ONE / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_det_field(A: Matrix) -> GaussianRational:
    """Exact determinant over the Gaussian rationals."""
    n, m = mat_shape(A)
    if n != m:
        raise ValueError("determinant needs a square matrix")
    rows = [list(r) for r in A]
    det = GR_ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if not rows[r][col].is_zero()), None)
        if pivot is None:
            return GR_ZERO
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = det * rows[col][col]
        inv = GR_ONE / rows[col][col]
        for r in range(col + 1, n):
            if not rows[r][col].is_zero():
                f = rows[r][col] * inv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det


def mat_rank_field(A: Matrix) -> int:
    n, m = mat_shape(A)
    rows = [list(r) for r in A]
    rank = 0
    row = 0
    for col in range(m):
        pivot = next((r for r in range(row, n) if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = GR_ONE / rows[row][col]
        for r in range(row + 1, n):
            if not rows[r][col].is_zero():
                f = rows[r][col] * inv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[row])]
        row += 1
        rank += 1
        if row == n:
            break
    return rank


def kron(A: Matrix, B: Matrix, zero) -> Matrix:
    """Kronecker (tensor) product."""
    na, ma = mat_shape(A)
    nb, mb = mat_shape(B)
    out = []
    for i in range(na * nb):
        row = []
        for j in range(ma * mb):
            row.append(A[i // nb][j // mb] * B[i % nb][j % mb])
        out.append(tuple(row))
    return tuple(out)


def block_diag(blocks: Sequence[Matrix], zero) -> Matrix:
    sizes = [mat_shape(b) for b in blocks]
    total_r = sum(s[0] for s in sizes)
    total_c = sum(s[1] for s in sizes)
    out = [[zero] * total_c for _ in range(total_r)]
    r0 = c0 = 0
    for b, (rr, cc) in zip(blocks, sizes):
        for i in range(rr):
            for j in range(cc):
                out[r0 + i][c0 + j] = b[i][j]
        r0 += rr
        c0 += cc
    return tuple(tuple(row) for row in out)


def mat_to_laurent(A: Matrix, vars: int = 1) -> Matrix:
    """Lift a GaussianRational matrix to constant Laurent entries."""
    return tuple(
        tuple(
            x if isinstance(x, LaurentPoly) else LaurentPoly.const(vars, x)
            for x in row
        )
        for row in A
    )


# ---------------------------------------------------------------------------
# graded monodromy


@dataclass(frozen=True)
class GradedMonodromy:
    """Integer monodromy matrices indexed by homology degree.

    Missing degrees are zero-dimensional and contribute nothing.
    """

    blocks: tuple[tuple[int, Matrix], ...]

    @staticmethod
    def of(data: Mapping[int, Iterable[Iterable]]) -> "GradedMonodromy":
        blocks = []
        for q in sorted(data):
            M = as_matrix(data[q])
            n, m = mat_shape(M)
            if n != m:
                raise ValueError(f"block in degree {q} is not square")
            blocks.append((q, M))
        degrees = [q for q, _ in blocks]
        if len(set(degrees)) != len(degrees):
            raise ValueError("duplicate degrees")
        return GradedMonodromy(tuple(blocks))

    def block(self, q: int) -> Matrix | None:
        for deg, M in self.blocks:
            if deg == q:
                return M
        return None

    def dim(self, q: int) -> int:
        M = self.block(q)
        return len(M) if M is not None else 0

    def degrees(self) -> list[int]:
        return [q for q, _ in self.blocks]

    def max_degree(self) -> int:
        return max((q for q, _ in self.blocks), default=-1)

    def euler(self) -> int:
        """sum (-1)^k dim H_k."""
        return sum((-1) ** q * self.dim(q) for q, _ in self.blocks)

    def to_json(self) -> dict:
        return {
            "blocks": [
                {
                    "q": q,
                    "matrix": [[_coeff_json(x) for x in row] for row in M],
                }
                for q, M in self.blocks
            ]
        }

    @staticmethod
    def from_json(data: Mapping) -> "GradedMonodromy":
        return GradedMonodromy.of(
            {int(b["q"]): b["matrix"] for b in data["blocks"]}
        )


def zeta_from_monodromy(M: GradedMonodromy) -> ZetaFunction:
    """prod_k det(I - lambda H_k)^{(-1)^{k+1}}, normalized."""
    num = LaurentPoly.const(1, 1)
    den = LaurentPoly.const(1, 1)
    lam = LaurentPoly.variable(1, 0)
    for q, H in M.blocks:
        if mat_det_field(H).is_zero():
            raise ArithmeticError(f"monodromy block in degree {q} is singular")
        n = len(H)
        char = det_poly(
            mat_sub(
                mat_identity(n, LaurentPoly.const(1, 1), LaurentPoly.zero(1)),
                mat_scale(mat_to_laurent(H), lam),
            ),
            vars=1,
        )
        if (q + 1) % 2 == 0:
            num = num * char
        else:
            den = den * char
    return ZetaFunction(num, den).normalize()


def tensor(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product of monodromy blocks."""
    return kron(as_matrix(A), as_matrix(B), GR_ZERO)


def graded_E(M1: GradedMonodromy, M2: GradedMonodromy, q: int) -> tuple[Matrix, Matrix]:
    """The commuting pair E_{q,1}, E_{q,2} acting on degree q of the product.

    Block-diagonal over (i, j) with i + j = q, ascending i; the first factor
    twists by H_{1,i}, the second by H_{2,j}.  Degrees missing from either
    grading contribute nothing; an empty degree yields 0x0 matrices.
    """
    blocks1 = []
    blocks2 = []
    for i in range(q + 1):
        j = q - i
        H1 = M1.block(i)
        H2 = M2.block(j)
        if H1 is None or H2 is None:
            continue
        d1, d2 = len(H1), len(H2)
        blocks1.append(kron(H1, mat_identity(d2, GR_ONE, GR_ZERO), GR_ZERO))
        blocks2.append(kron(mat_identity(d1, GR_ONE, GR_ZERO), H2, GR_ZERO))
    E1 = block_diag(blocks1, GR_ZERO) if blocks1 else ()
    E2 = block_diag(blocks2, GR_ZERO) if blocks2 else ()
    return E1, E2


def cyclic_block(H: Matrix, n: int, convention: str = "one-twist") -> Matrix:
    """n x n block circulant modelling a cyclic orbit of n copies.

    one-twist places H in the top-right slot and identities below the
    diagonal, so det(I - lambda Htilde) = det(I - lambda^n H).  all-twist
    places H in every nonzero slot.
    """
    if n < 1:
        raise ValueError("need n >= 1 copies")
    if convention not in ("one-twist", "all-twist"):
        raise ValueError("convention must be 'one-twist' or 'all-twist'")
    H = as_matrix(H)
    m = len(H)
    if n == 1:
        return H
    eye = mat_identity(m, GR_ONE, GR_ZERO)
    zero_block = tuple(tuple(GR_ZERO for _ in range(m)) for _ in range(m))
    sub = H if convention == "all-twist" else eye
    rows = []
    for r in range(n):
        row_blocks = []
        for c in range(n):
            if r == 0 and c == n - 1:
                row_blocks.append(H)
            elif r >= 1 and c == r - 1:
                row_blocks.append(sub)
            else:
                row_blocks.append(zero_block)
        rows.append(row_blocks)
    return tuple(
        tuple(rows[r][cb][i][j] for cb in range(n) for j in range(m))
        for r in range(n)
        for i in range(m)
    )


# ---------------------------------------------------------------------------
# fraction-free determinant over Laurent polynomials


def det_poly(M: Matrix, vars: int = 1) -> LaurentPoly:
    """Exact determinant of a square matrix of LaurentPoly entries.

    Each row is first cleared of its monomial denominator, then a
    fraction-free Bareiss elimination runs over the polynomial ring; the
    cleared monomials multiply back in at the end.  The 0x0 matrix has
    determinant 1.
    """
    n = len(M)
    if n == 0:
        return LaurentPoly.const(vars, 1)
    if any(len(row) != n for row in M):
        raise ValueError("determinant needs a square matrix")
    vars = M[0][0].vars
    one = LaurentPoly.const(vars, 1)

    rows: list[list[LaurentPoly]] = []
    back_shift = [0] * vars
    for row in M:
        mins = None
        for entry in row:
            if entry.is_zero():
                continue
            m = entry.min_exponents()
            mins = m if mins is None else tuple(min(a, b) for a, b in zip(mins, m))
        if mins is None:
            return LaurentPoly.zero(vars)
        # row * x^{-mins} has non-negative exponents; remember the factor
        rows.append([e.shift(tuple(-x for x in mins)) for e in row])
        back_shift = [a + b for a, b in zip(back_shift, mins)]

    sign = 1
    prev = one
    for k in range(n - 1):
        pivot = next((r for r in range(k, n) if not rows[r][k].is_zero()), None)
        if pivot is None:
            return LaurentPoly.zero(vars)
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            new_row = []
            for j in range(n):
                val = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]
                new_row.append(val.exact_divide(prev))
            rows[i] = new_row
        prev = rows[k][k]
    det = rows[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det.shift(tuple(back_shift))
