"""Exact mixed polynomials g(z, zbar) with Gaussian-rational coefficients.

A mixed polynomial in n complex variables is a finite sum

    g(z, zbar) = sum c[nu, mu] * z^nu * zbar^mu

where nu and mu are exponent vectors of length n and the coefficients are
Gaussian rationals (exact complex numbers with rational real and imaginary
parts).  The canonical representation is a dict mapping (nu, mu) pairs to
nonzero coefficients; the zero polynomial is the empty dict.  Everything in
this module is exact.  Numeric evaluation at floating points is an
explicitly separate code path (``evaluate`` with a complex argument).

Expression grammar accepted by :func:`parse` (whitespace insignificant)::

    expr    := ('+'|'-')? term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := atom ('^' nat)?
    atom    := literal | 'z' nat | 'bar(' 'z' nat ')' | '|' 'z' nat '|' '^2'
             | '(' expr ')'
    literal := rational | rational 'i' | 'i'

``|zj|^2`` is sugar for ``zj*bar(zj)``.  Division is rejected except inside
rational literals such as ``3/4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "GaussianRational",
    "MixedMonomial",
    "MixedPolynomial",
    "ParseError",
    "parse",
    "format_poly",
]

# Exponents are regular Python ints but parsing refuses anything this large;
# a runaway `^` would otherwise silently build astronomically long term maps.
MAX_EXPONENT = 10**6

Exponents = tuple[int, ...]
TermKey = tuple[Exponents, Exponents]


@dataclass(frozen=True)
class GaussianRational:
    """An exact complex number re + im*i with rational re, im."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(value: Union[int, Fraction, "GaussianRational"]) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(Fraction(value), Fraction(0))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other) -> "GaussianRational":
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        other = GaussianRational.of(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        other = GaussianRational.of(other)
        d = other.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        conj = other.conjugate()
        num = self * conj
        return GaussianRational(num.re / d, num.im / d)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|self|^2, exact."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i" if self.im != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imtxt = "i" if mag == 1 else f"{mag}i"
        return f"({self.re}{sign}{imtxt})"


GR_ZERO = GaussianRational()
GR_ONE = GaussianRational(Fraction(1), Fraction(0))
GR_I = GaussianRational(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class MixedMonomial:
    """One term c * z^nu * zbar^mu.  coeff is nonzero when stored."""

    coeff: GaussianRational
    nu: Exponents
    mu: Exponents

    def __post_init__(self) -> None:
        if len(self.nu) != len(self.mu):
            raise ValueError("nu and mu must have the same length")

    @property
    def n(self) -> int:
        return len(self.nu)


class MixedPolynomial:
    """Canonical finite sum of mixed monomials in n variables.

    Instances are immutable; all operations return new values.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[TermKey, GaussianRational] | None = None):
        if n < 1:
            raise ValueError("need at least one variable")
        clean: dict[TermKey, GaussianRational] = {}
        for (nu, mu), c in (terms or {}).items():
            nu, mu = tuple(nu), tuple(mu)
            if len(nu) != n or len(mu) != n:
                raise ValueError("exponent vector length does not match n")
            if any(e < 0 for e in nu + mu):
                raise ValueError("negative exponent in mixed polynomial")
            c = GaussianRational.of(c)
            if not c.is_zero():
                prev = clean.get((nu, mu))
                c = c if prev is None else prev + c
                if c.is_zero():
                    clean.pop((nu, mu), None)
                else:
                    clean[(nu, mu)] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("MixedPolynomial is immutable")

    @property
    def terms(self) -> dict[TermKey, GaussianRational]:
        return dict(self._terms)

    def monomials(self) -> Iterator[MixedMonomial]:
        for (nu, mu), c in sorted(self._terms.items()):
            yield MixedMonomial(c, nu, mu)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MixedPolynomial)
            and self.n == other.n
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"MixedPolynomial({self.n}, {format_poly(self)!r})"

    # ring operations -----------------------------------------------------

    def _require_same_n(self, other: "MixedPolynomial") -> None:
        if self.n != other.n:
            raise ValueError("variable counts differ")

    def __add__(self, other: "MixedPolynomial") -> "MixedPolynomial":
        self._require_same_n(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, GR_ZERO) + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return MixedPolynomial(self.n, out)

    def __neg__(self) -> "MixedPolynomial":
        return MixedPolynomial(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "MixedPolynomial") -> "MixedPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["MixedPolynomial", GaussianRational, int, Fraction]):
        if not isinstance(other, MixedPolynomial):
            return self.scale(GaussianRational.of(other))
        self._require_same_n(other)
        out: dict[TermKey, GaussianRational] = {}
        for (nu1, mu1), c1 in self._terms.items():
            for (nu2, mu2), c2 in other._terms.items():
                key = (
                    tuple(a + b for a, b in zip(nu1, nu2)),
                    tuple(a + b for a, b in zip(mu1, mu2)),
                )
                s = out.get(key, GR_ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return MixedPolynomial(self.n, out)

    __rmul__ = __mul__

    def scale(self, c: GaussianRational) -> "MixedPolynomial":
        c = GaussianRational.of(c)
        if c.is_zero():
            return MixedPolynomial(self.n)
        return MixedPolynomial(self.n, {k: v * c for k, v in self._terms.items()})

    # the operations of the public contract --------------------------------

    def evaluate(self, point):
        """Evaluate at a point (sequence of length n).

        Gaussian-rational coordinates give an exact GaussianRational result;
        any other numeric coordinates go through the floating complex path.
        """
        if len(point) != self.n:
            raise ValueError(f"point has length {len(point)}, expected {self.n}")
        exact = all(isinstance(z, GaussianRational) for z in point)
        if exact:
            total = GR_ZERO
            for (nu, mu), c in self._terms.items():
                val = c
                for z, e_nu, e_mu in zip(point, nu, mu):
                    for _ in range(e_nu):
                        val = val * z
                    zbar = z.conjugate()
                    for _ in range(e_mu):
                        val = val * zbar
                total = total + val
            return total
        pt = [complex(z) for z in point]
        total_c = 0j
        for (nu, mu), c in self._terms.items():
            val_c = complex(c)
            for z, e_nu, e_mu in zip(pt, nu, mu):
                val_c *= z**e_nu * z.conjugate() ** e_mu
            total_c += val_c
        return total_c

    def wirtinger(self, j: int, kind: str = "holomorphic") -> "MixedPolynomial":
        """Formal Wirtinger derivative d/dz_j or d/dzbar_j (1-based j).

        kind is "holomorphic" (z_j) or "antiholomorphic" (zbar_j).
        """
        if not 1 <= j <= self.n:
            raise IndexError(f"variable index {j} out of range [1, {self.n}]")
        if kind not in ("holomorphic", "antiholomorphic"):
            raise ValueError("kind must be 'holomorphic' or 'antiholomorphic'")
        idx = j - 1
        out: dict[TermKey, GaussianRational] = {}
        for (nu, mu), c in self._terms.items():
            vec = nu if kind == "holomorphic" else mu
            e = vec[idx]
            if e == 0:
                continue
            new_vec = vec[:idx] + (e - 1,) + vec[idx + 1 :]
            key = (new_vec, mu) if kind == "holomorphic" else (nu, new_vec)
            s = out.get(key, GR_ZERO) + c * e
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return MixedPolynomial(self.n, out)

    def restrict(self, I: Iterable[int]) -> "MixedPolynomial":
        """Restriction to the coordinate subspace C^I (1-based indices).

        Keeps exactly the terms with nu_i = mu_i = 0 for every i outside I.
        """
        keep = set(I)
        if not keep <= set(range(1, self.n + 1)):
            raise ValueError("index subset out of range")
        out = {
            (nu, mu): c
            for (nu, mu), c in self._terms.items()
            if all(nu[i] == 0 and mu[i] == 0 for i in range(self.n) if i + 1 not in keep)
        }
        return MixedPolynomial(self.n, out)

    def index_sets(self) -> tuple[set[frozenset[int]], set[frozenset[int]]]:
        """Partition of nonempty subsets of {1..n} into (I_nv, I_v).

        I is non-vanishing when the restriction to C^I is not identically
        zero.  For the zero polynomial every subset is vanishing.
        """
        nonvanishing: set[frozenset[int]] = set()
        vanishing: set[frozenset[int]] = set()
        indices = list(range(1, self.n + 1))
        for mask in range(1, 1 << self.n):
            I = frozenset(i for b, i in enumerate(indices) if mask >> b & 1)
            if self.restrict(I).is_zero():
                vanishing.add(I)
            else:
                nonvanishing.add(I)
        return nonvanishing, vanishing

    def is_convenient(self) -> bool:
        """True when no coordinate-axis restriction vanishes identically."""
        return all(not self.restrict({j}).is_zero() for j in range(1, self.n + 1))

    def conjugate(self) -> "MixedPolynomial":
        """The mixed conjugate: swap nu and mu, conjugate coefficients."""
        return MixedPolynomial(
            self.n, {(mu, nu): c.conjugate() for (nu, mu), c in self._terms.items()}
        )

    def degrees(self) -> list[int]:
        """Sorted distinct radial degrees sum(nu + mu) over the terms."""
        return sorted({sum(nu) + sum(mu) for (nu, mu) in self._terms})

    def radial_part(self, d: int) -> "MixedPolynomial":
        """Sum of the terms of radial degree d."""
        return MixedPolynomial(
            self.n,
            {k: c for k, c in self._terms.items() if sum(k[0]) + sum(k[1]) == d},
        )

    def as_univariate(self) -> "MixedPolynomial":
        """Collapse to one variable when only one variable occurs.

        Raises ValueError when two or more variables carry nonzero exponents.
        """
        if self.n == 1:
            return self
        used = [
            i
            for i in range(self.n)
            if any(nu[i] or mu[i] for (nu, mu) in self._terms)
        ]
        if len(used) > 1:
            raise ValueError("polynomial genuinely involves several variables")
        idx = used[0] if used else 0
        return MixedPolynomial(
            1, {((nu[idx],), (mu[idx],)): c for (nu, mu), c in self._terms.items()}
        )


# ---------------------------------------------------------------------------
# parsing


class ParseError(ValueError):
    """Syntax error with a position into the source text."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number")
        value = int(self.text[start : self.pos])
        if value > MAX_EXPONENT:
            raise self.error(f"integer too large (limit {MAX_EXPONENT})")
        return value

    def parse_rational(self) -> Fraction:
        num = self.parse_nat()
        save = self.pos
        self.skip_ws()
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            self.skip_ws()
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                den = self.parse_nat()
                if den == 0:
                    raise self.error("zero denominator")
                return Fraction(num, den)
            # a bare '/' that is not part of a literal is division, rejected
            raise self.error("division is not allowed in expressions")
        self.pos = save
        return Fraction(num)

    def parse_var_index(self) -> int:
        self.take("z")
        j = self.parse_nat()
        if not 1 <= j <= self.n:
            raise self.error(f"variable index z{j} out of range [1, {self.n}]")
        return j

    def _variable_poly(self, j: int, conjugated: bool) -> MixedPolynomial:
        nu = [0] * self.n
        mu = [0] * self.n
        (mu if conjugated else nu)[j - 1] = 1
        return MixedPolynomial(self.n, {(tuple(nu), tuple(mu)): GR_ONE})

    def parse_atom(self) -> MixedPolynomial:
        ch = self.peek()
        if ch == "":
            raise self.error("unexpected end of input")
        if ch == "(":
            self.take("(")
            inner = self.parse_expr()
            self.take(")")
            return inner
        if ch == "|":
            # |zj|^2 sugar
            self.take("|")
            j = self.parse_var_index()
            self.take("|")
            self.take("^")
            e = self.parse_nat()
            if e != 2:
                raise self.error("|zj|^e is only accepted with e = 2")
            return self._variable_poly(j, False) * self._variable_poly(j, True)
        if ch == "z":
            j = self.parse_var_index()
            return self._variable_poly(j, False)
        if self.text.startswith("bar", self.pos):
            self.pos += 3
            self.take("(")
            j = self.parse_var_index()
            self.take(")")
            return self._variable_poly(j, True)
        if ch == "i":
            self.pos += 1
            return MixedPolynomial(
                self.n, {((0,) * self.n, (0,) * self.n): GR_I}
            )
        if ch.isdigit():
            value = self.parse_rational()
            coeff = GaussianRational(value, Fraction(0))
            if self.pos < len(self.text) and self.text[self.pos] == "i":
                self.pos += 1
                coeff = GaussianRational(Fraction(0), value)
            if coeff.is_zero():
                return MixedPolynomial(self.n)
            return MixedPolynomial(self.n, {((0,) * self.n, (0,) * self.n): coeff})
        if ch == "/":
            raise self.error("division is not allowed in expressions")
        raise self.error(f"unexpected character {ch!r}")

    def parse_factor(self) -> MixedPolynomial:
        base = self.parse_atom()
        if self.peek() == "^":
            self.take("^")
            e = self.parse_nat()
            out = MixedPolynomial(self.n, {((0,) * self.n, (0,) * self.n): GR_ONE})
            for _ in range(e):
                out = out * base
            return out
        return base

    def parse_term(self) -> MixedPolynomial:
        out = self.parse_factor()
        while self.peek() == "*":
            self.take("*")
            out = out * self.parse_factor()
        return out

    def parse_expr(self) -> MixedPolynomial:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        out = self.parse_term()
        if sign < 0:
            out = -out
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            nxt = self.parse_term()
            out = out + nxt if op == "+" else out - nxt
        return out


def parse(text: str, n: int) -> MixedPolynomial:
    """Parse an expression into its canonical term map.

    Formatting the result with :func:`format_poly` and reparsing gives back
    an equal polynomial.
    """
    p = _Parser(text, n)
    result = p.parse_expr()
    p.skip_ws()
    if p.pos != len(text):
        raise p.error("trailing input")
    return result


# ---------------------------------------------------------------------------
# canonical formatting


def _format_coeff(c: GaussianRational) -> str:
    if c.im == 0:
        return str(c.re) if c.re >= 0 else f"({c.re})"
    if c.re == 0:
        if c.im == 1:
            return "i"
        if c.im > 0:
            return f"{c.im}i"
        return f"({c.im}i)"
    sign = "+" if c.im > 0 else "-"
    mag = abs(c.im)
    imtxt = "i" if mag == 1 else f"{mag}i"
    return f"({c.re}{sign}{imtxt})"


def format_poly(p: MixedPolynomial) -> str:
    """Canonical text form: terms sorted by (nu, mu), explicit '*' and '^'."""
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for mono in p.monomials():
        factors: list[str] = []
        for i in range(p.n):
            if mono.nu[i] == 1:
                factors.append(f"z{i + 1}")
            elif mono.nu[i] > 1:
                factors.append(f"z{i + 1}^{mono.nu[i]}")
            if mono.mu[i] == 1:
                factors.append(f"bar(z{i + 1})")
            elif mono.mu[i] > 1:
                factors.append(f"bar(z{i + 1})^{mono.mu[i]}")
        c = mono.coeff
        if not factors:
            pieces.append(_format_coeff(c))
        elif c == GR_ONE:
            pieces.append("*".join(factors))
        else:
            pieces.append("*".join([_format_coeff(c)] + factors))
    return " + ".join(pieces)
