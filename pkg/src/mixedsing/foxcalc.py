"""Free-group ring arithmetic and Fox derivatives.

Words live in a free group on generators b_1 .. b_mu.  The Fox derivative
d/db_j : Z[F] -> Z[F] is the left derivation with d(b_i)/d(b_j) = delta_ij
and the chain rule d(uv) = d(u) + u d(v), hence d(b_j^{-1}) = -b_j^{-1}.
(The source text of the derivation axiom circulates with a typo; the
convention implemented here is pinned down by the fundamental identity
w - 1 = sum_j (dw/db_j)(b_j - 1), which the tests enforce.)

A Representation assigns invertible exact matrices to the generators; words
and group-ring elements evaluate through it.  h_der_matrix assembles the
block matrix [rho(h) . (s o rho~)(dw_i/db_j)]_{ij} describing the monodromy
action on derivations, and zeta_gD_component forms the characteristic
ratio det(1 - lambda rho(h)) / det(1 - lambda h_Der).

The mapping-torus presentation  < b_1..b_mu, h | h^{-1} b_i h = w_i >  of a
fibered link complement also yields the multivariable Alexander polynomial
through the same Fox matrix; :func:`alexander_from_words` implements that
classical computation and serves as the independent oracle for the built-in
link families.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .mixedpoly import GR_ONE, GR_ZERO, GaussianRational
from .zetalg import (
    LaurentPoly,
    Matrix,
    ZetaFunction,
    as_matrix,
    det_poly,
    mat_det_field,
    mat_identity,
    mat_inverse,
    mat_mul,
    mat_scale,
    mat_shape,
    mat_sub,
    mat_to_laurent,
)

__all__ = [
    "FreeWord",
    "GroupRingElement",
    "Representation",
    "fox_derivative",
    "h_der_matrix",
    "zeta_gD_component",
    "coboundary_matrix",
    "alexander_from_words",
]

Letter = tuple[int, int]  # (generator index >= 1, sign +-1)


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in a free group."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        stack: list[Letter] = []
        for gen, sign in self.letters:
            if gen < 1 or sign not in (1, -1):
                raise ValueError(f"bad letter ({gen}, {sign})")
            if stack and stack[-1][0] == gen and stack[-1][1] == -sign:
                stack.pop()
            else:
                stack.append((gen, sign))
        object.__setattr__(self, "letters", tuple(stack))

    @staticmethod
    def identity() -> "FreeWord":
        return FreeWord(())

    @staticmethod
    def gen(i: int, sign: int = 1) -> "FreeWord":
        return FreeWord(((i, sign),))

    @staticmethod
    def from_list(data: Sequence[Sequence[int]]) -> "FreeWord":
        return FreeWord(tuple((int(g), int(s)) for g, s in data))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, k: int) -> "FreeWord":
        if k < 0:
            return self.inverse() ** (-k)
        out = FreeWord.identity()
        for _ in range(k):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "*".join(
            f"b{g}" if s > 0 else f"b{g}^-1" for g, s in self.letters
        )


class GroupRingElement:
    """Finite integer combination of free words."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[FreeWord, int] | None = None):
        clean = {w: int(c) for w, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("GroupRingElement is immutable")

    @property
    def terms(self) -> dict[FreeWord, int]:
        return dict(self._terms)

    @staticmethod
    def zero() -> "GroupRingElement":
        return GroupRingElement()

    @staticmethod
    def of(word: FreeWord, coeff: int = 1) -> "GroupRingElement":
        return GroupRingElement({word: coeff})

    @staticmethod
    def one() -> "GroupRingElement":
        return GroupRingElement({FreeWord.identity(): 1})

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: Union["GroupRingElement", int]) -> "GroupRingElement":
        if isinstance(other, int):
            return GroupRingElement({w: c * other for w, c in self._terms.items()})
        out: dict[FreeWord, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 * w2
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElement(out)

    def left_mul_word(self, w: FreeWord) -> "GroupRingElement":
        return GroupRingElement({w * u: c for u, c in self._terms.items()})

    def augmentation(self) -> int:
        return sum(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupRingElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{w}" for w, c in sorted(self._terms.items(), key=lambda kv: str(kv[0])))


def fox_derivative(w: FreeWord, j: int) -> GroupRingElement:
    """Left Fox derivative dw/db_j in the integral group ring.

    d(b_j) = 1, d(b_j^{-1}) = -b_j^{-1}, d(uv) = d(u) + u d(v).
    """
    if j < 1:
        raise ValueError("generator index must be >= 1")
    out = GroupRingElement.zero()
    prefix = FreeWord.identity()
    for gen, sign in w.letters:
        if gen == j:
            if sign > 0:
                out = out + GroupRingElement.of(prefix)
            else:
                out = out - GroupRingElement.of(prefix * FreeWord.gen(gen, -1))
        prefix = prefix * FreeWord.gen(gen, sign)
    return out


# ---------------------------------------------------------------------------
# representations


@dataclass(frozen=True)
class Representation:
    """Exact matrices for the generators b_1 .. b_mu (plus evaluation).

    The generator images must be invertible.  Evaluation extends to free
    words and linearly to group-ring elements (the composite s o rho~ of the
    write-up).  Images for extra symbols beyond mu are allowed and let the
    monodromy element h be given as a word as well.
    """

    images: tuple[tuple[int, Matrix], ...]

    @staticmethod
    def of(images: Mapping[int, Sequence[Sequence]]) -> "Representation":
        processed = []
        dims = set()
        for g in sorted(images):
            M = as_matrix(images[g])
            n, m = mat_shape(M)
            if n != m:
                raise ValueError(f"image of generator {g} is not square")
            dims.add(n)
            if mat_det_field(M).is_zero():
                raise ValueError(f"image of generator {g} is singular")
            processed.append((g, M))
        if len(dims) > 1:
            raise ValueError("generator images must share one dimension")
        return Representation(tuple(processed))

    @property
    def dim(self) -> int:
        return len(self.images[0][1]) if self.images else 0

    def image(self, g: int) -> Matrix:
        for gen, M in self.images:
            if gen == g:
                return M
        raise KeyError(f"no image for generator {g}")

    def evaluate(self, w: FreeWord) -> Matrix:
        out = mat_identity(self.dim, GR_ONE, GR_ZERO)
        for gen, sign in w.letters:
            M = self.image(gen)
            if sign < 0:
                M = mat_inverse(M)
            out = mat_mul(out, M, GR_ZERO)
        return out

    def evaluate_ring(self, x: GroupRingElement) -> Matrix:
        """s o rho~: sum of coefficient-scaled word images."""
        n = self.dim
        out = tuple(tuple(GR_ZERO for _ in range(n)) for _ in range(n))
        for w, c in x.terms.items():
            M = mat_scale(self.evaluate(w), GaussianRational.of(c))
            out = tuple(
                tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(out, M)
            )
        return out


def h_der_matrix(
    words: Sequence[FreeWord], rho: Representation, h: Union[FreeWord, Sequence[Sequence]]
) -> Matrix:
    """The block matrix of the monodromy action on derivations.

    Block (i, j) is rho(h) . (s o rho~)(dw_i/db_j); derivations Der(H, A)
    are identified with A^mu through the values on the generators.  h may
    be a word over the representation's symbols or an explicit matrix.
    """
    mu = len(words)
    dim = rho.dim
    h_mat = rho.evaluate(h) if isinstance(h, FreeWord) else as_matrix(h)
    if mat_shape(h_mat) != (dim, dim):
        raise ValueError("h image dimension does not match the representation")
    blocks = [
        [
            mat_mul(h_mat, rho.evaluate_ring(fox_derivative(words[i], j + 1)), GR_ZERO)
            for j in range(mu)
        ]
        for i in range(mu)
    ]
    return tuple(
        tuple(blocks[i][j][a][b] for j in range(mu) for b in range(dim))
        for i in range(mu)
        for a in range(dim)
    )


def zeta_gD_component(rho_h: Matrix, hder: Matrix, q: int = 0) -> ZetaFunction:
    """det(1 - lambda rho(h)) / det(1 - lambda h_Der), normalized.

    The grading sign (-1)^q is applied by the caller; q is carried only so
    reports can tag the factor with its degree.
    """
    lam = LaurentPoly.variable(1, 0)

    def char(M: Matrix) -> LaurentPoly:
        n, m = mat_shape(M)
        if n != m:
            raise ValueError("square matrix required")
        eye = mat_identity(n, LaurentPoly.const(1, 1), LaurentPoly.zero(1))
        return det_poly(
            mat_sub(eye, mat_scale(mat_to_laurent(M), lam)), vars=1
        )

    return ZetaFunction(char(rho_h), char(hder)).normalize()


def coboundary_matrix(rho: Representation, mu: int) -> Matrix:
    """delta : A -> A^mu, a |-> (rho(b_i) a - a)_i, stacked as mu blocks."""
    dim = rho.dim
    eye = mat_identity(dim, GR_ONE, GR_ZERO)
    rows = []
    for i in range(1, mu + 1):
        block = mat_sub(rho.image(i), eye)
        rows.extend(block)
    return tuple(rows)


# ---------------------------------------------------------------------------
# Alexander polynomials from mapping-torus words


def abelianized(x: GroupRingElement, classes: Sequence[Sequence[int]], r: int) -> LaurentPoly:
    """Image of a group-ring element in Z[t_1^{+-} .. t_r^{+-}].

    classes[i] is the exponent vector of the abelianization of b_{i+1}.
    """
    out = LaurentPoly.zero(r)
    for w, c in x.terms.items():
        e = [0] * r
        for gen, sign in w.letters:
            cls = classes[gen - 1]
            for k in range(r):
                e[k] += sign * cls[k]
        out = out + LaurentPoly.monomial(r, e, c)
    return out


def alexander_from_words(
    words: Sequence[FreeWord],
    gen_classes: Sequence[Sequence[int]],
    h_class: Sequence[int],
    r: int,
) -> tuple[LaurentPoly, LaurentPoly]:
    """Fox-matrix Alexander data of  < b_i, h | h^{-1} b_i h = w_i >.

    Returns (D, T - 1) where D = det[ delta_ij ab(h)^{-1} - ab(dw_i/db_j) ]
    and T is the abelianized monomial of h; the multivariable Alexander
    polynomial of the fibered multilink satisfies Delta * (T - 1) = D up to
    a unit.  The caller compares with cross-multiplication to avoid
    division.
    """
    mu = len(words)
    if len(gen_classes) != mu:
        raise ValueError("one abelianization class per generator required")
    T = LaurentPoly.monomial(r, h_class, 1)
    T_inv = LaurentPoly.monomial(r, [-x for x in h_class], 1)
    zero = LaurentPoly.zero(r)
    grid = []
    for i in range(mu):
        row = []
        for j in range(mu):
            entry = -abelianized(fox_derivative(words[i], j + 1), gen_classes, r)
            if i == j:
                entry = entry + T_inv
            row.append(entry)
        grid.append(tuple(row))
    D = det_poly(tuple(grid), vars=r)
    return D, T - LaurentPoly.const(r, 1)
