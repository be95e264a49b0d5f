"""Parsing, evaluation and differential calculus of mixed polynomials."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedsing.mixedpoly import (
    GR_ONE,
    GaussianRational,
    MixedPolynomial,
    ParseError,
    format_poly,
    parse,
)

GR = GaussianRational


def gr(re, im=0):
    return GR(Fraction(re), Fraction(im))


def rand_gaussian(rng, span=5):
    return GR(
        Fraction(rng.randint(-span, span), rng.randint(1, 4)),
        Fraction(rng.randint(-span, span), rng.randint(1, 4)),
    )


def rand_poly(rng, n=2, terms=4, max_exp=3):
    data = {}
    for _ in range(terms):
        nu = tuple(rng.randint(0, max_exp) for _ in range(n))
        mu = tuple(rng.randint(0, max_exp) for _ in range(n))
        data[(nu, mu)] = rand_gaussian(rng)
    return MixedPolynomial(n, data)


def rand_torus_point(rng, n):
    out = []
    for _ in range(n):
        z = rand_gaussian(rng, 3)
        if z.is_zero():
            z = gr(1, 1)
        out.append(z)
    return out


# ---------------------------------------------------------------------------
# parse


def test_parse_cusp():
    p = parse("z1^2 + z2^3", 2)
    assert p.terms == {
        ((2, 0), (0, 0)): GR_ONE,
        ((0, 3), (0, 0)): GR_ONE,
    }


def test_parse_mixed_monomial():
    p = parse("z1*z2^2*bar(z2)", 2)
    assert p.terms == {((1, 2), (0, 1)): GR_ONE}


def test_parse_zero():
    assert parse("0", 2).is_zero()


def test_parse_abs_square_sugar():
    assert parse("|z2|^2", 2) == parse("z2*bar(z2)", 2)


def test_parse_gaussian_literals():
    p = parse("(1+2i)*z1 + 3/4i*z2 - i", 2)
    assert p.terms[((1, 0), (0, 0))] == gr(1, 2)
    assert p.terms[((0, 1), (0, 0))] == gr(0, Fraction(3, 4))
    assert p.terms[((0, 0), (0, 0))] == gr(0, -1)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse("z1 + $", 2)
    assert exc.value.pos == 5


def test_parse_variable_out_of_range():
    with pytest.raises(ParseError):
        parse("z3", 2)


def test_parse_division_rejected():
    with pytest.raises(ParseError):
        parse("z1/z2", 2)
    # but rational literals are fine
    assert parse("1/2*z1", 2).terms[((1, 0), (0, 0))] == gr(Fraction(1, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_roundtrip_parse_format(seed):
    rng = random.Random(seed)
    p = rand_poly(rng)
    assert parse(format_poly(p), p.n) == p


# ---------------------------------------------------------------------------
# evaluate


def test_evaluate_modulus_squared():
    p = parse("z1*bar(z1)", 1)
    assert p.evaluate([gr(3, 4)]) == gr(25)


def test_evaluate_cusp_at_ones():
    assert parse("z1^2+z2^3", 2).evaluate([gr(1), gr(1)]) == gr(2)


def test_evaluate_mixed_at_i():
    # hand expansion: 1 * i^2 * conj(i) = (-1)(-i) = i; the independent
    # direct-substitution evaluator below agrees
    p = parse("z1*z2^2*bar(z2)", 2)
    val = p.evaluate([gr(1), gr(0, 1)])
    assert val == gr(0, 1)

    def direct(poly, point):
        total = 0j
        for (nu, mu), c in poly.terms.items():
            term = complex(c)
            for z, a, b in zip(point, nu, mu):
                term *= z**a * z.conjugate() ** b
            total += term
        return total

    assert abs(direct(p, [1 + 0j, 1j]) - 1j) < 1e-12


def test_evaluate_dimension_mismatch():
    with pytest.raises(ValueError):
        parse("z1", 1).evaluate([1, 2])


def test_evaluate_float_path_matches_exact():
    rng = random.Random(3)
    for _ in range(10):
        p = rand_poly(rng)
        pt = rand_torus_point(rng, 2)
        exact = p.evaluate(pt)
        approx = p.evaluate([complex(z) for z in pt])
        assert abs(complex(exact) - approx) < 1e-9


# ---------------------------------------------------------------------------
# wirtinger


def test_wirtinger_modulus():
    p = parse("z1*bar(z1)", 1)
    assert p.wirtinger(1, "holomorphic") == parse("bar(z1)", 1)


def test_wirtinger_holomorphic_has_no_bar_derivative():
    assert parse("z1^2+z2^3", 2).wirtinger(1, "antiholomorphic").is_zero()


def test_wirtinger_mixed():
    p = parse("z1*z2^2*bar(z2)", 2)
    assert p.wirtinger(2, "antiholomorphic") == parse("z1*z2^2", 2)


def test_wirtinger_difference_quotient():
    # derived check: formal derivative vs central difference of evaluate
    rng = random.Random(11)
    p = rand_poly(rng, terms=3, max_exp=2)
    dz1 = p.wirtinger(1, "holomorphic")
    dz1bar = p.wirtinger(1, "antiholomorphic")
    pt = [0.43 + 0.27j, -0.51 + 0.64j]
    h = 1e-6
    # d/dx = d/dz + d/dzbar, d/dy = i (d/dz - d/dzbar)
    px = (p.evaluate([pt[0] + h, pt[1]]) - p.evaluate([pt[0] - h, pt[1]])) / (2 * h)
    py = (p.evaluate([pt[0] + 1j * h, pt[1]]) - p.evaluate([pt[0] - 1j * h, pt[1]])) / (2 * h)
    a = complex(dz1.evaluate(pt))
    b = complex(dz1bar.evaluate(pt))
    assert abs(px - (a + b)) < 1e-6
    assert abs(py - 1j * (a - b)) < 1e-6


def test_wirtinger_index_out_of_range():
    with pytest.raises(IndexError):
        parse("z1", 1).wirtinger(2)


def test_wirtinger_product_rule():
    rng = random.Random(5)
    for _ in range(8):
        p = rand_poly(rng, terms=3, max_exp=2)
        q = rand_poly(rng, terms=3, max_exp=2)
        for kind in ("holomorphic", "antiholomorphic"):
            lhs = (p * q).wirtinger(1, kind)
            rhs = p.wirtinger(1, kind) * q + p * q.wirtinger(1, kind)
            assert lhs == rhs


# ---------------------------------------------------------------------------
# restrict / index sets / convenience


def test_restrict_examples():
    p = parse("z1^2+z2^3", 2)
    assert p.restrict({1}) == parse("z1^2", 2)
    assert parse("z1*z2^2*bar(z2)", 2).restrict({1}).is_zero()
    assert p.restrict({1, 2}) == p


def test_restrict_composes_as_intersection():
    rng = random.Random(9)
    for _ in range(10):
        p = rand_poly(rng, n=3, terms=5, max_exp=2)
        I, J = {1, 2}, {2, 3}
        assert p.restrict(I).restrict(J) == p.restrict(I & J)


def test_index_sets_examples():
    nv, v = parse("z1^2+z2^3", 2).index_sets()
    assert nv == {frozenset({1}), frozenset({2}), frozenset({1, 2})}
    assert v == set()
    nv, v = parse("z1*z2^2*bar(z2)", 2).index_sets()
    assert v == {frozenset({1}), frozenset({2})}
    assert nv == {frozenset({1, 2})}
    nv, v = MixedPolynomial(2).index_sets()
    assert nv == set()
    assert len(v) == 3


def test_index_sets_partition_and_downward_closure():
    rng = random.Random(21)
    for _ in range(12):
        p = rand_poly(rng, n=3, terms=3, max_exp=2)
        nv, v = p.index_sets()
        assert len(nv) + len(v) == 7
        for I in v:
            for J in v | nv:
                if J < I:
                    assert J in v, (I, J)


def test_is_convenient():
    assert parse("z1^2+z2^3", 2).is_convenient()
    assert not parse("z1*z2^2*bar(z2)", 2).is_convenient()
    assert parse("z1*bar(z1)+z2", 2).is_convenient()


def test_conjugation_symmetry():
    rng = random.Random(13)
    for _ in range(10):
        p = rand_poly(rng)
        pt = rand_torus_point(rng, 2)
        lhs = p.conjugate().evaluate(pt)
        rhs = p.evaluate(pt).conjugate()
        assert lhs == rhs


def test_zero_polynomial_is_first_class():
    z = MixedPolynomial(2)
    assert z.is_zero()
    assert (z + parse("z1", 2)) == parse("z1", 2)
    assert format_poly(z) == "0"
