"""Tests for graded polynomial rings, multiplicative classes, virtual
bundles, twist-bundle q-expansions, and the rank-248 root calibration.

The heavy oracle here is a six-root splitting model built independently in
sympy: every multiplicative class and character operation is recomputed as
a symmetric function of formal roots and compared coefficient by
coefficient.
"""

from fractions import Fraction

import pytest
import sympy

from charmod.charring import (
    ArgumentError,
    DegreeError,
    DimError,
    GradedPoly,
    PolyRing,
    SpecError,
    calibrate_e8_roots,
    ch_tangent,
    default_ring,
    e8_ch,
    line_pair_ch,
    multiplicative_class,
    power_sums_from_pontryagin,
    trivial_bundle,
    vb_adams,
    vb_lambda2_sym2,
    witten_expand,
)
from charmod.thetamod import e8_character


# ----------------------------------------------------------------------
# sympy splitting oracle: six formal root squares t1..t6, p_k = e_k(t)
# ----------------------------------------------------------------------

T_SYMS = sympy.symbols("t1:7")
Y_SYMS = sympy.symbols("y1:7")


def sym_truncate(expr, max_t_degree):
    """Drop monomials of total t-degree above the bound."""
    poly = sympy.Poly(sympy.expand(expr), *T_SYMS)
    out = 0
    for monom, coeff in poly.terms():
        if sum(monom) <= max_t_degree:
            out += coeff * sympy.prod(t ** e for t, e in zip(T_SYMS, monom))
    return sympy.expand(out)


def library_poly_to_sympy(poly, images):
    """Evaluate a GradedPoly under sympy images of its generators."""
    total = 0
    for exps, coeff in poly.coeffs.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for name, e in zip(poly.ring.names, exps):
            if e:
                term *= images[name] ** e
    # terms with generators lacking an image should not appear in these tests
        total += term
    return sympy.expand(total)


def pontryagin_images():
    e1 = sum(T_SYMS)
    e2 = sum(T_SYMS[i] * T_SYMS[j] for i in range(6) for j in range(i + 1, 6))
    e3 = sum(
        T_SYMS[i] * T_SYMS[j] * T_SYMS[k]
        for i in range(6)
        for j in range(i + 1, 6)
        for k in range(j + 1, 6)
    )
    return {"p1": e1, "p2": e2, "p3": e3, "c": 0, "x": 0}


def root_product_class(root_series_coeffs, constant_per_root):
    """prod_i constant * (1 + sum_k a_k t_i^k) truncated at t-degree 3."""
    out = 1
    for t in T_SYMS:
        factor = 1
        for k, a_k in enumerate(root_series_coeffs, start=1):
            factor += a_k * t ** k
        out = sym_truncate(out * constant_per_root * factor, 3)
    return out


# per-root expansions of y/(2 sinh(y/2)) and 2 * (y/2)/tanh(y/2) in t = y^2
AHAT_ROOT = [
    sympy.Rational(-1, 24),
    sympy.Rational(7, 5760),
    sympy.Rational(-31, 967680),
]
LHAT_ROOT = [
    sympy.Rational(1, 12),
    sympy.Rational(-1, 720),
    sympy.Rational(1, 30240),
]


def test_ahat_matches_root_product():
    lib = multiplicative_class("Ahat", 12, default_ring())
    oracle = root_product_class(AHAT_ROOT, 1)
    assert sympy.expand(library_poly_to_sympy(lib, pontryagin_images()) - oracle) == 0


def test_lhat_matches_root_product():
    lib = multiplicative_class("Lhat", 12, default_ring())
    oracle = root_product_class(LHAT_ROOT, 2)
    assert sympy.expand(library_poly_to_sympy(lib, pontryagin_images()) - oracle) == 0


def test_ahat_pinned_coefficients():
    ring = default_ring()
    a = multiplicative_class("Ahat", 12, ring)
    assert a.constant_term() == 1
    assert a.monomial_coefficient(p1=1) == Fraction(-1, 24)
    assert a.monomial_coefficient(p2=1) == Fraction(-1, 1440)
    assert a.monomial_coefficient(p1=2) == Fraction(7, 5760)
    assert a.monomial_coefficient(p3=1) == Fraction(-1, 60480)
    assert a.monomial_coefficient(p1=1, p2=1) == Fraction(11, 241920)
    assert a.monomial_coefficient(p1=3) == Fraction(-31, 967680)


def test_lhat_pinned_coefficients():
    lhat = multiplicative_class("Lhat", 12, default_ring())
    assert lhat.constant_term() == 64
    assert lhat.homogeneous_part(4) == default_ring().gen("p1") * Fraction(16, 3)


def test_multiplicative_class_validation():
    with pytest.raises(DimError):
        multiplicative_class("Ahat", 8, default_ring())
    with pytest.raises(ArgumentError):
        multiplicative_class("Todd", 12, default_ring())


def test_power_sums_newton_identities():
    ring = default_ring()
    g = ring.gens()
    sums = power_sums_from_pontryagin([g["p1"], g["p2"], g["p3"]], 3)
    images = pontryagin_images()
    for k, s in enumerate(sums, start=1):
        oracle = sympy.expand(sum(t ** k for t in T_SYMS))
        assert sympy.expand(library_poly_to_sympy(s, images) - oracle) == 0


def test_tangent_character_against_roots():
    # ch of the complexified tangent: sum over +-roots of exp = 12 + sum 2cosh(y_i)
    lib = ch_tangent(12, default_ring()).ch
    oracle = 6 * 2
    for t in T_SYMS:
        oracle += t + t ** 2 / sympy.Integer(12) + t ** 3 / sympy.Integer(360)
    assert sympy.expand(library_poly_to_sympy(lib, pontryagin_images()) - oracle) == 0


def test_tangent_pinned():
    ring = default_ring()
    ch = ch_tangent(12, ring).ch
    g = ring.gens()
    assert ch.constant_term() == 12
    assert ch.homogeneous_part(4) == g["p1"]
    expected8 = g["p1"] * g["p1"] * Fraction(1, 12) - g["p2"] * Fraction(1, 6)
    assert ch.homogeneous_part(8) == expected8


def test_adams_on_tangent():
    ring = default_ring()
    tangent = ch_tangent(12, ring)
    psi2 = vb_adams(tangent, 2)
    assert psi2.rank == 12
    assert psi2.ch_component(4) == ring.gen("p1") * 4


def test_adams_on_line_pair_doubles_the_class():
    ring = default_ring()
    xi = line_pair_ch(ring.gen("c"))
    doubled = line_pair_ch(ring.gen("c") * 2)
    assert vb_adams(xi, 2).ch == doubled.ch


def test_adams_rejects_nonpositive():
    ring = default_ring()
    with pytest.raises(ArgumentError):
        vb_adams(ch_tangent(12, ring), 0)


def sym_cosh(u, order=6):
    # cosh truncated in total y-degree
    out = 0
    for k in range(0, order + 1, 2):
        out += u ** k / sympy.Integer(sympy.factorial(k))
    return out


def test_lambda2_sym2_against_pair_roots():
    """Exterior/symmetric squares via the +-root model of the tangent bundle."""
    ring = default_ring()
    tangent = ch_tangent(12, ring)
    lam, sym = vb_lambda2_sym2(tangent)
    assert lam.rank == 66
    assert sym.rank == 78

    y = Y_SYMS
    pairs_lam = 6  # +y_i paired with -y_i
    for i in range(6):
        for j in range(i + 1, 6):
            pairs_lam += 2 * sym_cosh(y[i] + y[j]) + 2 * sym_cosh(y[i] - y[j])
    # S^2 adds the doubled roots exp(+-2y_i)
    pairs_sym = pairs_lam
    for i in range(6):
        pairs_sym += 2 * sym_cosh(2 * y[i])

    y_to_t = {y[i] ** 2: T_SYMS[i] for i in range(6)}

    def to_t(expr):
        poly = sympy.expand(expr)
        for _ in range(6):
            poly = sympy.expand(poly.subs(y_to_t))
        return sym_truncate(poly, 3)

    images = pontryagin_images()
    assert sympy.expand(library_poly_to_sympy(lam.ch, images) - to_t(pairs_lam)) == 0
    assert sympy.expand(library_poly_to_sympy(sym.ch, images) - to_t(pairs_sym)) == 0


def test_lambda_minus_sym_is_minus_adams():
    ring = default_ring()
    tangent = ch_tangent(12, ring)
    lam, sym = vb_lambda2_sym2(tangent)
    assert (lam - sym).ch == -vb_adams(tangent, 2).ch
    assert (lam - sym).ch_component(4) == ring.gen("p1") * -4


def test_lambda2_sym2_sum_is_tensor_square():
    ring = default_ring()
    tangent = ch_tangent(12, ring)
    lam, sym = vb_lambda2_sym2(tangent)
    assert (lam + sym).ch == (tangent * tangent).ch


def test_line_pair_pinned():
    ring = default_ring()
    c = ring.gen("c")
    ch = line_pair_ch(c).ch
    expected = (
        ring.constant(2)
        + c * c
        + (c ** 4) * Fraction(1, 12)
        + (c ** 6) * Fraction(1, 360)
    )
    # truncated at the ring cap, higher powers of c vanish
    assert ch.homogeneous_part(0) + ch.homogeneous_part(4) + ch.homogeneous_part(8) + ch.homogeneous_part(12) == expected


def test_line_pair_requires_degree_2():
    ring = default_ring()
    with pytest.raises(DegreeError):
        line_pair_ch(ring.gen("p1"))


def test_e8_bundle_pinned():
    ring = default_ring()
    x = ring.gen("x")
    ch = e8_ch(x).ch
    assert ch == ring.constant(248) - 60 * x + 6 * x * x - x ** 3 * Fraction(1, 3)
    with pytest.raises(DegreeError):
        e8_ch(ring.gen("c"))


# ----------------------------------------------------------------------
# graded ring mechanics
# ----------------------------------------------------------------------


def test_ring_cap_truncates():
    ring = PolyRing({"u": 4}, cap=8)
    u = ring.gen("u")
    assert (u ** 3).is_zero()
    assert not (u ** 2).is_zero()


def test_poly_inverse_and_division():
    ring = default_ring()
    p1 = ring.gen("p1")
    unit = ring.one() + p1 * Fraction(1, 3)
    assert (unit * unit.inverse()) == ring.one()
    assert (p1 * p1).divide_by_gen("p1") == p1
    with pytest.raises(ValueError):
        (ring.one() + p1).divide_by_gen("p1")


def test_substitute_between_rings():
    src = PolyRing({"a": 4}, cap=8)
    dst = PolyRing({"u": 2}, cap=8)
    poly = src.gen("a") + src.constant(3)
    image = poly.substitute({"a": dst.gen("u") ** 2}, dst)
    assert image == dst.gen("u") ** 2 + dst.constant(3)
    with pytest.raises(ValueError):
        poly.substitute({}, dst)


def test_trivial_bundle_and_coercion():
    ring = default_ring()
    t = trivial_bundle(ring, 5)
    assert t.rank == 5
    assert (t - 5).ch.is_zero()


# ----------------------------------------------------------------------
# twist-bundle expansions
# ----------------------------------------------------------------------


def test_theta_expansion_first_orders():
    ring = default_ring()
    tangent = ch_tangent(12, ring)
    reduced = tangent - 12
    expansion = witten_expand("Theta", [tangent], 2)
    assert expansion[Fraction(0)].ch == ring.one()
    assert expansion[Fraction(1)].ch == reduced.ch
    lam, sym = vb_lambda2_sym2(reduced)
    assert expansion[Fraction(2)].ch == (sym + reduced).ch


def test_theta_twisted_expansion_is_integral_with_zero_rank_tail():
    ring = default_ring()
    tangent = ch_tangent(12, ring)
    xi = line_pair_ch(ring.gen("c"))
    expansion = witten_expand("ThetaTwisted", [tangent, xi], 2)
    assert all(exp.denominator == 1 for exp in expansion)
    xi_t = xi - 2
    b1 = tangent - 12 - 3 * xi_t - xi_t * xi_t
    assert expansion[Fraction(1)].ch == b1.ch
    assert expansion[Fraction(1)].rank == 0


def test_half_integral_support_kinds():
    ring = default_ring()
    tangent = ch_tangent(12, ring)
    expansion = witten_expand("Theta2", [tangent], 2)
    assert Fraction(1, 2) in expansion


def test_phi_expansion_q1():
    ring = default_ring()
    tangent = ch_tangent(12, ring)
    lam, sym = vb_lambda2_sym2(tangent)
    expansion = witten_expand("Phi", [tangent], 1)
    d1 = 2 * tangent + lam - sym - 12
    assert expansion[Fraction(1)].ch == d1.ch
    assert expansion[Fraction(1)].rank == 0


def test_witten_expand_validation():
    ring = default_ring()
    with pytest.raises(SpecError):
        witten_expand("NoSuch", [ch_tangent(12, ring)], 1)
    with pytest.raises(ArgumentError):
        witten_expand("ThetaTwisted", [ch_tangent(12, ring)], 1)


# ----------------------------------------------------------------------
# rank-248 calibration
# ----------------------------------------------------------------------


def test_calibration_solves_to_power_sums_of_x():
    ring = default_ring()
    x = ring.gen("x")
    g1, g2, g3 = calibrate_e8_roots(x)
    assert g1 == -2 * x
    assert g2 == 4 * x * x
    assert g3 == -8 * x ** 3


def test_calibration_at_zero():
    ring = default_ring()
    zero = ring.zero()
    assert calibrate_e8_roots(zero) == (zero, zero, zero)


def test_calibrated_character_first_coefficient():
    ring = default_ring()
    x = ring.gen("x")
    char = e8_character(calibrate_e8_roots(x), 2)
    assert char.coefficient(0) == ring.one()
    assert char.coefficient(1) == e8_ch(x).ch


def test_character_ignores_higher_calibration_slots():
    # below degree 16 every invariant is a polynomial in the quadratic one,
    # so the degree-8/12 slots cannot influence the assembled character
    ring = default_ring()
    x = ring.gen("x")
    g1, g2, g3 = calibrate_e8_roots(x)
    zero = ring.zero()
    assert e8_character((g1, g2, g3), 3) == e8_character((g1, zero, zero), 3)
