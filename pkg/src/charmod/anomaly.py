"""Verification registry for the degree-12 identity family.

Each registry entry states one exact identity — a polynomial identity among
graded generators, a q-series factorization through a one-dimensional space
of modular forms, a bundle identity at the character level, a residue
congruence, or a boundary-restriction comparison — and verifies it by exact
arithmetic, returning a `VerificationReport`.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactmath import GRID, qs_exp, qs_mul
from .charring import (
    CohomQSeries,
    PolyRing,
    _exp_poly,
    calibrate_e8_roots,
    ch_tangent,
    default_ring,
    e8_ch,
    line_pair_ch,
    multiplicative_class,
    power_sums_from_pontryagin,
    vb_adams,
    vb_lambda2_sym2,
    witten_character,
    witten_expand,
)
from .thetamod import (
    NotProportional,
    e8_character,
    eisenstein,
    match_modular_basis,
    phi,
    series_in_ring,
    theta_log_ratio,
)


class UnsupportedGenerator(ValueError):
    """A polynomial mentions a generator with no boundary-restriction image."""


# ----------------------------------------------------------------------
# reports
# ----------------------------------------------------------------------


@dataclass
class VerificationReport:
    """Outcome of one registry check.

    ``witness`` renders the first discrepancy and stays empty on a pass.
    ``findings`` carry observations that do not decide the status (for
    example alternate-reading residuals); ``assumptions`` record inputs
    taken on trust; ``data`` holds auxiliary exact values as strings.
    """

    id: str
    status: str
    witness: str = ""
    order: int = 0
    cap: int = 12
    millis: float = 0.0
    findings: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, payload):
        return cls(**payload)


# ----------------------------------------------------------------------
# residue-2 polynomial ring
# ----------------------------------------------------------------------

MOD2_GENERATORS = {"w2": 2, "w4": 4, "w6": 6, "w8": 8}
MOD2_CAP = 16


class Mod2Poly:
    """Polynomial over Z/2 in the w-generators: a set of surviving monomials."""

    __slots__ = ("monomials",)

    NAMES = tuple(MOD2_GENERATORS)
    DEGREES = tuple(MOD2_GENERATORS.values())

    def __init__(self, monomials=()):
        keep = set()
        for exps in monomials:
            exps = tuple(int(e) for e in exps)
            if sum(e * d for e, d in zip(exps, self.DEGREES)) > MOD2_CAP:
                continue
            if exps in keep:
                keep.discard(exps)  # 1 + 1 = 0
            else:
                keep.add(exps)
        self.monomials = frozenset(keep)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0, 0, 0)})

    @classmethod
    def gen(cls, name):
        exps = [0, 0, 0, 0]
        exps[cls.NAMES.index(name)] = 1
        return cls({tuple(exps)})

    def __add__(self, other):
        return Mod2Poly(self.monomials ^ other.monomials)

    __sub__ = __add__

    def __mul__(self, other):
        acc = set()
        for e1 in self.monomials:
            for e2 in other.monomials:
                e = tuple(a + b for a, b in zip(e1, e2))
                if sum(v * d for v, d in zip(e, self.DEGREES)) > MOD2_CAP:
                    continue
                if e in acc:
                    acc.discard(e)
                else:
                    acc.add(e)
        return Mod2Poly(acc)

    def __pow__(self, exponent):
        out = Mod2Poly.one()
        for _ in range(int(exponent)):
            out = out * self
        return out

    def is_zero(self):
        return not self.monomials

    def __eq__(self, other):
        return isinstance(other, Mod2Poly) and other.monomials == self.monomials

    def __hash__(self):
        return hash(self.monomials)

    def __str__(self):
        if not self.monomials:
            return "0"
        def degree(exps):
            return sum(v * d for v, d in zip(exps, self.DEGREES))
        pieces = []
        for exps in sorted(self.monomials, key=lambda e: (degree(e), e)):
            factors = [
                name if e == 1 else "%s^%d" % (name, e)
                for name, e in zip(self.NAMES, exps)
                if e
            ]
            pieces.append("*".join(factors) if factors else "1")
        return " + ".join(pieces)

    __repr__ = __str__


def mod2_reduce(poly, images):
    """Reduce an integer-coefficient polynomial mod 2 under generator images.

    ``images`` maps every generator appearing in ``poly`` to a Mod2Poly.
    Fractional coefficients are rejected.
    """
    out = Mod2Poly.zero()
    for exps, coeff in poly.coeffs.items():
        if coeff.denominator != 1:
            raise ValueError("coefficient %s is not an integer" % coeff)
        if coeff.numerator % 2 == 0:
            continue
        term = Mod2Poly.one()
        for name, e in zip(poly.ring.names, exps):
            if not e:
                continue
            if name not in images:
                raise UnsupportedGenerator("no residue image for %r" % name)
            term = term * images[name] ** e
        out = out + term
    return out


# ----------------------------------------------------------------------
# shared builders over the default ring
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _ahat(ring):
    return multiplicative_class("Ahat", 12, ring)


@lru_cache(maxsize=None)
def _lhat(ring):
    return multiplicative_class("Lhat", 12, ring)


@lru_cache(maxsize=None)
def _tangent(ring):
    return ch_tangent(12, ring)


@lru_cache(maxsize=None)
def _exp_half_c(ring):
    return _exp_poly(ring.gen("c") * Fraction(1, 2))


@lru_cache(maxsize=None)
def _cosh_half_c(ring):
    c = ring.gen("c")
    return (_exp_poly(c * Fraction(1, 2)) + _exp_poly(c * Fraction(-1, 2))) * Fraction(1, 2)


@lru_cache(maxsize=None)
def _e8_bundle(ring):
    return e8_ch(ring.gen("x"))


@lru_cache(maxsize=None)
def _e8_char_series(ring, order):
    """Full character q-series of the calibrated rank-248 bundle."""
    g = calibrate_e8_roots(ring.gen("x"))
    return e8_character(g, order)


@lru_cache(maxsize=None)
def _theta_twisted_char(ring, order):
    tangent = _tangent(ring)
    xi = line_pair_ch(ring.gen("c"))
    return witten_character("ThetaTwisted", [tangent, xi], order)


@lru_cache(maxsize=None)
def _theta_char(ring, order):
    return witten_character("Theta", [_tangent(ring)], order)


@lru_cache(maxsize=None)
def _phi_char(ring, order):
    return witten_character("Phi", [_tangent(ring)], order)


def derived_classes(ring):
    """The quadratic-form building blocks in the default generators."""
    g = ring.gens()
    p1, p2, c, x = g["p1"], g["p2"], g["c"], g["x"]
    lam = p1 * Fraction(1, 2)
    p = (p2 - lam * lam) * Fraction(1, 2)
    lam_c = (p1 - 3 * c * c) * Fraction(1, 2)
    p_c = (4 * p2 - p1 * p1 - 6 * p1 * c * c + 39 * c ** 4) * Fraction(1, 8)
    out = {
        "lam": lam,
        "p": p,
        "pt": p - 3 * lam * lam,
        "lam_c": lam_c,
        "p_c": p_c,
        "pt_c": p_c - 3 * lam_c * lam_c,
        "C": lam + 2 * x,
        "Ct": lam + x,
        "C_c": lam_c + 2 * x,
        "Ct_c": lam_c + x,
        "D": -p1 + 2 * x,
        "Dt": -p1 + x,
    }
    return out


# ----------------------------------------------------------------------
# twisted-class builders
# ----------------------------------------------------------------------

CLASS_KINDS = ("W", "Wc", "LWitten", "Qc", "Rc", "QL", "RL")

#: polynomial K in the exponential prefactor exp((1/24) E2 K) of each class
def prefactor_exponent(kind, ring):
    g = ring.gens()
    p1, c, x = g["p1"], g["c"], g["x"]
    if kind == "W":
        return p1
    if kind == "Wc":
        return p1 - 3 * c * c
    if kind == "LWitten":
        return -2 * p1
    if kind == "Qc":
        return p1 - 3 * c * c + 4 * x
    if kind == "Rc":
        return p1 - 3 * c * c + 2 * x
    if kind == "QL":
        return -2 * p1 + 4 * x
    if kind == "RL":
        return -2 * p1 + 2 * x
    raise ValueError("unknown class kind %r" % (kind,))


def _prefactor_series(kind, order, ring):
    exponent_poly = prefactor_exponent(kind, ring) * Fraction(1, 24)
    e2 = eisenstein(2, order)
    terms = {k: exponent_poly * coeff for k, coeff in e2.terms.items()}
    return qs_exp(CohomQSeries(ring, order, terms))


def _core_adams(kind, order, ring):
    if kind == "W":
        return _theta_char(ring, order).scale(_ahat(ring))
    if kind in ("Wc", "Qc", "Rc"):
        return _theta_twisted_char(ring, order).scale(_ahat(ring) * _cosh_half_c(ring))
    return _phi_char(ring, order).scale(_lhat(ring))


def _core_theta(kind, order, ring):
    g = ring.gens()
    sums = power_sums_from_pontryagin([g["p1"], g["p2"], g["p3"]], 3)
    c = g["c"]
    log_terms = {}

    def add(series, poly):
        for grid_key, coeff in series.terms.items():
            piece = poly * coeff
            if grid_key in log_terms:
                log_terms[grid_key] = log_terms[grid_key] + piece
            else:
                log_terms[grid_key] = piece

    if kind == "W":
        for c_k, pi_k in zip(theta_log_ratio("theta", order), sums):
            add(c_k, pi_k)
        constant = Fraction(1)
    elif kind in ("Wc", "Qc", "Rc"):
        for c_k, pi_k in zip(theta_log_ratio("theta", order), sums):
            add(c_k, pi_k)
        even_sum = [None, None, None]
        for kind_name in ("theta1", "theta2", "theta3"):
            for i, c_k in enumerate(theta_log_ratio(kind_name, order)):
                even_sum[i] = c_k if even_sum[i] is None else even_sum[i] + c_k
        for i, c_k in enumerate(even_sum):
            add(c_k, c ** (2 * (i + 1)))
        constant = Fraction(1)
    else:
        for c_k, pi_k in zip(theta_log_ratio("lhat", order), sums):
            add(c_k, pi_k)
        constant = Fraction(64)

    out = qs_exp(CohomQSeries(ring, order, log_terms))
    return out.scale(constant) if constant != 1 else out


def build_twisted_class(kind, order, ring=None, route="adams"):
    """Assemble one of the q-expanded characteristic classes.

    ``route`` picks the Adams-operation expansion ("adams") or the
    theta-ratio expansion ("theta"); both must agree.
    """
    if kind not in CLASS_KINDS:
        raise ValueError("unknown class kind %r" % (kind,))
    if route not in ("adams", "theta"):
        raise ValueError("unknown route %r" % (route,))
    ring = ring or default_ring()
    order = int(order)

    core = _core_adams(kind, order, ring) if route == "adams" else _core_theta(kind, order, ring)
    out = qs_mul(_prefactor_series(kind, order, ring), core)

    if kind in ("Qc", "QL"):
        chv = _e8_char_series(ring, order)
        tail = qs_mul(series_in_ring(phi(order) ** 16, ring), qs_mul(chv, chv))
        out = qs_mul(out, tail)
    elif kind in ("Rc", "RL"):
        chv = _e8_char_series(ring, order)
        tail = qs_mul(series_in_ring(phi(order) ** 8, ring), chv)
        out = qs_mul(out, tail)
    return out


def degree_part_series(series, degree):
    """Take the homogeneous part of every q-coefficient."""
    terms = {}
    for grid_key, poly in series.terms.items():
        part = poly.homogeneous_part(degree)
        if not part.is_zero():
            terms[grid_key] = part
    return CohomQSeries(series.ring, series.order, terms)


# ----------------------------------------------------------------------
# bundle combinations appearing in the factorization displays
# ----------------------------------------------------------------------


def display_bundles(ring):
    """The virtual bundles named by the degree-8 factorization displays."""
    T = _tangent(ring)
    V = _e8_bundle(ring)
    xi = line_pair_ch(ring.gen("c"))
    xi_t = xi - 2
    lam2, sym2 = vb_lambda2_sym2(T)
    B1 = T - 12 - 3 * xi_t - xi_t * xi_t
    D1 = 2 * T + lam2 - sym2 - 12
    return {
        "T": T,
        "V": V,
        "xi": xi,
        "xi_t": xi_t,
        "lam2": lam2,
        "sym2": sym2,
        "B1": B1,
        "D1": D1,
        "frakA": 2 * V + T - 4 - 3 * xi_t - xi_t * xi_t,
        "frakB": V + T + 244 - 3 * xi_t - xi_t * xi_t,
        "frakC": 2 * V + 2 * T + lam2 - sym2 - 4,
        "frakD": V + 2 * T + lam2 - sym2 + 244,
    }


def exp_minus_one_over(k_poly):
    """(exp(K/24) - 1)/K as a polynomial: sum_{j>=1} K^{j-1}/(24^j j!).

    K must have no constant term, so the sum terminates in the capped ring.
    """
    if k_poly.constant_term() != 0:
        raise ValueError("K must have zero constant term")
    out = k_poly.ring.zero()
    power = k_poly.ring.one()
    factorial = 1
    j = 1
    while not power.is_zero():
        factorial *= j
        out = out + power * Fraction(1, 24 ** j * factorial)
        power = power * k_poly
        j += 1
    return out


DEG8_SETTINGS = {
    # id: (K kind, bundle key, uses exp(c/2), expected-RHS builder key)
    "deg8_spinc_q": ("Qc", "frakA", True),
    "deg8_spinc_r": ("Rc", "frakB", True),
    "deg8_orient_q": ("QL", "frakC", False),
    "deg8_orient_r": ("RL", "frakD", False),
}


def deg8_display_sides(reg_id, ring):
    """LHS (brace degree-8 part) and RHS (closed quadratic form) of one display."""
    kind, bundle_key, with_half_c = DEG8_SETTINGS[reg_id]
    K = prefactor_exponent(kind, ring)
    bundle = display_bundles(ring)[bundle_key]
    if with_half_c:
        weight_class = _ahat(ring) * _exp_half_c(ring)
    else:
        weight_class = _lhat(ring)
    u = exp_minus_one_over(K)
    exp_k = _exp_poly(K * Fraction(1, 24))
    brace = -(u * weight_class * bundle.ch) + exp_k * weight_class
    lhs = brace.homogeneous_part(8)

    d = derived_classes(ring)
    g = ring.gens()
    p1, p2 = g["p1"], g["p2"]
    if reg_id == "deg8_spinc_q":
        rhs = (d["p_c"] - d["C_c"] * d["C_c"]) * Fraction(1, 24)
    elif reg_id == "deg8_spinc_r":
        rhs = (d["pt_c"] + 6 * d["lam_c"] * d["Ct_c"] - 4 * d["Ct_c"] * d["Ct_c"]) * Fraction(1, 24)
    elif reg_id == "deg8_orient_q":
        rhs = (4 * p1 * p1 - 7 * p2 - d["D"] * d["D"]) * Fraction(8, 3)
    else:
        rhs = (p1 * p1 - 7 * p2 - 6 * p1 * d["Dt"] - 4 * d["Dt"] * d["Dt"]) * Fraction(8, 3)
    return lhs, rhs


# ----------------------------------------------------------------------
# boundary restriction (codimension-2 comparison)
# ----------------------------------------------------------------------

U_GENERATORS = {"tP1": 4, "tP2": 8, "tx": 4, "e": 2}


def boundary_ring(cap=10):
    return PolyRing(U_GENERATORS, cap=cap)


def restrict_to_u(poly, target=None):
    """Restriction along the inclusion of the codimension-2 submanifold.

    Sends p1 -> tP1 + e^2, p2 -> tP2 + tP1 e^2, c -> e, x -> tx; a p3-term
    has no image on the ten-dimensional side and raises UnsupportedGenerator.
    """
    target = target or boundary_ring()
    g = target.gens()
    images = {
        "p1": g["tP1"] + g["e"] * g["e"],
        "p2": g["tP2"] + g["tP1"] * g["e"] * g["e"],
        "c": g["e"],
        "x": g["tx"],
    }
    for exps in poly.coeffs:
        for name, e in zip(poly.ring.names, exps):
            if e and name not in images:
                raise UnsupportedGenerator("generator %r has no boundary image" % name)
    try:
        return poly.substitute(images, target)
    except ValueError as exc:
        raise UnsupportedGenerator(str(exc))


DIFFER_SETTINGS = {
    # id: (main-variant C key, tilde shift uses x not 2x)
    "differ1": ("C", "C_c"),
    "differ2": ("Ct", "Ct_c"),
}


def _differ_gamma(which, ring):
    """Difference of the two quadratic-form displays, one twisted by c."""
    d = derived_classes(ring)
    if which == "differ1":
        twisted = d["C_c"] * (d["p_c"] - d["C_c"] ** 2)
        plain = d["C"] * (d["p"] - d["C"] ** 2)
    else:
        twisted = d["Ct_c"] * (d["pt_c"] + 6 * d["lam_c"] * d["Ct_c"] - 4 * d["Ct_c"] ** 2)
        plain = d["Ct"] * (d["pt"] + 6 * d["lam"] * d["Ct"] - 4 * d["Ct"] ** 2)
    return (twisted - plain) / 12


def _differ_quadratic(which, C, p1, p2, c):
    """The displayed quadratic form Q with gamma = c^2 Q / 64."""
    if which == "differ1":
        return (
            24 * C * C
            - (4 * p1 + 10 * c * c) * C
            + p1 * p1
            - 4 * p2
            + 6 * p1 * c * c
            - 21 * c ** 4
        )
    return (
        48 * C * C
        - (28 * p1 + 10 * c * c) * C
        + 7 * p1 * p1
        - 4 * p2
        + 6 * p1 * c * c
        - 21 * c ** 4
    )


def boundary_tanh_term(which, target=None):
    """Degree-10 boundary correction term carried by the comparison.

    (1/2) Ahat(T_U) ch(bundle) tanh(e/4) with the bundle 2 i*V + T_U|_C + N - 4
    for differ1 and i*V + T_U|_C + N + 244 for differ2.
    """
    ru = target or boundary_ring()
    names = ("tP1", "tP2")
    ahat = multiplicative_class("Ahat", 10, ru, pontryagin_names=names)
    tangent = ch_tangent(10, ru, pontryagin_names=names)
    normal = line_pair_ch(ru.gen("e"))
    i_v = e8_ch(ru.gen("tx"))
    if which == "differ1":
        bundle = 2 * i_v + tangent + normal - 4
    else:
        bundle = i_v + tangent + normal + 244
    e = ru.gen("e")
    tanh = e / 4 - e ** 3 / 192 + e ** 5 / 7680
    return ((ahat * bundle.ch * tanh) / 2).homogeneous_part(10)


def verify_differ(which, cap=12):
    """Check one boundary comparison: c^2-divisibility, the exact closed
    quadratic form, and the restricted degree-10 identity; attach the
    residuals of the two alternate symbol readings as findings."""
    if which not in DIFFER_SETTINGS:
        raise ValueError("unknown comparison %r" % (which,))
    c_key = DIFFER_SETTINGS[which][0]
    ring = default_ring(cap)
    g = ring.gens()
    p1, p2, c = g["p1"], g["p2"], g["c"]
    d = derived_classes(ring)

    gamma = _differ_gamma(which, ring)
    witness = ""
    try:
        delta = gamma.divide_by_gen("c")
        delta.divide_by_gen("c")
    except ValueError as exc:
        return "not divisible by c^2: %s" % exc, [], {}

    expected = c * _differ_quadratic(which, d[c_key], p1, p2, c) / 64
    diff = delta - expected
    if not diff.is_zero():
        witness = "closed form mismatch: %s" % diff

    ru = boundary_ring()
    lhs_u = restrict_to_u(delta, ru)
    rhs_u = restrict_to_u(expected, ru)
    if witness == "" and lhs_u != rhs_u:
        witness = "restricted mismatch: %s" % (lhs_u - rhs_u)

    # Alternate readings of the displayed form, where the p- and C-symbols
    # are taken on the ten-dimensional side instead of restricted.
    gu = ru.gens()
    tp1, tp2, tx, e = gu["tP1"], gu["tP2"], gu["tx"], gu["e"]
    shift = 2 * tx if which == "differ1" else tx
    readings = {
        "intrinsic p, restricted C": (tp1 + e * e) / 2 + shift,
        "intrinsic p and C": tp1 / 2 + shift,
    }
    findings = []
    for label, c_img in readings.items():
        q_u = _differ_quadratic(which, c_img, tp1, tp2, e)
        residual = lhs_u - e * q_u / 64
        if not residual.is_zero():
            findings.append("reading [%s] leaves residual %s" % (label, residual))

    data = {
        "restricted_form": str(lhs_u),
        "tanh_term_deg10": str(boundary_tanh_term(which, ru)),
    }
    return witness, findings, data


# ----------------------------------------------------------------------
# the registry
# ----------------------------------------------------------------------

REGISTRY_IDS = (
    "wfh_main",
    "spin_new",
    "spinc_main",
    "spinc_new",
    "o1",
    "o2",
    "fact_spinc_q",
    "fact_spinc_r",
    "fact_orient_q",
    "fact_orient_r",
    "deg8_spinc_q",
    "deg8_spinc_r",
    "deg8_orient_q",
    "deg8_orient_r",
    "bundle_xi_plus",
    "bundle_xi_minus",
    "sqrt_relation",
    "b1_check",
    "d1_check",
    "pc_theorem",
    "mod2_orientable",
    "differ1",
    "differ2",
)

THEOREM_IDS = REGISTRY_IDS[:6]

_FACT_SETTINGS = {
    "fact_spinc_q": ("Qc", 14, -24),
    "fact_spinc_r": ("Rc", 10, -264),
    "fact_orient_q": ("QL", 14, -24),
    "fact_orient_r": ("RL", 10, -264),
}


def _poly_witness(diff):
    return "" if diff.is_zero() else str(diff)


def _series_witness(diff):
    if diff.is_zero():
        return ""
    grid_key = min(k for k, v in diff.terms.items() if not v.is_zero())
    return "q^(%s): %s" % (Fraction(grid_key, GRID), diff.terms[grid_key])


def theorem_sides(reg_id, ring):
    """LHS quadratic-form display and RHS index display of a main identity."""
    d = derived_classes(ring)
    g = ring.gens()
    p1, p2 = g["p1"], g["p2"]
    ahat, lhat = _ahat(ring), _lhat(ring)
    ch_t = _tangent(ring).ch
    ch_v = _e8_bundle(ring).ch
    ch_xi = line_pair_ch(g["c"]).ch
    half_c = _exp_half_c(ring)

    if reg_id == "wfh_main":
        lhs = d["C"] * (d["p"] - d["C"] ** 2) / 48
        rhs = ahat * (ch_v / 2 + ch_t / 4 - 1)
    elif reg_id == "spin_new":
        lhs = d["Ct"] * (d["pt"] + 6 * d["lam"] * d["Ct"] - 4 * d["Ct"] ** 2) / 24
        rhs = ahat * (ch_v / 2 + ch_t / 2 + 122)
    elif reg_id == "spinc_main":
        lhs = d["C_c"] * (d["p_c"] - d["C_c"] ** 2) / 24
        rhs = ahat * half_c * (ch_v + ch_t / 2 - (ch_xi * ch_xi - ch_xi + 2) / 2)
    elif reg_id == "spinc_new":
        lhs = d["Ct_c"] * (d["pt_c"] + 6 * d["lam_c"] * d["Ct_c"] - 4 * d["Ct_c"] ** 2) / 12
        rhs = ahat * half_c * (ch_v + ch_t + (-(ch_xi * ch_xi) + ch_xi + 246))
    elif reg_id == "o1":
        ch_diff = -vb_adams(_tangent(ring), 2).ch
        lhs = d["D"] * (4 * p1 * p1 - 7 * p2 - d["D"] ** 2) / 6
        rhs = lhat * (2 * ch_v + 2 * ch_t + ch_diff - 4) / 32
    elif reg_id == "o2":
        ch_diff = -vb_adams(_tangent(ring), 2).ch
        lhs = d["Dt"] * (p1 * p1 - 7 * p2 - 6 * p1 * d["Dt"] - 4 * d["Dt"] ** 2) / 3
        rhs = lhat * (ch_v + 2 * ch_t + ch_diff + 244) / 16
    else:
        raise ValueError("unknown identity %r" % (reg_id,))
    return lhs.homogeneous_part(12), rhs.homogeneous_part(12)


def _check_theorem(reg_id, order, cap):
    ring = default_ring(cap)
    lhs, rhs = theorem_sides(reg_id, ring)
    return _poly_witness(lhs - rhs), [], [], {}


def _check_fact(reg_id, order, cap):
    kind, weight, ratio = _FACT_SETTINGS[reg_id]
    ring = default_ring(cap)
    cls = build_twisted_class(kind, order, ring)
    s12 = degree_part_series(cls, 12)
    try:
        m = match_modular_basis(s12, weight)
    except NotProportional as exc:
        return (
            "degree-12 part is not a multiple of the weight-%d form at q^(%s): %s"
            % (weight, exc.order, exc.difference),
            [],
            [],
            {},
        )
    s0 = s12.coefficient(0)
    s1 = s12.coefficient(1)
    if s1 != s0 * ratio:
        return "q^1/q^0 ratio is not %d" % ratio, [], [], {}
    return "", [], [], {"multiplier": str(m)}


def _check_deg8(reg_id, order, cap):
    ring = default_ring(cap)
    lhs, rhs = deg8_display_sides(reg_id, ring)
    return _poly_witness(lhs - rhs), [], [], {}


def _check_bundle(reg_id, order, cap):
    ring = default_ring(cap)
    b = display_bundles(ring)
    xi, xi_t = b["xi"], b["xi_t"]
    if reg_id == "bundle_xi_plus":
        diff = (4 + 3 * xi_t + xi_t * xi_t) - (xi * xi - xi + 2)
    else:
        diff = (244 - 3 * xi_t - xi_t * xi_t) - (246 - xi * xi + xi)
    return _poly_witness(diff.ch), [], [], {}


def _check_sqrt(order, cap):
    ring = default_ring(cap)
    r_c = build_twisted_class("Rc", order, ring)
    q_c = build_twisted_class("Qc", order, ring)
    w_c = build_twisted_class("Wc", order, ring)
    diff = qs_mul(r_c, r_c) - qs_mul(q_c, w_c)
    return _series_witness(diff), [], [], {}


def _check_q1_bundle(reg_id, order, cap):
    ring = default_ring(cap)
    b = display_bundles(ring)
    if reg_id == "b1_check":
        expansion = witten_expand("ThetaTwisted", [b["T"], b["xi"]], max(int(order), 1))
        expected = b["B1"]
    else:
        expansion = witten_expand("Phi", [b["T"]], max(int(order), 1))
        expected = b["D1"]
    actual = expansion.get(Fraction(1))
    if actual is None:
        return "no q^1 coefficient in the expansion", [], [], {}
    return _poly_witness(actual.ch - expected.ch), [], [], {}


def _check_pc(order, cap):
    q_ring = PolyRing({"q1": 4, "q2": 8, "c": 2}, cap=8)
    g = q_ring.gens()
    q1, q2, c = g["q1"], g["q2"], g["c"]
    p1 = 2 * q1 + c * c
    p2 = 2 * q2 + q1 * q1

    pc8 = 4 * p2 - p1 * p1 - 6 * p1 * c * c + 39 * c ** 4
    pc_q = q2 - 2 * q1 * c * c + 4 * c ** 4
    ptc8 = 4 * p2 - 7 * p1 * p1 + 30 * p1 * c * c - 15 * c ** 4
    ptc_q = q2 - 3 * q1 * q1 + 4 * q1 * c * c + c ** 4
    lam_c_q = q1 - c * c

    problems = []
    if not (pc8 - 8 * pc_q).is_zero():
        problems.append("first divisibility: %s" % (pc8 - 8 * pc_q))
    if not (ptc8 - 8 * ptc_q).is_zero():
        problems.append("second divisibility: %s" % (ptc8 - 8 * ptc_q))
    if not (ptc_q - (pc_q - 3 * lam_c_q * lam_c_q)).is_zero():
        problems.append(
            "shifted form disagrees: %s" % (ptc_q - (pc_q - 3 * lam_c_q * lam_c_q))
        )

    w2, w4, w8 = Mod2Poly.gen("w2"), Mod2Poly.gen("w4"), Mod2Poly.gen("w8")
    images = {"q1": w4, "q2": w8, "c": w2}
    residues = (
        ("p_c", pc_q, w8),
        ("pt_c", ptc_q, w8 + w4 * w4 + w2 ** 4),
        ("lam_c", lam_c_q, w4 + w2 * w2),
    )
    data = {}
    for label, poly, expected in residues:
        got = mod2_reduce(poly, images)
        data["mod2_" + label] = str(got)
        if got != expected:
            problems.append("mod-2 residue of %s is %s, expected %s" % (label, got, expected))
    return "; ".join(problems), [], [], data


def _check_mod2_orientable(order, cap):
    p_ring = PolyRing({"p1": 4, "p2": 8}, cap=16)
    g = p_ring.gens()
    p1, p2 = g["p1"], g["p2"]
    w2, w4 = Mod2Poly.gen("w2"), Mod2Poly.gen("w4")
    images = {"p1": w2 * w2, "p2": w4 * w4}
    checks = (
        ("4p1^2-7p2", 4 * p1 * p1 - 7 * p2, w4 * w4),
        ("p1^2-7p2", p1 * p1 - 7 * p2, w2 ** 4 + w4 * w4),
    )
    problems = []
    data = {}
    for label, poly, expected in checks:
        got = mod2_reduce(poly, images)
        data["mod2_" + label] = str(got)
        if got != expected:
            problems.append("mod-2 residue of %s is %s, expected %s" % (label, got, expected))
    assumptions = [
        "integral degree-4k classes reduce mod 2 to squares of the degree-2k "
        "w-generators (taken as input, not derived here)"
    ]
    return "; ".join(problems), [], assumptions, data


def _check_differ(reg_id, order, cap):
    witness, findings, data = verify_differ(reg_id, cap=cap)
    return witness, findings, [], data


def verify_identity(reg_id, order=6, cap=12):
    """Run one registry check and return its VerificationReport."""
    if reg_id not in REGISTRY_IDS:
        raise ValueError("unknown registry id %r" % (reg_id,))
    started = time.perf_counter()
    if reg_id in THEOREM_IDS:
        witness, findings, assumptions, data = _check_theorem(reg_id, order, cap)
    elif reg_id in _FACT_SETTINGS:
        witness, findings, assumptions, data = _check_fact(reg_id, order, cap)
    elif reg_id in DEG8_SETTINGS:
        witness, findings, assumptions, data = _check_deg8(reg_id, order, cap)
    elif reg_id in ("bundle_xi_plus", "bundle_xi_minus"):
        witness, findings, assumptions, data = _check_bundle(reg_id, order, cap)
    elif reg_id == "sqrt_relation":
        witness, findings, assumptions, data = _check_sqrt(order, cap)
    elif reg_id in ("b1_check", "d1_check"):
        witness, findings, assumptions, data = _check_q1_bundle(reg_id, order, cap)
    elif reg_id == "pc_theorem":
        witness, findings, assumptions, data = _check_pc(order, cap)
    elif reg_id == "mod2_orientable":
        witness, findings, assumptions, data = _check_mod2_orientable(order, cap)
    else:
        witness, findings, assumptions, data = _check_differ(reg_id, order, cap)
    millis = (time.perf_counter() - started) * 1000.0
    return VerificationReport(
        id=reg_id,
        status="pass" if witness == "" else "fail",
        witness=witness,
        order=int(order),
        cap=int(cap),
        millis=round(millis, 3),
        findings=findings,
        assumptions=assumptions,
        data=data,
    )


def thread_count(job_count):
    """Worker count for registry runs; CHARMOD_THREADS caps it."""
    configured = os.environ.get("CHARMOD_THREADS", "")
    try:
        limit = int(configured)
    except ValueError:
        limit = 0
    if limit < 1:
        limit = os.cpu_count() or 1
    return max(1, min(limit, job_count))


def run_registry(ids=None, order=6, cap=12):
    """Verify the requested ids (default: all) and return reports in
    registry order regardless of scheduling."""
    ids = list(ids) if ids is not None else list(REGISTRY_IDS)
    for reg_id in ids:
        if reg_id not in REGISTRY_IDS:
            raise ValueError("unknown registry id %r" % (reg_id,))
    workers = thread_count(len(ids))
    if workers == 1:
        return [verify_identity(reg_id, order=order, cap=cap) for reg_id in ids]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda i: verify_identity(i, order=order, cap=cap), ids))
