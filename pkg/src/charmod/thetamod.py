"""Modular q-series: Eisenstein series, theta products and their log-ratios,
the rank-248 character built from eighth powers of theta constants, the
even unimodular rank-8 lattice theta, numeric checks of the modular
transformation laws, and matching of q-series against one-dimensional
spaces of modular forms.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

from .exactmath import GRID, RAT_RING, QExpSeries, qs_exp, qs_inv, qs_log, qs_mul
from .charring import ArgumentError, CohomQSeries, PolyRing, _exp_poly


class InternalCancellationError(ArithmeticError):
    """Fractional-exponent terms survived a sum that must be integral."""


class PrecisionError(ArithmeticError):
    """A numeric evaluation cannot reach the requested tolerance."""


class NotProportional(ArithmeticError):
    """A q-series is not a constant multiple of the expected basis form."""

    def __init__(self, order, difference):
        super().__init__(
            "mismatch at q^%s: difference %s" % (order, difference)
        )
        self.order = order
        self.difference = difference


# ----------------------------------------------------------------------
# scalar q-series
# ----------------------------------------------------------------------


def _sigma(power, n):
    return sum(d ** power for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def eisenstein(k, order):
    """Normalized Eisenstein series E_2, E_4 or E_6 truncated at q^order."""
    if k not in (2, 4, 6):
        raise ArgumentError("Eisenstein weight must be 2, 4 or 6, got %r" % (k,))
    front = {2: -24, 4: 240, 6: -504}[k]
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        coeffs.append(Fraction(front * _sigma(k - 1, n)))
    return QExpSeries.from_q_coeffs(RAT_RING, order, coeffs)


@lru_cache(maxsize=None)
def phi(order):
    """The product prod_{n>=1} (1 - q^n) truncated at q^order."""
    out = QExpSeries.one(RAT_RING, order)
    for n in range(1, order + 1):
        factor = QExpSeries(RAT_RING, order, {0: Fraction(1), GRID * n: Fraction(-1)})
        out = qs_mul(out, factor)
    return out


def series_in_ring(series, ring):
    """Lift a rational q-series to constant coefficients in a PolyRing."""
    return CohomQSeries(ring, series.order, {k: ring.constant(c) for k, c in series.terms.items()})


# ----------------------------------------------------------------------
# theta products and their logarithmic ratios
# ----------------------------------------------------------------------

THETA_KINDS = ("theta", "theta1", "theta2", "theta3")

#: q^0 logs of the classical prefactors:
#:   (y/2)/sinh(y/2)  for the odd theta's normalized reciprocal ratio,
#:   cosh(y/2)        for the first even ratio, nothing for the other two.
_PREFACTOR_LOG = {
    "theta": {2: Fraction(-1, 24), 4: Fraction(1, 2880), 6: Fraction(-1, 181440)},
    "theta1": {2: Fraction(1, 8), 4: Fraction(-1, 192), 6: Fraction(1, 2880)},
    "theta2": {},
    "theta3": {},
}


def _y_ring():
    return PolyRing({"y": 2}, cap=12)


def _geometric_inverse(ring, order, base_exponent, unit_coeff):
    """(1 - unit_coeff * q^(base/GRID))^{-1} as an explicit geometric sum."""
    terms = {}
    m = 0
    power = ring.one()
    while m * base_exponent <= GRID * order:
        terms[m * base_exponent] = power
        power = power * unit_coeff
        m += 1
    return CohomQSeries(ring, order, terms)


def _ratio_series(kind, order):
    """The normalized theta ratio as a q-series over the y-ring.

    theta:  y theta'(0)/theta(y), via the reciprocal product
            (y/2)/sinh(y/2) * prod (1-q^j)^2 / ((1-e^y q^j)(1-e^-y q^j));
    theta1: cosh(y/2) * prod (1+e^y q^j)(1+e^-y q^j) / (1+q^j)^2;
    theta2/theta3 likewise with exponents j-1/2 and signs -/+.
    """
    ring = _y_ring()
    y = ring.gen("y")
    out = CohomQSeries.one(ring, order)

    prefactor_log = ring.zero()
    for y_power, coeff in _PREFACTOR_LOG[kind].items():
        prefactor_log = prefactor_log + ring.term(coeff, y=y_power)
    if not prefactor_log.is_zero():
        out = out.scale(_exp_poly(prefactor_log))

    if kind in ("theta", "theta1"):
        bases = [GRID * j for j in range(1, order + 1)]
    else:
        bases = []
        j = 1
        while 12 * (2 * j - 1) <= GRID * order:
            bases.append(12 * (2 * j - 1))
            j += 1

    exp_plus = _exp_poly(y)
    exp_minus = _exp_poly(-y)
    for base in bases:
        if kind == "theta":
            numer = CohomQSeries(
                ring, order, {0: ring.one(), base: ring.constant(-2), 2 * base: ring.one()}
            )
            inv_plus = _geometric_inverse(ring, order, base, exp_plus)
            inv_minus = _geometric_inverse(ring, order, base, exp_minus)
            out = qs_mul(qs_mul(out, numer), qs_mul(inv_plus, inv_minus))
        elif kind == "theta2":
            factor_plus = CohomQSeries(ring, order, {0: ring.one(), base: -exp_plus})
            factor_minus = CohomQSeries(ring, order, {0: ring.one(), base: -exp_minus})
            inv = _geometric_inverse(ring, order, base, ring.one())
            out = qs_mul(qs_mul(out, factor_plus), qs_mul(factor_minus, qs_mul(inv, inv)))
        else:  # theta1 on whole powers, theta3 on half powers
            factor_plus = CohomQSeries(ring, order, {0: ring.one(), base: exp_plus})
            factor_minus = CohomQSeries(ring, order, {0: ring.one(), base: exp_minus})
            inv = _geometric_inverse(ring, order, base, -ring.one())
            out = qs_mul(qs_mul(out, factor_plus), qs_mul(factor_minus, qs_mul(inv, inv)))
    return out


@lru_cache(maxsize=None)
def theta_log_ratio(kind, order):
    """Coefficients [c_1(q), c_2(q), c_3(q)] of y^2, y^4, y^6 in the log ratio.

    For kind "lhat" the four individual kinds are summed, which reproduces
    the logarithm of y/tanh(y/2) at q^0 (the per-root constant 2 is left to
    the caller).
    """
    if kind == "lhat":
        parts = [theta_log_ratio(k, order) for k in THETA_KINDS]
        return tuple(
            parts[0][i] + parts[1][i] + parts[2][i] + parts[3][i] for i in range(3)
        )
    if kind not in THETA_KINDS:
        raise ArgumentError("unknown theta kind %r" % (kind,))
    log_series = qs_log(_ratio_series(kind, order))
    out = []
    for k in (1, 2, 3):
        terms = {}
        for grid_key, poly in log_series.terms.items():
            coeff = poly.monomial_coefficient(y=2 * k)
            if coeff != 0:
                terms[grid_key] = coeff
        out.append(QExpSeries(RAT_RING, order, terms))
    # sanity: nothing survives in odd powers of y
    for grid_key, poly in log_series.terms.items():
        for exps in poly.coeffs:
            if exps[0] % 2 == 1:
                raise InternalCancellationError(
                    "odd y-power y^%d at q-grid %d" % (exps[0], grid_key)
                )
    return tuple(out)


@lru_cache(maxsize=None)
def theta_zero_power8(kind, order):
    """Eighth power of a theta constant as an exact q-series.

    theta1: 2^8 q prod ((1-q^j)(1+q^j)^2)^8, support on whole powers;
    theta2/theta3: prod ((1-q^j)(1 -/+ q^(j-1/2))^2)^8, half-integral support.
    """
    if kind == "theta1":
        out = QExpSeries(RAT_RING, order, {GRID: Fraction(256)})
        for j in range(1, order + 1):
            base = GRID * j
            factor = QExpSeries(
                RAT_RING,
                order,
                {0: Fraction(1), base: Fraction(-1)},
            )
            plus = QExpSeries(RAT_RING, order, {0: Fraction(1), base: Fraction(1)})
            piece = qs_mul(factor, qs_mul(plus, plus))
            out = qs_mul(out, piece ** 8)
        return out
    if kind in ("theta2", "theta3"):
        sign = Fraction(-1) if kind == "theta2" else Fraction(1)
        out = QExpSeries.one(RAT_RING, order)
        for j in range(1, order + 1):
            whole = QExpSeries(RAT_RING, order, {0: Fraction(1), GRID * j: Fraction(-1)})
            half = QExpSeries(RAT_RING, order, {0: Fraction(1), 12 * (2 * j - 1): sign})
            piece = qs_mul(whole, qs_mul(half, half))
            out = qs_mul(out, piece ** 8)
        return out
    raise ArgumentError("unknown even theta kind %r" % (kind,))


def theta_eighth_sum(order):
    """(theta1^8 + theta2^8 + theta3^8)(0) / 2 as an exact q-series."""
    total = (
        theta_zero_power8("theta1", order)
        + theta_zero_power8("theta2", order)
        + theta_zero_power8("theta3", order)
    )
    return total.scale(Fraction(1, 2))


# ----------------------------------------------------------------------
# rank-248 character and rank-8 lattice theta
# ----------------------------------------------------------------------


def e8_character(g, order):
    """Character q-series from degree-4/8/12 classes (g1, g2, g3).

    Computes (1/2) sum over the three even theta kinds of
    theta_a(0)^8 * exp(sum_k c_{a,k}(q) g_k), then divides by phi^8.
    The pre-division sum must live on whole q-powers; surviving fractional
    exponents raise InternalCancellationError.
    """
    g1, g2, g3 = g
    ring = g1.ring
    for value, degree in ((g1, 4), (g2, 8), (g3, 12)):
        if not value.is_zero() and not value.is_homogeneous(degree):
            raise ArgumentError("g-class of degree %d is not homogeneous" % degree)
    order = int(order)

    acc = CohomQSeries.zero(ring, order)
    for kind in ("theta1", "theta2", "theta3"):
        c_series = theta_log_ratio(kind, order)
        log_terms = {}
        for c_k, g_k in zip(c_series, (g1, g2, g3)):
            if g_k.is_zero():
                continue
            for grid_key, coeff in c_k.terms.items():
                piece = g_k * coeff
                if grid_key in log_terms:
                    log_terms[grid_key] = log_terms[grid_key] + piece
                else:
                    log_terms[grid_key] = piece
        exponential = qs_exp(CohomQSeries(ring, order, log_terms))
        theta8 = series_in_ring(theta_zero_power8(kind, order), ring)
        acc = acc + qs_mul(theta8, exponential)
    acc = acc.scale(Fraction(1, 2))

    for grid_key in acc.terms:
        if grid_key % GRID != 0:
            raise InternalCancellationError(
                "fractional exponent q^(%d/%d) survived the theta sum" % (grid_key, GRID)
            )

    phi8 = series_in_ring(phi(order) ** 8, ring)
    return qs_mul(acc, qs_inv(phi8))


def e8_lattice_theta(order):
    """Theta series of the even unimodular rank-8 lattice.

    Counts vectors of each norm in the union of the integral part (integer
    coordinates, even coordinate sum) and the half-integral coset, by
    dynamic programming over coordinates with norm pruning.
    """
    order = int(order)
    if order < 0 or order > 12:
        raise ArgumentError("supported through q^12, got order %r" % (order,))
    budget = 2 * order  # max squared norm

    # integral part: v in Z^8, sum v_i even, |v|^2 <= budget
    # state: (squared norm so far, parity of coordinate sum) -> count
    states = {(0, 0): 1}
    reach = int(budget ** 0.5) + 1
    for _ in range(8):
        nxt = {}
        for (norm, parity), count in states.items():
            for v in range(-reach, reach + 1):
                n2 = norm + v * v
                if n2 > budget:
                    continue
                key = (n2, (parity + v) % 2)
                nxt[key] = nxt.get(key, 0) + count
        states = nxt
    counts = {}
    for (norm, parity), count in states.items():
        if parity == 0 and norm % 2 == 0:
            counts[norm // 2] = counts.get(norm // 2, 0) + count

    # half-integral coset: v_i = w_i + 1/2, track sum (w^2 + w) and parity of sum w
    states = {(0, 0): 1}
    for _ in range(8):
        nxt = {}
        for (acc, parity), count in states.items():
            w = -reach - 1
            while w <= reach:
                step = w * w + w
                if acc + step <= budget - 2:
                    key = (acc + step, (parity + w) % 2)
                    nxt[key] = nxt.get(key, 0) + count
                w += 1
        states = nxt
    for (acc, parity), count in states.items():
        if parity == 0:
            norm2 = acc + 2  # |v|^2 = sum(w^2 + w) + 8/4
            if norm2 % 2 == 0 and norm2 // 2 <= order:
                counts[norm2 // 2] = counts.get(norm2 // 2, 0) + count

    return QExpSeries(
        RAT_RING, order, {GRID * n: Fraction(c) for n, c in counts.items()}
    )


# ----------------------------------------------------------------------
# numeric transformation checks
# ----------------------------------------------------------------------


def _theta_numeric(kind, v, tau, terms):
    # Fractional q-powers are defined through tau (q^r := exp(2 pi i tau r)),
    # not as principal powers of q, so the shift law picks up the right phase.
    q = cmath.exp(2j * cmath.pi * tau)
    q_eighth = cmath.exp(1j * cmath.pi * tau / 4)
    q_half = cmath.exp(1j * cmath.pi * tau)
    z = cmath.exp(2j * cmath.pi * v)
    if kind == "theta":
        out = 2 * q_eighth * cmath.sin(cmath.pi * v)
    elif kind == "theta1":
        out = 2 * q_eighth * cmath.cos(cmath.pi * v)
    else:
        out = 1
    for j in range(1, terms + 1):
        qj = q ** j
        qh = q_half ** (2 * j - 1)
        if kind == "theta":
            out *= (1 - qj) * (1 - z * qj) * (1 - qj / z)
        elif kind == "theta1":
            out *= (1 - qj) * (1 + z * qj) * (1 + qj / z)
        elif kind == "theta2":
            out *= (1 - qj) * (1 - z * qh) * (1 - qh / z)
        elif kind == "theta3":
            out *= (1 - qj) * (1 + z * qh) * (1 + qh / z)
    return out


def _e2_numeric(tau, terms):
    q = cmath.exp(2j * cmath.pi * tau)
    out = 1 + 0j
    for n in range(1, terms + 1):
        out -= 24 * _sigma(1, n) * q ** n
    return out


def _tail_bound(tau, v, terms):
    q_abs = abs(cmath.exp(2j * cmath.pi * tau))
    z_abs = abs(cmath.exp(2j * cmath.pi * v)) if v is not None else 1.0
    growth = max(z_abs, 1.0 / z_abs, 1.0)
    if q_abs >= 1:
        return float("inf")
    # dropped factors deviate from 1 by <= 3*growth*q^j each; bound the sum of
    # the tail and multiply by a bound on the product magnitude itself
    lead = q_abs ** (terms + 0.5) * growth
    magnitude = cmath.exp(6.0 * growth * q_abs / (1 - q_abs)).real
    return 60.0 * (terms + 2) ** 2 * lead / (1 - q_abs) * magnitude


NUMERIC_KINDS = THETA_KINDS + ("E2",)


def numeric_transform_check(kind, v, tau, terms=40, tol=1e-8):
    """Residuals of the shift and inversion laws at a numeric point.

    Returns a dict with both residuals, the estimated truncation tail, and
    a ``passed`` flag (residuals below ``tol``).  Raises ArgumentError off
    the upper half-plane and PrecisionError when the truncation tail cannot
    be pushed below tol/10 for every series involved.
    """
    if kind not in NUMERIC_KINDS:
        raise ArgumentError("unknown kind %r" % (kind,))
    tau = complex(tau)
    if tau.imag <= 0:
        raise ArgumentError("tau must be in the upper half-plane")
    v = 0j if v is None else complex(v)
    inv_tau = -1 / tau

    worst = max(
        _tail_bound(tau, v, terms),
        _tail_bound(tau + 1, v, terms),
        _tail_bound(inv_tau, v, terms),
        _tail_bound(tau, tau * v, terms),
    )
    if not worst < tol / 10:
        raise PrecisionError(
            "truncation tail %.3e exceeds tol/10 = %.3e; raise terms" % (worst, tol / 10)
        )

    root = cmath.sqrt(tau / 1j)
    gauss = cmath.exp(1j * cmath.pi * tau * v * v)

    if kind == "E2":
        shift_residual = abs(_e2_numeric(tau + 1, terms) - _e2_numeric(tau, terms))
        inversion_residual = abs(
            _e2_numeric(inv_tau, terms)
            - (tau * tau * _e2_numeric(tau, terms) - 6j * tau / cmath.pi)
        )
    else:
        shift_phase = {"theta": cmath.exp(1j * cmath.pi / 4),
                       "theta1": cmath.exp(1j * cmath.pi / 4),
                       "theta2": 1,
                       "theta3": 1}[kind]
        shift_partner = {"theta": "theta", "theta1": "theta1",
                         "theta2": "theta3", "theta3": "theta2"}[kind]
        shift_residual = abs(
            _theta_numeric(kind, v, tau + 1, terms)
            - shift_phase * _theta_numeric(shift_partner, v, tau, terms)
        )
        inversion_prefactor = {"theta": -1j * root, "theta1": root,
                               "theta2": root, "theta3": root}[kind]
        inversion_partner = {"theta": "theta", "theta1": "theta2",
                             "theta2": "theta1", "theta3": "theta3"}[kind]
        inversion_residual = abs(
            _theta_numeric(kind, v, inv_tau, terms)
            - inversion_prefactor * gauss * _theta_numeric(inversion_partner, tau * v, tau, terms)
        )

    return {
        "kind": kind,
        "tau": tau,
        "v": None if kind == "E2" else v,
        "shift_residual": shift_residual,
        "inversion_residual": inversion_residual,
        "tail_bound": worst,
        "passed": shift_residual < tol and inversion_residual < tol,
    }


# ----------------------------------------------------------------------
# modular-basis matching
# ----------------------------------------------------------------------

MODULAR_WEIGHTS = (10, 14)


@lru_cache(maxsize=None)
def modular_basis(weight, order):
    """Generator of the one-dimensional weight space: E4*E6 or E4^2*E6."""
    if weight not in MODULAR_WEIGHTS:
        raise ArgumentError("weight must be 10 or 14, got %r" % (weight,))
    e4 = eisenstein(4, order)
    e6 = eisenstein(6, order)
    if weight == 10:
        return qs_mul(e4, e6)
    return qs_mul(qs_mul(e4, e4), e6)


def match_modular_basis(series, weight):
    """Assert ``series = m * basis`` with m the q^0 coefficient; return m.

    Works for rational series and for series with polynomial coefficients.
    Raises NotProportional carrying the first failing exponent and the
    difference there.
    """
    basis = modular_basis(weight, series.order)
    m = series.coefficient(0)
    zero = series.ring.zero()
    keys = set(series.terms) | {GRID * n for n in range(series.order + 1)}
    for grid_key in sorted(keys):
        actual = series.terms.get(grid_key, zero)
        if grid_key % GRID == 0:
            expected = m * basis.coefficient(Fraction(grid_key, GRID))
        else:
            expected = zero
        if actual != expected:
            raise NotProportional(Fraction(grid_key, GRID), actual - expected)
    return m
