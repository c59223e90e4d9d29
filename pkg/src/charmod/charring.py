"""Characteristic-class calculus over graded polynomial rings.

Provides exact polynomial rings with graded generators and a total-degree
cap, virtual bundles tracked by their total Chern character, multiplicative
classes built from even root functions, Adams operations, the exterior/
symmetric square splitting, q-expansions of the standard twist bundles, and
calibration of the degree-4/8/12 root data of the rank-248 bundle.
"""

from __future__ import annotations

from fractions import Fraction

from .exactmath import GRID, NotInvertible, QExpSeries, qs_exp


class DegreeError(ValueError):
    """An input polynomial has the wrong homogeneous degree."""


class DimError(ValueError):
    """An unsupported manifold dimension was requested."""


class ArgumentError(ValueError):
    """An argument is outside the supported range."""


class ParityError(ValueError):
    """A root function has an odd-degree term; only even functions are allowed."""


class SpecError(ValueError):
    """Unknown twist-bundle specification id."""


class CalibrationError(ArithmeticError):
    """The root-calibration system is singular."""


# ----------------------------------------------------------------------
# graded polynomial ring
# ----------------------------------------------------------------------


class PolyRing:
    """Commutative polynomial ring over Fraction with graded generators.

    ``generators`` maps generator names to positive integer degrees; the
    insertion order fixes the exponent-tuple layout and the display order.
    Monomials of total degree above ``cap`` are discarded on construction,
    so every element is automatically truncated.
    """

    __slots__ = ("degrees", "names", "cap", "key", "_index")

    def __init__(self, generators, cap=12):
        self.degrees = dict(generators)
        self.names = tuple(self.degrees)
        self.cap = int(cap)
        self.key = ("graded", tuple(self.degrees.items()), self.cap)
        self._index = {name: i for i, name in enumerate(self.names)}

    def monomial_degree(self, exps):
        return sum(e * self.degrees[n] for n, e in zip(self.names, exps))

    def zero(self):
        return GradedPoly(self, {})

    def one(self):
        return GradedPoly(self, {(0,) * len(self.names): Fraction(1)})

    def constant(self, value):
        return GradedPoly(self, {(0,) * len(self.names): Fraction(value)})

    def gen(self, name):
        if name not in self._index:
            raise KeyError("no generator %r in ring %r" % (name, self.names))
        exps = [0] * len(self.names)
        exps[self._index[name]] = 1
        return GradedPoly(self, {tuple(exps): Fraction(1)})

    def gens(self):
        return {name: self.gen(name) for name in self.names}

    def term(self, coeff, **exponents):
        exps = [0] * len(self.names)
        for name, e in exponents.items():
            exps[self._index[name]] = int(e)
        return GradedPoly(self, {tuple(exps): Fraction(coeff)})

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "PolyRing(%s, cap=%d)" % (dict(self.degrees), self.cap)


class GradedPoly:
    """Element of a PolyRing: exponent-tuple -> Fraction, zeros dropped."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        clean = {}
        for exps, coeff in coeffs.items():
            if coeff == 0:
                continue
            if ring.monomial_degree(exps) > ring.cap:
                continue
            clean[exps] = coeff
        self.coeffs = clean

    # -- ring structure -------------------------------------------------

    def _require_same_ring(self, other):
        if other.ring.key != self.ring.key:
            raise ValueError("mixed polynomial rings: %r vs %r" % (self.ring, other.ring))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._require_same_ring(other)
        coeffs = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            coeffs[exps] = coeffs.get(exps, Fraction(0)) + c
        return GradedPoly(self.ring, coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GradedPoly(self.ring, {e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero()
            return GradedPoly(self.ring, {e: c * other for e, c in self.coeffs.items()})
        self._require_same_ring(other)
        cap = self.ring.cap
        degree = self.ring.monomial_degree
        coeffs = {}
        for e1, c1 in self.coeffs.items():
            d1 = degree(e1)
            for e2, c2 in other.coeffs.items():
                if d1 + degree(e2) > cap:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                if e in coeffs:
                    coeffs[e] = coeffs[e] + prod
                else:
                    coeffs[e] = prod
        return GradedPoly(self.ring, coeffs)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)) or scalar == 0:
            raise ValueError("can only divide by a nonzero scalar")
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError("negative powers go through inverse()")
        out = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                out = out * base
            exponent >>= 1
            if exponent:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return (
            isinstance(other, GradedPoly)
            and other.ring.key == self.ring.key
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.ring.key, tuple(sorted(self.coeffs.items()))))

    # -- structure queries ----------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def constant_term(self):
        return self.coeffs.get((0,) * len(self.ring.names), Fraction(0))

    def homogeneous_part(self, degree):
        degree_of = self.ring.monomial_degree
        return GradedPoly(
            self.ring, {e: c for e, c in self.coeffs.items() if degree_of(e) == degree}
        )

    def max_degree(self):
        degree_of = self.ring.monomial_degree
        return max((degree_of(e) for e in self.coeffs), default=0)

    def is_homogeneous(self, degree):
        degree_of = self.ring.monomial_degree
        return all(degree_of(e) == degree for e in self.coeffs)

    def monomial_coefficient(self, **exponents):
        exps = [0] * len(self.ring.names)
        for name, e in exponents.items():
            exps[self.ring._index[name]] = int(e)
        return self.coeffs.get(tuple(exps), Fraction(0))

    # -- derived operations ----------------------------------------------

    def inverse(self):
        """Inverse of a unit: nonzero constant plus nilpotent remainder.

        Uses the geometric series 1/(c0 (1 + r)) = (1/c0) sum (-r)^k, which
        terminates because the capped ring makes r nilpotent.
        """
        c0 = self.constant_term()
        if c0 == 0:
            raise NotInvertible("constant term is zero")
        rest = (self - c0) * (Fraction(1) / c0)
        acc = self.ring.one()
        power = self.ring.one()
        while True:
            power = power * (-rest)
            if power.is_zero():
                break
            acc = acc + power
        return acc * (Fraction(1) / c0)

    def divide_by_gen(self, name):
        """Exact division by a generator; every monomial must contain it."""
        idx = self.ring._index[name]
        coeffs = {}
        for exps, c in self.coeffs.items():
            if exps[idx] < 1:
                raise ValueError("polynomial is not divisible by %s" % name)
            e = list(exps)
            e[idx] -= 1
            coeffs[tuple(e)] = c
        return GradedPoly(self.ring, coeffs)

    def substitute(self, mapping, target_ring):
        """Evaluate under generator images living in ``target_ring``.

        ``mapping`` must cover every generator that appears with a nonzero
        exponent; missing ones raise ValueError naming the generator.
        """
        # cache powers of each image
        powers = {}

        def image_power(name, k):
            if name not in mapping:
                raise ValueError("no image for generator %r" % name)
            if (name, k) not in powers:
                powers[(name, k)] = mapping[name] ** k
            return powers[(name, k)]

        out = target_ring.zero()
        for exps, coeff in self.coeffs.items():
            term = target_ring.constant(coeff)
            for name, e in zip(self.ring.names, exps):
                if e:
                    term = term * image_power(name, e)
            out = out + term
        return out

    # -- rendering --------------------------------------------------------

    def __repr__(self):
        return "GradedPoly(%s)" % (self,)

    def __str__(self):
        if not self.coeffs:
            return "0"
        degree_of = self.ring.monomial_degree
        items = sorted(self.coeffs.items(), key=lambda t: (degree_of(t[0]), t[0]))
        pieces = []
        for exps, coeff in items:
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            if not factors:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append("*".join(factors))
            elif coeff == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append("%s*%s" % (coeff, "*".join(factors)))
        return " + ".join(pieces).replace("+ -", "- ")


#: q-series whose coefficients are graded polynomials.
CohomQSeries = QExpSeries


# Standard rings ---------------------------------------------------------

#: Default generator table for the twelve-dimensional calculations.
DEFAULT_GENERATORS = {"p1": 4, "p2": 8, "p3": 12, "c": 2, "x": 4}


def default_ring(cap=12):
    return PolyRing(DEFAULT_GENERATORS, cap=cap)


# ----------------------------------------------------------------------
# power sums and multiplicative classes
# ----------------------------------------------------------------------


def power_sums_from_pontryagin(pontryagin, count):
    """Power sums of squared roots from elementary symmetric functions.

    ``pontryagin`` is the list [p1, p2, p3, ...] of available generators;
    Newton's identities give pi_1 = p1, pi_2 = p1^2 - 2 p2,
    pi_3 = p1^3 - 3 p1 p2 + 3 p3.
    """
    count = int(count)
    if count < 1 or count > 3:
        raise DegreeError("power sums supported for k in 1..3, got %d" % count)
    if len(pontryagin) < count:
        raise DegreeError(
            "power sum pi_%d needs %d elementary inputs, got %d"
            % (count, count, len(pontryagin))
        )
    p1 = pontryagin[0]
    out = [p1]
    if count >= 2:
        p2 = pontryagin[1]
        out.append(p1 * p1 - 2 * p2)
    if count >= 3:
        p3 = pontryagin[2]
        out.append(p1 * p1 * p1 - 3 * p1 * p2 + 3 * p3)
    return out


# log f(y) coefficients, keyed by the power of y, for the two root functions:
#   Ahat root  (y/2)/sinh(y/2):      -y^2/24 + y^4/2880 - y^6/181440
#   Lhat root  y/tanh(y/2) = 2*...:   y^2/12 - 7 y^4/1440 + 31 y^6/90720  (plus log 2)
_ROOT_LOG_COEFFS = {
    "Ahat": {2: Fraction(-1, 24), 4: Fraction(1, 2880), 6: Fraction(-1, 181440)},
    "Lhat": {2: Fraction(1, 12), 4: Fraction(-7, 1440), 6: Fraction(31, 90720)},
}

#: constant value of the root function at y = 0 (multiplied once per root)
_ROOT_CONSTANT = {"Ahat": Fraction(1), "Lhat": Fraction(2)}


def _exp_poly(poly):
    """exp of a graded polynomial with zero constant term (finite sum)."""
    acc = poly.ring.one()
    term = poly.ring.one()
    k = 1
    while True:
        term = term * poly * Fraction(1, k)
        if term.is_zero():
            return acc
        acc = acc + term
        k += 1


def log_series_in_power_sums(log_coeffs, power_sums):
    """sum over roots of log f(x_j) written in power sums of squared roots.

    ``log_coeffs`` maps powers of y to rational coefficients; odd powers
    raise ParityError because the power sums only see squared roots.
    """
    total = None
    for y_power, coeff in log_coeffs.items():
        if y_power % 2 != 0 or y_power <= 0:
            raise ParityError("root function has forbidden y^%d term" % y_power)
        k = y_power // 2
        if k > len(power_sums):
            continue
        piece = power_sums[k - 1] * coeff
        total = piece if total is None else total + piece
    if total is None:
        raise ParityError("empty root function log")
    return total


def multiplicative_class(kind, dim, ring, pontryagin_names=("p1", "p2", "p3")):
    """Total multiplicative class for the given even root function.

    ``kind`` is "Ahat" or "Lhat"; ``dim`` in {10, 12} sets the number of
    roots (dim/2), which only enters through the constant factor
    f(0)**(dim/2).  Pontryagin generators missing from ``ring`` are treated
    as killed by the degree cap.
    """
    if dim not in (10, 12):
        raise DimError("dimension must be 10 or 12, got %r" % (dim,))
    if kind not in _ROOT_LOG_COEFFS:
        raise ArgumentError("unknown multiplicative class %r" % (kind,))
    available = [ring.gen(n) for n in pontryagin_names if n in ring.degrees]
    count = min(3, len(available), max(1, ring.cap // 4))
    sums = power_sums_from_pontryagin(available, count)
    log_part = log_series_in_power_sums(_ROOT_LOG_COEFFS[kind], sums)
    value = _exp_poly(log_part)
    constant = _ROOT_CONSTANT[kind] ** (dim // 2)
    return value * constant


# ----------------------------------------------------------------------
# virtual bundles
# ----------------------------------------------------------------------


class VirtualBundle:
    """Virtual bundle recorded by its total Chern character.

    The degree-0 part of ``ch`` is the (virtual, rational) rank; sums are
    componentwise and the tensor product multiplies characters.
    """

    __slots__ = ("ch",)

    def __init__(self, ch):
        self.ch = ch

    @property
    def rank(self):
        return self.ch.constant_term()

    @property
    def ring(self):
        return self.ch.ring

    def ch_component(self, degree):
        return self.ch.homogeneous_part(degree)

    def __add__(self, other):
        other = self._coerce(other)
        return VirtualBundle(self.ch + other.ch)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return VirtualBundle(self.ch - other.ch)

    def __rsub__(self, other):
        other = self._coerce(other)
        return VirtualBundle(other.ch - self.ch)

    def __neg__(self):
        return VirtualBundle(-self.ch)

    def __mul__(self, other):
        """Tensor product (or integer multiple for int operands)."""
        if isinstance(other, int):
            return VirtualBundle(self.ch * other)
        other = self._coerce(other)
        return VirtualBundle(self.ch * other.ch)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, VirtualBundle):
            return other
        if isinstance(other, (int, Fraction)):
            return VirtualBundle(self.ring.constant(other))
        raise TypeError("cannot combine VirtualBundle with %r" % type(other))

    def __eq__(self, other):
        return isinstance(other, VirtualBundle) and other.ch == self.ch

    def __hash__(self):
        return hash(("vb", self.ch))

    def __repr__(self):
        return "VirtualBundle(rank=%s, ch=%s)" % (self.rank, self.ch)


def trivial_bundle(ring, rank):
    return VirtualBundle(ring.constant(rank))


def ch_tangent(dim, ring, pontryagin_names=("p1", "p2", "p3")):
    """Complexified tangent character: dim + pi_1 + pi_2/12 + pi_3/360."""
    if dim not in (10, 12):
        raise DimError("dimension must be 10 or 12, got %r" % (dim,))
    available = [ring.gen(n) for n in pontryagin_names if n in ring.degrees]
    count = min(3, len(available), max(1, ring.cap // 4))
    sums = power_sums_from_pontryagin(available, count)
    ch = ring.constant(dim) + sums[0]
    if count >= 2:
        ch = ch + sums[1] * Fraction(1, 12)
    if count >= 3:
        ch = ch + sums[2] * Fraction(1, 360)
    return VirtualBundle(ch)


def e8_ch(x):
    """Rank-248 bundle with ch = 248 - 60 x + 6 x^2 - x^3/3 (so c2 = 60 x)."""
    if not x.is_homogeneous(4):
        raise DegreeError("x must be homogeneous of degree 4")
    ring = x.ring
    ch = ring.constant(248) - 60 * x + 6 * (x * x) - (x * x * x) * Fraction(1, 3)
    return VirtualBundle(ch)


def line_pair_ch(c):
    """Rank-2 bundle exp(c) + exp(-c) for a degree-2 class c."""
    if not c.is_homogeneous(2):
        raise DegreeError("c must be homogeneous of degree 2")
    ch = _exp_poly(c) + _exp_poly(-c)
    return VirtualBundle(ch)


def vb_adams(bundle, k):
    """Adams operation: scales each degree-2j character component by k**j."""
    k = int(k)
    if k < 1:
        raise ArgumentError("Adams operations need k >= 1, got %d" % k)
    ring = bundle.ring
    degree_of = ring.monomial_degree
    coeffs = {}
    for exps, coeff in bundle.ch.coeffs.items():
        d = degree_of(exps)
        coeffs[exps] = coeff * Fraction(k) ** (d // 2)
    return VirtualBundle(GradedPoly(ring, coeffs))


def vb_lambda2_sym2(bundle):
    """Exterior and symmetric square of a (virtual) bundle.

    ch(L2) = (ch(E)^2 - ch(psi^2 E)) / 2 and ch(S2) = (ch(E)^2 + ch(psi^2 E)) / 2.
    """
    square = bundle.ch * bundle.ch
    psi2 = vb_adams(bundle, 2).ch
    lam = VirtualBundle((square - psi2) * Fraction(1, 2))
    sym = VirtualBundle((square + psi2) * Fraction(1, 2))
    return lam, sym


# ----------------------------------------------------------------------
# twist-bundle q-expansions
# ----------------------------------------------------------------------

WITTEN_SPEC_IDS = ("Theta", "ThetaTwisted", "Theta1", "Theta2", "Theta3", "Phi")


def _reduced(bundle):
    rank = bundle.rank
    if rank.denominator != 1:
        raise ArgumentError("reduction needs an integer rank, got %s" % rank)
    return bundle - trivial_bundle(bundle.ring, rank)


def _accumulate(terms, key, piece):
    if key in terms:
        terms[key] = terms[key] + piece
    else:
        terms[key] = piece


def _witten_log(order, families):
    """Assemble the log of a product of symmetric/exterior families.

    ``families`` is a list of (style, sign, steps, ch_psi) where style is
    "sym" or "ext", ``sign`` multiplies the formal variable (+1 or -1),
    ``steps`` lists grid-unit exponents of the formal variable (one per
    tensor factor), and ``ch_psi(k)`` returns the reduced character of the
    k-th Adams image.
    """
    terms = {}
    limit = GRID * order
    for style, sign, steps, ch_psi in families:
        for step in steps:
            k = 1
            while step * k <= limit:
                if style == "sym":
                    coeff = Fraction(1, k)
                else:  # exterior: log Lambda_t = sum (-1)^(k+1) t^k /k
                    coeff = Fraction((-1) ** (k + 1), k)
                if sign < 0:
                    coeff = coeff * Fraction((-1) ** k)
                _accumulate(terms, step * k, ch_psi(k) * coeff)
                k += 1
    return terms


def witten_expand(spec_id, inputs, order, ring=None):
    """q-expansion of a standard twist bundle as exponent -> VirtualBundle.

    ``inputs`` supplies the ingredient bundles ([tangent] or
    [tangent, twist]); exponents are Fractions (whole for every id except
    Theta2/Theta3, whose support is half-integral).
    """
    if spec_id not in WITTEN_SPEC_IDS:
        raise SpecError("unknown twist-bundle id %r" % (spec_id,))
    if not inputs:
        raise ArgumentError("need at least the tangent input")
    tangent = inputs[0]
    ring = ring or tangent.ring
    order = int(order)
    psi_cache = {}

    def tangent_psi(k):
        if k not in psi_cache:
            psi_cache[k] = _reduced(vb_adams(tangent, k)).ch
        return psi_cache[k]

    whole = [GRID * m for m in range(1, order + 1)]
    half = [12 * (2 * u - 1) for u in range(1, order + 2) if 12 * (2 * u - 1) <= GRID * order]

    families = []
    if spec_id in ("Theta", "Phi"):
        families.append(("sym", +1, whole, tangent_psi))
    if spec_id in ("Theta1", "Phi"):
        families.append(("ext", +1, whole, tangent_psi))
    if spec_id in ("Theta2", "Phi"):
        families.append(("ext", -1, half, tangent_psi))
    if spec_id in ("Theta3", "Phi"):
        families.append(("ext", +1, half, tangent_psi))
    if spec_id == "ThetaTwisted":
        if len(inputs) < 2:
            raise ArgumentError("twisted expansion needs [tangent, twist]")
        twist = inputs[1]
        twist_cache = {}

        def twist_psi(k):
            if k not in twist_cache:
                twist_cache[k] = _reduced(vb_adams(twist, k)).ch
            return twist_cache[k]

        families.append(("sym", +1, whole, tangent_psi))
        families.append(("ext", +1, whole, twist_psi))
        families.append(("ext", -1, half, twist_psi))
        families.append(("ext", +1, half, twist_psi))

    log_terms = _witten_log(order, families)
    log_series = CohomQSeries(ring, order, log_terms)
    expanded = qs_exp(log_series)
    return {
        Fraction(k, GRID): VirtualBundle(coeff) for k, coeff in sorted(expanded.terms.items())
    }


def witten_character(spec_id, inputs, order, ring=None):
    """Same expansion as `witten_expand` but as a CohomQSeries of characters."""
    bundles = witten_expand(spec_id, inputs, order, ring=ring)
    ring = ring or inputs[0].ring
    terms = {int(exp * GRID): vb.ch for exp, vb in bundles.items()}
    return CohomQSeries(ring, int(order), terms)


# ----------------------------------------------------------------------
# root calibration for the rank-248 bundle
# ----------------------------------------------------------------------


def calibrate_e8_roots(x, order=1):
    """Solve for degree-4/8/12 root power sums reproducing
    ch = 248 - 60x + 6x^2 - x^3/3 in the q^1 character coefficient.

    Expands the q^1 coefficient over the free ring in (g1, g2, g3) and
    matches it degree by degree against the target.  The degree-4 slot
    determines g1 (= -2x).  The degree-8 and degree-12 slots are degenerate
    within the degree cap: every Weyl-invariant of the eight root variables
    in these degrees is a polynomial in the first power sum, so the g2/g3
    coefficients vanish identically and their equations must already hold
    under the solved g1.  Those consistency conditions are checked exactly;
    the free slots are then completed canonically by g2 = g1^2, g3 = g1^3
    (the values any single-root configuration realizes).  Downstream
    characters are independent of that completion.  A nonzero coefficient
    would make the system genuinely triangular and is solved when present;
    an unsolvable or inconsistent system raises CalibrationError.
    """
    from . import thetamod  # deferred: thetamod uses this module's rings

    if not x.is_homogeneous(4):
        raise DegreeError("x must be homogeneous of degree 4")

    g_ring = PolyRing({"g1": 4, "g2": 8, "g3": 12}, cap=12)
    g1, g2, g3 = g_ring.gen("g1"), g_ring.gen("g2"), g_ring.gen("g3")
    character = thetamod.e8_character((g1, g2, g3), max(1, int(order)))
    q1_coeff = character.coefficient(1)

    alpha = q1_coeff.monomial_coefficient(g1=1)
    beta1 = q1_coeff.monomial_coefficient(g1=2)
    beta2 = q1_coeff.monomial_coefficient(g2=1)
    gamma1 = q1_coeff.monomial_coefficient(g1=3)
    gamma2 = q1_coeff.monomial_coefficient(g1=1, g2=1)
    gamma3 = q1_coeff.monomial_coefficient(g3=1)
    if alpha == 0:
        raise CalibrationError("degree-4 slot is singular")

    target = e8_ch(x).ch
    t4 = target.homogeneous_part(4)
    t8 = target.homogeneous_part(8)
    t12 = target.homogeneous_part(12)

    g1_val = t4 * (Fraction(1) / alpha)
    g1_sq = g1_val * g1_val

    if beta2 != 0:
        g2_val = (t8 - g1_sq * beta1) * (Fraction(1) / beta2)
    else:
        if g1_sq * beta1 != t8:
            raise CalibrationError("degree-8 slot is singular and inconsistent")
        g2_val = g1_sq

    g1_cube = g1_sq * g1_val
    if gamma3 != 0:
        g3_val = (t12 - g1_cube * gamma1 - g1_val * g2_val * gamma2) * (
            Fraction(1) / gamma3
        )
    else:
        if g1_cube * gamma1 + g1_val * g2_val * gamma2 != t12:
            raise CalibrationError("degree-12 slot is singular and inconsistent")
        g3_val = g1_cube
    return g1_val, g2_val, g3_val
