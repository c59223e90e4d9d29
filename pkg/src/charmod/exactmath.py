"""Exact truncated q-series arithmetic on a 1/24 exponent grid.

A series here is a finite sum ``sum_k a_k * q**(k/24)`` with integer grid
exponents ``0 <= k <= 24*order``, where ``order`` counts whole powers of q.
Coefficients live in an exact commutative ring: `fractions.Fraction` scalars
(via `RAT_RING`) or any caller-supplied ring object exposing ``zero()``,
``one()`` and a hashable ``key``.  No floats ever enter these code paths.
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction

#: Denominator of the exponent grid.  Every exponent is k/GRID with k an
#: integer, which accommodates q**(1/24), q**(1/8) and q**(1/2) exactly.
GRID = 24


class RingMismatchError(TypeError):
    """Two series over different coefficient rings were combined."""


class GridError(ValueError):
    """An operation required whole-q exponents but met fractional ones."""


class NotInvertible(ArithmeticError):
    """A series (or coefficient) has no inverse in the truncated ring."""


class NotExponentiable(ArithmeticError):
    """The q^0 coefficient violates an exp/log precondition."""


class ZMod:
    """A residue in Z/m, normalized to ``0 <= value < modulus``."""

    __slots__ = ("modulus", "value")

    def __init__(self, modulus, value=0):
        modulus = int(modulus)
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        self.modulus = modulus
        self.value = int(value) % modulus

    def _coerce(self, other):
        if isinstance(other, ZMod):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli %d and %d" % (self.modulus, other.modulus))
            return other
        if isinstance(other, int):
            return ZMod(self.modulus, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ZMod(self.modulus, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ZMod(self.modulus, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ZMod(self.modulus, other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ZMod(self.modulus, self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return ZMod(self.modulus, -self.value)

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError("negative powers are not defined in Z/m")
        return ZMod(self.modulus, pow(self.value, exponent, self.modulus))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.modulus
        return (
            isinstance(other, ZMod)
            and other.modulus == self.modulus
            and other.value == self.value
        )

    def __hash__(self):
        return hash((self.modulus, self.value))

    def __repr__(self):
        return "ZMod(%d, %d)" % (self.modulus, self.value)


class RatRing:
    """Coefficient ring of exact rationals."""

    key = "rat"

    @staticmethod
    def zero():
        return Fraction(0)

    @staticmethod
    def one():
        return Fraction(1)


RAT_RING = RatRing()


def _coeff_inverse(coeff):
    """Invert a coefficient: rationals directly, ring elements via .inverse()."""
    if isinstance(coeff, (Fraction, int)):
        if coeff == 0:
            raise NotInvertible("zero coefficient has no inverse")
        return Fraction(1) / coeff
    return coeff.inverse()


def _coeff_constant_term(coeff):
    """Rational part of a coefficient (the coefficient itself for scalars)."""
    if isinstance(coeff, (Fraction, int)):
        return Fraction(coeff)
    return coeff.constant_term()


class QExpSeries:
    """Truncated q-expansion with exact coefficients.

    ``terms`` maps integer grid exponents (units of 1/24 of a whole q power)
    to nonzero coefficients.  Binary operations require identical coefficient
    rings and truncate to the smaller order.
    """

    __slots__ = ("ring", "order", "terms")

    def __init__(self, ring, order, terms=None):
        order = int(order)
        if order < 0:
            raise ValueError("order must be >= 0")
        self.ring = ring
        self.order = order
        clean = {}
        if terms:
            zero = ring.zero()
            limit = GRID * order
            for k, coeff in terms.items():
                k = int(k)
                if k < 0:
                    raise GridError("negative exponent %d/%d" % (k, GRID))
                if k > limit:
                    continue
                if coeff != zero:
                    clean[k] = coeff
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, ring, order):
        return cls(ring, order)

    @classmethod
    def one(cls, ring, order):
        return cls(ring, order, {0: ring.one()})

    @classmethod
    def from_q_coeffs(cls, ring, order, coeffs):
        """Series from a list of whole-power coefficients [a_0, a_1, ...]."""
        return cls(ring, order, {GRID * n: c for n, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, ring, order, grid_exponent, coeff):
        return cls(ring, order, {int(grid_exponent): coeff})

    # ------------------------------------------------------------------
    # accessors
    # ------------------------------------------------------------------

    def coefficient(self, exponent):
        """Coefficient of q**exponent; exponent is an int or Fraction."""
        k = Fraction(exponent) * GRID
        if k.denominator != 1:
            raise GridError("exponent %s is off the 1/%d grid" % (exponent, GRID))
        return self.terms.get(int(k), self.ring.zero())

    def support(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def min_grid_exponent(self):
        return min(self.terms) if self.terms else None

    def has_whole_support(self):
        return all(k % GRID == 0 for k in self.terms)

    def as_q_coeffs(self):
        """List [a_0, ..., a_order]; raises GridError on fractional support."""
        if not self.has_whole_support():
            raise GridError("series has exponents off the whole-q grid")
        zero = self.ring.zero()
        return [self.terms.get(GRID * n, zero) for n in range(self.order + 1)]

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def _require_same_ring(self, other):
        if not isinstance(other, QExpSeries):
            raise RingMismatchError("expected a QExpSeries, got %r" % type(other))
        if other.ring.key != self.ring.key:
            raise RingMismatchError(
                "coefficient rings differ: %r vs %r" % (self.ring.key, other.ring.key)
            )

    def __add__(self, other):
        self._require_same_ring(other)
        order = min(self.order, other.order)
        terms = dict(self.terms)
        for k, coeff in other.terms.items():
            terms[k] = terms.get(k, self.ring.zero()) + coeff
        return QExpSeries(self.ring, order, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QExpSeries(self.ring, self.order, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        return qs_mul(self, other)

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError("negative series powers go through qs_inv")
        result = QExpSeries.one(self.ring, self.order)
        for _ in range(exponent):
            result = qs_mul(result, self)
        return result

    def scale(self, coeff):
        """Multiply every coefficient by a fixed ring element or rational."""
        if isinstance(coeff, int):
            coeff = Fraction(coeff)
        return QExpSeries(self.ring, self.order, {k: c * coeff for k, c in self.terms.items()})

    def q_shift(self, grid_exponent):
        """Multiply by q**(grid_exponent/24)."""
        shift = int(grid_exponent)
        if shift < 0:
            raise GridError("negative shifts would leave the grid")
        return QExpSeries(self.ring, self.order, {k + shift: c for k, c in self.terms.items()})

    def truncate(self, order):
        order = int(order)
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return QExpSeries(self.ring, order, self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, QExpSeries)
            and other.ring.key == self.ring.key
            and other.order == self.order
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring.key, self.order, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def __repr__(self):
        return "QExpSeries(order=%d, %s)" % (self.order, self._render())

    def __str__(self):
        return self._render()

    def _render(self):
        if not self.terms:
            return "0"
        pieces = []
        for k in sorted(self.terms):
            exp = Fraction(k, GRID)
            coeff = self.terms[k]
            if exp == 0:
                pieces.append("(%s)" % (coeff,))
            elif exp.denominator == 1:
                pieces.append("(%s)*q^%d" % (coeff, exp.numerator))
            else:
                pieces.append("(%s)*q^(%s)" % (coeff, exp))
        return " + ".join(pieces)


def qs_mul(a, b):
    """Cauchy product of two series, truncated to the smaller order."""
    a._require_same_ring(b)
    order = min(a.order, b.order)
    limit = GRID * order
    terms = {}
    for ka, ca in a.terms.items():
        if ka > limit:
            continue
        for kb, cb in b.terms.items():
            k = ka + kb
            if k > limit:
                continue
            prod = ca * cb
            if k in terms:
                terms[k] = terms[k] + prod
            else:
                terms[k] = prod
    return QExpSeries(a.ring, order, terms)


def qs_inv(a):
    """Multiplicative inverse of a series with whole-q support and unit q^0 term.

    Uses the standard convolution recurrence b_n = -a_0^{-1} * sum_{j>=1} a_j b_{n-j}.
    """
    if not a.has_whole_support():
        raise GridError("inverse needs whole-q exponents")
    a0 = a.terms.get(0)
    if a0 is None:
        raise NotInvertible("q^0 coefficient is zero")
    inv0 = _coeff_inverse(a0)
    coeffs = a.as_q_coeffs()
    zero = a.ring.zero()
    out = [inv0]
    for n in range(1, a.order + 1):
        acc = zero
        for j in range(1, n + 1):
            if coeffs[j] != zero:
                acc = acc + coeffs[j] * out[n - j]
        out.append(-(inv0 * acc))
    return QExpSeries.from_q_coeffs(a.ring, a.order, out)


def _exp_nilpotent(ring, element):
    """exp of a nilpotent ring element as a finite sum."""
    acc = ring.one()
    term = ring.one()
    k = 1
    zero = ring.zero()
    while True:
        term = term * element * Fraction(1, k)
        if term == zero:
            return acc
        acc = acc + term
        k += 1
        if k > 10000:
            raise NotExponentiable("q^0 coefficient does not appear nilpotent")


def _log_one_plus_nilpotent(ring, element):
    """log(1 + element) for nilpotent element, as a finite sum."""
    acc = ring.zero()
    power = ring.one()
    k = 1
    zero = ring.zero()
    while True:
        power = power * element
        if power == zero:
            return acc
        acc = acc + power * Fraction((-1) ** (k + 1), k)
        k += 1
        if k > 10000:
            raise NotExponentiable("q^0 coefficient does not appear nilpotent")


def qs_exp(a):
    """Exponential of a series whose q^0 coefficient is zero or nilpotent."""
    ring = a.ring
    s0 = a.terms.get(0, ring.zero())
    if _coeff_constant_term(s0) != 0:
        raise NotExponentiable("q^0 coefficient must have zero constant part")
    if isinstance(s0, (Fraction, int)):
        head = ring.one()  # s0 == 0 in the scalar case
    else:
        head = _exp_nilpotent(ring, s0)

    tail = QExpSeries(ring, a.order, {k: c for k, c in a.terms.items() if k != 0})
    acc = QExpSeries.one(ring, a.order)
    power = QExpSeries.one(ring, a.order)
    j = 1
    while True:
        power = qs_mul(power, tail).scale(Fraction(1, j))
        if power.is_zero():
            break
        acc = acc + power
        j += 1
    return acc.scale(head)


def qs_log(a):
    """Logarithm of a series whose q^0 coefficient has constant part 1."""
    ring = a.ring
    a0 = a.terms.get(0, ring.zero())
    if _coeff_constant_term(a0) != 1:
        raise NotExponentiable("q^0 coefficient must have constant part 1")
    if isinstance(a0, (Fraction, int)):
        head = ring.zero()  # log(1) == 0 in the scalar case
        inv0 = ring.one()
    else:
        head = _log_one_plus_nilpotent(ring, a0 - ring.one())
        inv0 = a0.inverse()

    # a = a0 * (1 + R) with R supported on positive exponents.
    rest = QExpSeries(ring, a.order, {k: c * inv0 for k, c in a.terms.items() if k != 0})
    acc = QExpSeries(ring, a.order, {0: head})
    power = QExpSeries.one(ring, a.order)
    j = 1
    while True:
        power = qs_mul(power, rest)
        if power.is_zero():
            break
        acc = acc + power.scale(Fraction((-1) ** (j + 1), j))
        j += 1
    return acc
