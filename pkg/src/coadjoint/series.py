"""Truncated formal power series over exact rationals.

Used to build F(z), the EGF whose coefficients are the zigzag numbers
shifted by one, and to expand exp(x F(z)) into the reflected co-adjoint
polynomials of complete graphs.
"""

from fractions import Fraction
from math import factorial

from .errors import ConsistencyError
from .polynomials import Poly


class RatSeries:
    """Sum of coeffs[k] z^k for k = 0..order, all arithmetic exact."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @staticmethod
    def zero(order):
        return RatSeries([], order)

    @staticmethod
    def one(order):
        return RatSeries([1], order)

    @staticmethod
    def z(order):
        return RatSeries([0, 1], order)

    def __eq__(self, other):
        return (
            isinstance(other, RatSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def truncate(self, order):
        return RatSeries(self.coeffs, order)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return RatSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], order
        )

    def __neg__(self):
        return RatSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a:
                for j in range(order + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return RatSeries(out, order)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.coeffs[0] == 0:
            raise ValueError("division requires a nonzero constant term")
        order = min(self.order, other.order)
        inv0 = 1 / other.coeffs[0]
        out = [Fraction(0)] * (order + 1)
        for k in range(order + 1):
            acc = self.coeffs[k]
            for j in range(1, k + 1):
                acc -= other.coeffs[j] * out[k - j]
            out[k] = acc * inv0
        return RatSeries(out, order)

    def _coerce(self, other):
        if isinstance(other, RatSeries):
            return other
        return RatSeries([other], self.order)

    def derivative(self):
        return RatSeries(
            [k * c for k, c in enumerate(self.coeffs)][1:], self.order - 1
        )

    def integrate(self):
        """Antiderivative with zero constant term; order grows by one."""
        out = [Fraction(0)]
        for k, c in enumerate(self.coeffs):
            out.append(Fraction(c, k + 1))
        return RatSeries(out, self.order + 1)

    def exp(self):
        if self.coeffs[0] != 0:
            raise ValueError("exp requires zero constant term")
        out = [Fraction(1)] + [Fraction(0)] * self.order
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc += k * self.coeffs[k] * out[n - k]
            out[n] = acc / n
        return RatSeries(out, self.order)

    def log(self):
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        return (self.derivative() / self.truncate(self.order - 1)).integrate()

    def sin(self):
        return self._sin_cos()[0]

    def cos(self):
        return self._sin_cos()[1]

    def _sin_cos(self):
        if self.coeffs[0] != 0:
            raise ValueError("sin/cos composition requires zero constant term")
        n = self.order
        s = [Fraction(0)] * (n + 1)
        c = [Fraction(0)] * (n + 1)
        c[0] = Fraction(1)
        # s' = f' c, c' = -f' s with f = self
        for m in range(1, n + 1):
            sa = Fraction(0)
            ca = Fraction(0)
            for k in range(1, m + 1):
                fk = k * self.coeffs[k]
                sa += fk * c[m - k]
                ca -= fk * s[m - k]
            s[m] = sa / m
            c[m] = ca / m
        return RatSeries(s, n), RatSeries(c, n)


BUILD_F_MAX_ORDER = 16


def build_F(order):
    """The zigzag EGF primitive, two ways, asserted equal.

    Integral form: antiderivative of (1 + sin z)/cos z.  Closed form:
    ln((1 + sin z)/cos^2 z).  n! [z^n] of the result is the (n-1)-st zigzag
    number.
    """
    if order > BUILD_F_MAX_ORDER:
        raise ValueError(f"order capped at {BUILD_F_MAX_ORDER}")
    z = RatSeries.z(order)
    s, c = z._sin_cos()
    via_integral = ((RatSeries.one(order - 1) + s.truncate(order - 1)) / c.truncate(order - 1)).integrate()
    via_log = ((RatSeries.one(order) + s) / (c * c)).log()
    if via_integral != via_log:
        raise ConsistencyError("integral and logarithm forms of F disagree")
    return via_log


EGF_MAX_ORDER = 10


def egf_reconstruct(order):
    """Polynomials p_0..p_order with sum p_n(x) z^n / n! = exp(x F(z)).

    exp is expanded with polynomial-valued coefficients: the z^n coefficient
    of x F(z) is the monomial F_n x, and the standard exp recurrence runs
    over Poly values with rational coefficients.  Each n! c_n must come out
    with integer coefficients.
    """
    if order > EGF_MAX_ORDER:
        raise ValueError(f"order capped at {EGF_MAX_ORDER}")
    f = build_F(max(order, 1))
    c = [Poly([1])] + [Poly()] * order
    for n in range(1, order + 1):
        acc = Poly()
        for k in range(1, n + 1):
            fk = f.coeffs[k] if k <= f.order else 0
            if fk:
                # z^k coefficient of x F(z) is the degree-1 monomial F_k x
                acc = acc + c[n - k].scale(k * fk).shift_degree(1)
        c[n] = acc.scale(Fraction(1, n))
    out = []
    for n, poly in enumerate(c):
        scaled = poly.scale(factorial(n))
        ints = []
        for coeff in scaled.coeffs:
            frac = Fraction(coeff)
            if frac.denominator != 1:
                raise ConsistencyError(f"non-integer coefficient in p_{n}: {frac}")
            ints.append(frac.numerator)
        out.append(Poly(ints))
    return out
