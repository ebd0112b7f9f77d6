"""Dense exact polynomial arithmetic.

Poly is univariate with arbitrary-precision integer (or exact Fraction)
coefficients, index = degree, normalized so the zero polynomial is the empty
tuple.  BiPoly is dense bivariate, coeffs[i][j] = coefficient of x^i y^j.
"""

from fractions import Fraction
from math import comb


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def monomial(degree, coeff=1):
        return Poly([0] * degree + [coeff])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, k):
        return Poly([k * c for c in self.coeffs])

    def __call__(self, t):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def shift_degree(self, k):
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs)

    def compose(self, inner):
        """self(inner) for a Poly argument, by Horner."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def render(self, var="x"):
        """Paper-style text: descending degree, unit coefficients suppressed."""
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                xs = var if d == 1 else f"{var}^{d}"
                body = xs if mag == 1 else f"{mag}{xs}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self.render()})"


X = Poly([0, 1])
ONE = Poly([1])


def reflect_negate(p):
    """(-1)^deg(p) * p(-x); maps the table polynomials to positive coefficients."""
    d = p.degree
    return Poly([c if (d - i) % 2 == 0 else -c for i, c in enumerate(p.coeffs)])


class BiPoly:
    __slots__ = ("coeffs",)

    def __init__(self, rows=()):
        rs = [list(r) for r in rows]
        while rs and all(c == 0 for c in rs[-1]):
            rs.pop()
        width = 0
        for r in rs:
            w = len(r)
            while w and r[w - 1] == 0:
                w -= 1
            width = max(width, w)
        self.coeffs = tuple(tuple(r[:width]) + (0,) * (width - len(r[:width])) for r in rs)

    @staticmethod
    def zero():
        return BiPoly()

    @staticmethod
    def constant(c):
        return BiPoly([[c]]) if c else BiPoly()

    @staticmethod
    def outer(px, qy):
        """px(x) * qy(y)."""
        return BiPoly([[a * b for b in qy.coeffs] for a in px.coeffs])

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        nr = max(len(a), len(b))
        nc = max((len(r) for r in a + b), default=0)
        out = [[0] * nc for _ in range(nr)]
        for src in (a, b):
            for i, row in enumerate(src):
                for j, c in enumerate(row):
                    out[i][j] += c
        return BiPoly(out)

    def __neg__(self):
        return BiPoly([[-c for c in row] for row in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return BiPoly()
        nr = len(a) + len(b) - 1
        nc = len(a[0]) + len(b[0]) - 1
        out = [[0] * nc for _ in range(nr)]
        for i, ra in enumerate(a):
            for j, ca in enumerate(ra):
                if ca:
                    for k, rb in enumerate(b):
                        for l, cb in enumerate(rb):
                            out[i + k][j + l] += ca * cb
        return BiPoly(out)

    def __call__(self, x, y):
        acc = 0
        for i, row in enumerate(self.coeffs):
            racc = 0
            for c in reversed(row):
                racc = racc * y + c
            acc += racc * x ** i
        return acc

    def eval_y(self, y):
        """Substitute a value for y, leaving a univariate Poly in x."""
        out = []
        for row in self.coeffs:
            racc = 0
            for c in reversed(row):
                racc = racc * y + c
            out.append(racc)
        return Poly(out)

    def __repr__(self):
        return f"BiPoly({self.coeffs!r})"


def substitute_sum(p):
    """p(x + y) expanded by the binomial theorem, as a BiPoly."""
    if not p.coeffs:
        return BiPoly()
    d = p.degree
    out = [[0] * (d + 1) for _ in range(d + 1)]
    for k, c in enumerate(p.coeffs):
        if c:
            for i in range(k + 1):
                out[i][k - i] += c * comb(k, i)
    return BiPoly(out)


def poly_to_json(p, var="x"):
    """{"var", "coeffs": [c0..cd]} with coefficients as decimal strings."""
    return {"var": var, "coeffs": [str(c) for c in p.coeffs]}


def as_fraction(value):
    """Parse an exact rational from int/str/Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)
