"""Floating-point analysis: polynomial roots, the root-bound constant, and
the exact parity consequence at x = 1.

Root finding is the only floating-point surface in the package; everything
else stays exact.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .family import FamilyKind, family_poly

DK_TOL = 1e-12
DK_MAX_ITER = 500


class RootFindingError(RuntimeError):
    pass


@dataclass(frozen=True)
class RootSet:
    roots: tuple       # complex roots, one per degree
    residuals: tuple   # |p(r)| / (1 + max |coeff|) per root

    @property
    def max_modulus(self):
        return max(abs(r) for r in self.roots)

    @property
    def max_residual(self):
        return max(self.residuals)


def poly_roots(p):
    """All complex roots by Durand-Kerner simultaneous iteration.

    Roots at zero are deflated exactly first (every family polynomial has a
    zero constant term, and disconnected graphs stack them); they would
    otherwise be repeated roots, where the iteration only converges linearly.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    zeros = 0
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zeros += 1
    scale = 1 + max(abs(float(c)) for c in p.coeffs)
    if len(coeffs) <= 1:
        return RootSet((0j,) * zeros, (0.0,) * zeros)

    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    d = len(coeffs) - 1

    cauchy = 1.0 + max(abs(c) for c in monic[:-1])
    radius = cauchy * 1.1
    roots = [
        radius * cmath.exp(2j * math.pi * (k + 0.25) / d + 0.1j) for k in range(d)
    ]

    def peval(z):
        acc = 0j
        for c in reversed(monic):
            acc = acc * z + c
        return acc

    for _ in range(DK_MAX_ITER):
        step = 0.0
        new = list(roots)
        for i in range(d):
            denom = 1 + 0j
            for j in range(d):
                if j != i:
                    denom *= roots[i] - new[j] if j < i else roots[i] - roots[j]
            if denom == 0:
                denom = 1e-30
            delta = peval(roots[i]) / denom
            new[i] = roots[i] - delta
            step = max(step, abs(delta))
        roots = new
        if step < DK_TOL:
            break
    else:
        # repeated non-zero roots stall the step criterion; accept the
        # cluster anyway if every residual certifies the roots
        if any(abs(p(r)) / scale >= 1e-9 for r in roots):
            raise RootFindingError(
                f"Durand-Kerner did not converge in {DK_MAX_ITER} iterations (last step {step:.3e})"
            )

    roots = [0j] * zeros + roots
    residuals = tuple(abs(p(r)) / scale for r in roots)
    return RootSet(tuple(roots), residuals)


SOKAL_SCAN_STEP = 0.01
SOKAL_SCAN_HI = 4.0


def _sokal_objective(a):
    return (a + math.exp(a)) / math.log1p(a * math.exp(-a))


@lru_cache(maxsize=None)
def sokal_constant(tolerance=1e-6):
    """Minimum over a > 0 of (a + e^a) / ln(1 + a e^-a).

    Coarse scan over (0, 4] locates the basin, golden-section polishes it.
    """
    if tolerance < 1e-9:
        raise ValueError("tolerance below 1e-9 not supported")
    grid = [SOKAL_SCAN_STEP * i for i in range(1, int(SOKAL_SCAN_HI / SOKAL_SCAN_STEP) + 1)]
    values = [_sokal_objective(a) for a in grid]
    i = min(range(len(grid)), key=values.__getitem__)
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, len(grid) - 1)]

    phi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - phi * (b - a)
    d = a + phi * (b - a)
    fc, fd = _sokal_objective(c), _sokal_objective(d)
    while b - a > tolerance:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = _sokal_objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = _sokal_objective(d)
    return _sokal_objective((a + b) / 2)


SOKAL_SLACK = 1e-6


def sokal_bound_check(g):
    """Max root modulus of the co-adjoint polynomial vs K times max degree."""
    if g.edge_count() < 1:
        raise ValueError("needs at least one edge")
    p = family_poly(g, FamilyKind.COADJOINT)
    bound = sokal_constant(1e-6) * max(g.degrees())
    return poly_roots(p).max_modulus <= bound + SOKAL_SLACK


def eulerian_consequence_check(g):
    """|P(G, 1)| must be 1 exactly when all degrees are even, else 0."""
    value = abs(family_poly(g, FamilyKind.COADJOINT)(1))
    eulerian = all(d % 2 == 0 for d in g.degrees())
    return value == (1 if eulerian else 0)
