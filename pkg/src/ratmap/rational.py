"""Rational maps on the Riemann sphere.

A map is a coprime pair of polynomials P/Q of degree d >= 2.  Everything
runs through homogeneous coordinates: evaluation uses the degree-d
homogenizations of P and Q, infinity is the homogeneous zero of the
denominator side (an exact zero or a verified degree drop), never a
magnitude threshold on a chart value.

Valency is computed from vanishing orders of the derivative numerator
W = P'Q - PQ' in charts.  Preimage multiplicities are computed by the
root finder.  The two routes are independent on purpose: the classical
identity sum(val(R,x) for x in R^-1(y)) = d is a cross-check between
them, not a definition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegenerateMapError,
    IndeterminateEvaluationError,
    MapDegreeError,
    ValencyAmbiguousError,
)
from .poly import Polynomial, compose_homogeneous, vanishing_order_exact
from .roots import DEFAULT_CLUSTER_RADIUS, find_roots
from .scalars import GaussianRational, is_exact, to_complex
from .sphere import INFINITY, SpherePoint

DEFAULT_TOLERANCE = 1e-9

# beyond this many bits in a coordinate, exact orbit iteration switches to floating
EXACT_HEIGHT_CAP_BITS = 512


def _bits(fr) -> int:
    return fr.numerator.bit_length() + fr.denominator.bit_length()


def point_height_bits(p: SpherePoint) -> int:
    if p.is_infinity or not p.is_exact:
        return 0
    z = p.value()
    return max(_bits(z.re), _bits(z.im))


class RationalMap:
    def __init__(self, p: Polynomial, q: Polynomial, *, tolerance: float = DEFAULT_TOLERANCE,
                 auto_reduce: bool = True, verified_coprime: bool = False):
        if q.is_zero:
            raise MapDegreeError("denominator is identically zero")
        if p.is_zero:
            raise MapDegreeError("numerator is identically zero (constant map)")
        self.reduced_from_input = False
        if p.is_exact and q.is_exact:
            g = p.gcd_exact(q)
            if g.degree > 0:
                if not auto_reduce:
                    raise DegenerateMapError("numerator and denominator share a factor")
                p, _ = p.divmod_exact(g)
                q, _ = q.divmod_exact(g)
                self.reduced_from_input = True
        elif not verified_coprime:
            res = p.resultant_magnitude(q)
            if res <= tolerance:
                raise DegenerateMapError(
                    "numerator and denominator share a root within tolerance",
                    resultant=res,
                )
        self.p = p
        self.q = q
        self.degree = max(p.degree, q.degree)
        if self.degree < 2:
            raise MapDegreeError(
                "rational map must have degree at least 2", degree=self.degree
            )
        self.tolerance = tolerance
        self.is_exact = p.is_exact and q.is_exact
        d = self.degree
        self._p_rev = p.reversed_padded(d)
        self._q_rev = q.reversed_padded(d)
        # W = P'Q - PQ', the numerator of the derivative
        self.wronskian = p.derivative() * q - p * q.derivative()
        # the same object for the conjugated map S = q_rev / p_rev at w = 0
        self._wronskian_rev = (
            self._q_rev.derivative() * self._p_rev - self._q_rev * self._p_rev.derivative()
        )
        self._floating = None
        # memoization only: entries are write-once per key and recomputation
        # is harmless, so concurrent readers stay safe
        self._preimage_cache = {}

    # -- basics ----------------------------------------------------------

    @property
    def is_polynomial(self) -> bool:
        return self.q.degree == 0

    def floating(self) -> "RationalMap":
        """A floating-coefficient copy (self when already floating)."""
        if not self.is_exact:
            return self
        if self._floating is None:
            # coprimality was established exactly; do not re-check in floats
            self._floating = RationalMap(
                Polynomial(complex(c) for c in self.p.coeffs),
                Polynomial(complex(c) for c in self.q.coeffs),
                tolerance=self.tolerance,
                verified_coprime=True,
            )
        return self._floating

    def __repr__(self):
        return f"RationalMap(degree={self.degree}, exact={self.is_exact})"

    def _coeff_scale(self) -> float:
        return max(self.p.coeff_scale(), self.q.coeff_scale())

    # -- evaluation --------------------------------------------------------

    def evaluate(self, x: SpherePoint) -> SpherePoint:
        """R(x) through the homogeneous pair; poles and infinity need no cases."""
        d = self.degree
        if x.is_infinity:
            exact_out = self.is_exact and x.is_exact
            u = self.p.coeffs[0] if self.p.degree == d else GaussianRational(0)
            v = self.q.coeffs[0] if self.q.degree == d else GaussianRational(0)
            if not exact_out:
                u, v = complex(u), complex(v)
            return SpherePoint(u, v)
        z = x.value()
        if is_exact(z) and self.is_exact:
            u = self.p.evaluate(z)
            v = self.q.evaluate(z)
            # coprimality rules out a common homogeneous zero in exact mode
            return SpherePoint(u, v)
        zc = to_complex(z)
        if abs(zc) <= 1.0:
            u = self.floating().p.evaluate(zc)
            v = self.floating().q.evaluate(zc)
        else:
            # balanced chart: evaluate the reversed pair at 1/z (homogeneous rescale)
            t = 1.0 / zc
            u = self.floating()._p_rev.evaluate(t)
            v = self.floating()._q_rev.evaluate(t)
        scale = self._coeff_scale()
        if max(abs(u), abs(v)) <= self.tolerance * scale:
            raise IndeterminateEvaluationError(
                "both homogeneous components vanished below tolerance",
                point=str(x),
            )
        return SpherePoint(u, v)

    def iterate(self, x: SpherePoint, n: int) -> SpherePoint:
        for _ in range(n):
            x = self.evaluate(x)
        return x

    def orbit(self, x: SpherePoint, steps: int):
        """x, R(x), ..., R^steps(x); switches to floating when exact heights blow up."""
        out = [x]
        current = x
        for _ in range(steps):
            if current.is_exact and point_height_bits(current) > EXACT_HEIGHT_CAP_BITS:
                current = current.to_float()
            current = self.evaluate(current)
            out.append(current)
        return out

    # -- preimages -----------------------------------------------------------

    def _target_polynomial(self, y: SpherePoint) -> Polynomial:
        """The polynomial whose sphere roots are R^-1(y): P - y Q, or Q for y = inf."""
        if y.is_infinity:
            return self.q
        yv = y.value()
        if is_exact(yv) and self.is_exact:
            return self.p - self.q * yv
        fl = self.floating()
        return Polynomial(
            [complex(c) for c in fl.p.coeffs]
        ) - Polynomial([complex(c) for c in fl.q.coeffs]) * to_complex(yv)

    def preimages(self, y: SpherePoint, cluster_radius: float = DEFAULT_CLUSTER_RADIUS):
        """Multiset R^-1(y) as (point, multiplicity); multiplicities sum to d."""
        key = y
        cached = self._preimage_cache.get(key)
        if cached is not None:
            return cached
        a = self._target_polynomial(y)
        if not a.is_exact:
            a = a.strip_leading(self.tolerance * max(self._coeff_scale(), a.coeff_scale()))
        if a.is_zero:
            raise DegenerateMapError("target polynomial vanished identically")
        inf_mult = self.degree - a.degree
        out = []
        if a.degree >= 1:
            for root, mult, _ in find_roots(a, cluster_radius):
                out.append((SpherePoint.finite(root), mult))
        if inf_mult > 0:
            out.append((INFINITY if a.is_exact else SpherePoint.infinity(exact=False), inf_mult))
        total = sum(m for _, m in out)
        if total != self.degree:
            raise DegenerateMapError(
                "preimage multiplicities do not sum to the degree",
                found=total, degree=self.degree,
            )
        self._preimage_cache[key] = out
        return out

    # -- valency ---------------------------------------------------------------

    def _vanishing_order_float(self, poly: Polynomial, x0: complex) -> int:
        """First non-vanishing derivative order, with a tolerance gray zone."""
        g = poly
        k = 0
        tol = self.tolerance
        while not g.is_zero:
            scale = g.coeff_scale() * max(1.0, abs(x0)) ** max(g.degree, 0)
            val = abs(complex(g.evaluate(x0)))
            ratio = val / scale if scale > 0 else 0.0
            if ratio > 1000.0 * tol:
                return k
            if ratio > tol:
                raise ValencyAmbiguousError(
                    "vanishing-order decision inside the tolerance gray zone",
                    candidates=(k + 1, k + 2),
                    point=str(x0), ratio=ratio,
                )
            k += 1
            g = g.derivative()
        return k

    def valency_at(self, x: SpherePoint) -> int:
        """Local degree val(R, x) via the vanishing order of W in charts."""
        if x.is_infinity:
            w_poly = self._wronskian_rev
            if self.is_exact:
                return 1 + vanishing_order_exact(w_poly, GaussianRational(0))
            return 1 + self._vanishing_order_float(w_poly, 0j)
        z = x.value()
        if is_exact(z) and self.is_exact:
            return 1 + vanishing_order_exact(self.wronskian, z)
        return 1 + self._vanishing_order_float(
            Polynomial(complex(c) for c in self.wronskian.coeffs), to_complex(z)
        )

    def valency(self, n: int, x: SpherePoint) -> int:
        """val(R^n, x) by the chain rule for local degree."""
        if n == 0:
            return 1
        total = 1
        current = x
        for _ in range(n):
            total *= self.valency_at(current)
            current = self.evaluate(current)
        return total

    # -- derivative in charts ----------------------------------------------------

    def local_derivative(self, x: SpherePoint):
        """Derivative at x in charts moving x and R(x) to finite positions.

        Around a cycle these chart factors multiply to the multiplier,
        because the chart choices cancel on the return to the start.
        """
        rx = self.evaluate(x)
        if not x.is_infinity:
            z = x.value()
            w_val = self.wronskian.evaluate(z)
            if not rx.is_infinity:
                qv = self.q.evaluate(z)
                return w_val / (qv * qv)
            pv = self.p.evaluate(z)
            return -w_val / (pv * pv)
        w_val = self._wronskian_rev.evaluate(
            GaussianRational(0) if self.is_exact else 0j
        )
        if rx.is_infinity:
            pv = self._p_rev.evaluate(GaussianRational(0) if self.is_exact else 0j)
            return w_val / (pv * pv)
        qv = self._q_rev.evaluate(GaussianRational(0) if self.is_exact else 0j)
        return -w_val / (qv * qv)

    def cycle_multiplier(self, points):
        """Multiplier of the cycle through the given orbit points."""
        m = GaussianRational(1) if self.is_exact else complex(1.0)
        for pt in points:
            m = m * self.local_derivative(pt)
        return m

    # -- iterated pair -------------------------------------------------------------

    def iterated_pair(self, n: int):
        """(P_n, Q_n) with R^n = P_n/Q_n, homogeneous composition, reduced."""
        p_cur, q_cur = self.p, self.q
        d_cur = self.degree
        for _ in range(n - 1):
            p_next = compose_homogeneous(self.p, self.degree, p_cur, q_cur)
            q_next = compose_homogeneous(self.q, self.degree, p_cur, q_cur)
            if p_next.is_exact and q_next.is_exact:
                g = p_next.gcd_exact(q_next)
                if g.degree > 0:
                    p_next, _ = p_next.divmod_exact(g)
                    q_next, _ = q_next.divmod_exact(g)
            else:
                scale = max(p_next.coeff_scale(), q_next.coeff_scale())
                p_next = Polynomial(complex(c) / scale for c in p_next.coeffs)
                q_next = Polynomial(complex(c) / scale for c in q_next.coeffs)
            p_cur, q_cur = p_next, q_next
            d_cur = max(p_cur.degree, q_cur.degree)
        return p_cur, q_cur, d_cur


@dataclass(frozen=True)
class CriticalPoint:
    point: SpherePoint
    local_valency: int

    @property
    def multiplicity(self) -> int:
        """Weight in the critical divisor; these sum to 2d - 2."""
        return self.local_valency - 1
