"""Points of the Riemann sphere in homogeneous coordinates.

A point is a pair (z : w), not both zero, canonicalized to w = 1 for
finite points and (1 : 0) for infinity.  Infinity is always stored with
exact components; it never arises from a magnitude threshold on a chart
value, only from homogeneous bookkeeping (an exact zero denominator, a
degree drop, or the representation epsilon below).

Floating canonicalization uses a representation epsilon of 1e-14: a pair
whose second component is that far below the first is within 1e-14 of
infinity in the chordal metric, far inside every tolerance this package
works at, and flipping it to (1 : 0) keeps chart values bounded.
"""

from __future__ import annotations

import math

from .scalars import (
    GaussianRational,
    as_scalar,
    is_exact,
    parse_scalar,
    scalar_str,
)

REPRESENTATION_EPS = 1e-14


class SpherePoint:
    __slots__ = ("z", "w")

    def __init__(self, z, w):
        z = as_scalar(z)
        w = as_scalar(w)
        if is_exact(z) and is_exact(w):
            z = z if isinstance(z, GaussianRational) else GaussianRational(z)
            w = w if isinstance(w, GaussianRational) else GaussianRational(w)
            if w.is_zero():
                if z.is_zero():
                    raise ValueError("(0 : 0) is not a point of the sphere")
                self.z, self.w = GaussianRational(1), GaussianRational(0)
            else:
                self.z, self.w = z / w, GaussianRational(1)
            return
        zc, wc = complex(z), complex(w)
        if not all(
            math.isfinite(v) for v in (zc.real, zc.imag, wc.real, wc.imag)
        ):
            raise ValueError("non-finite component; points never store NaN or inf")
        if zc == 0 and wc == 0:
            raise ValueError("(0 : 0) is not a point of the sphere")
        if abs(wc) <= REPRESENTATION_EPS * abs(zc):
            # infinity reached through floating data stays floating: it is
            # numerical knowledge, and must not pass exact-equality checks
            self.z, self.w = complex(1.0), complex(0.0)
        else:
            self.z, self.w = zc / wc, complex(1.0)

    @classmethod
    def finite(cls, value):
        return cls(as_scalar(value), 1)

    @classmethod
    def infinity(cls, exact: bool = True):
        if exact:
            return cls(GaussianRational(1), GaussianRational(0))
        return cls(complex(1.0), complex(0.0))

    @property
    def is_infinity(self) -> bool:
        w = self.w
        if isinstance(w, GaussianRational):
            return w.is_zero()
        return w == 0

    @property
    def is_exact(self) -> bool:
        return isinstance(self.z, GaussianRational)

    def value(self):
        """Chart value z/w; only defined for finite points."""
        if self.is_infinity:
            raise ValueError("infinity has no finite chart value")
        return self.z

    def to_float(self) -> "SpherePoint":
        if self.is_infinity or not self.is_exact:
            return self
        try:
            zc = complex(self.z)
        except OverflowError:
            # beyond float range means chordally indistinguishable from infinity
            return SpherePoint.infinity(exact=False)
        if not (math.isfinite(zc.real) and math.isfinite(zc.imag)):
            return SpherePoint.infinity(exact=False)
        return SpherePoint(zc, complex(1.0))

    def _norm_pair(self):
        if self.is_infinity:
            return 1.0 + 0.0j, 0.0j
        try:
            zc = complex(self.z)
        except OverflowError:
            return 1.0 + 0.0j, 0.0j
        if not (math.isfinite(zc.real) and math.isfinite(zc.imag)):
            return 1.0 + 0.0j, 0.0j
        return zc, 1.0 + 0.0j

    def chordal(self, other: "SpherePoint") -> float:
        """Chordal metric d(p,q) = 2|z1 w2 - z2 w1| / (|p| |q|), diameter 2."""
        z1, w1 = self._norm_pair()
        z2, w2 = other._norm_pair()
        cross = abs(z1 * w2 - z2 * w1)
        n1 = math.hypot(abs(z1), abs(w1))
        n2 = math.hypot(abs(z2), abs(w2))
        return 2.0 * cross / (n1 * n2)

    def __eq__(self, other):
        if not isinstance(other, SpherePoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        if self.is_exact and other.is_exact:
            return self.z == other.z
        return complex(self.z) == complex(other.z)

    def __hash__(self):
        if self.is_infinity:
            return hash("inf-point")
        return hash(complex(self.z))

    def __repr__(self):
        return f"SpherePoint({point_str(self)})"

    def __str__(self):
        return point_str(self)


INFINITY = SpherePoint.infinity()


def point_str(p: SpherePoint) -> str:
    return "inf" if p.is_infinity else scalar_str(p.z)


def parse_point(text: str) -> SpherePoint:
    s = text.strip().lower()
    if s in ("inf", "infinity", "oo", "∞"):
        return SpherePoint.infinity()
    return SpherePoint.finite(parse_scalar(text))


def coincide(p: SpherePoint, q: SpherePoint, tol: float) -> bool:
    """Point equality: exact when both sides are exact, chordal otherwise."""
    if p.is_exact and q.is_exact:
        return p == q
    return p.chordal(q) <= tol


def point_sort_key(p: SpherePoint):
    if p.is_infinity:
        return (1, 0.0, 0.0)
    z = complex(p.z)
    return (0, z.real, z.imag)


def dedup_points(points, tol):
    """Greedy dedup preserving first occurrences."""
    out = []
    for p in points:
        if not any(coincide(p, q, tol) for q in out):
            out.append(p)
    return out


def contains_point(points, p, tol) -> bool:
    return any(coincide(p, q, tol) for q in points)
