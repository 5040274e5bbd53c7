"""Simultaneous polynomial root finding.

Aberth-Ehrlich iteration started on a perturbed circle at the Cauchy
bound, capped at 200 sweeps, followed by a short Newton polish.
Multiplicities are assigned by clustering in the chordal metric; the
assignment is rejected as ambiguous when re-clustering at ten times the
radius changes the multiplicity profile and exact arithmetic cannot break
the tie.

For exact polynomials every cluster is snapped to a small Gaussian
rational candidate and kept exact only when the candidate is verified to
be a root whose exact vanishing order matches the cluster size.  This is
what lets downstream set-membership decisions (criticality, preimage
coincidences) run in exact arithmetic on the maps where it matters.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import MultiplicityAmbiguousError, RootFindingFailedError
from .poly import Polynomial, vanishing_order_exact
from .scalars import GaussianRational
from .sphere import SpherePoint

ABERTH_MAX_ITER = 200
NEWTON_POLISH_STEPS = 5
DEFAULT_CLUSTER_RADIUS = 1e-6
SNAP_DENOMINATOR_BOUND = 10**6


def _chordal_c(a: complex, b: complex) -> float:
    return 2.0 * abs(a - b) / (math.hypot(abs(a), 1.0) * math.hypot(abs(b), 1.0))


def _horner_pair(coeffs: np.ndarray, dcoeffs: np.ndarray, z: np.ndarray):
    p = np.full_like(z, coeffs[0])
    for c in coeffs[1:]:
        p = p * z + c
    if len(dcoeffs):
        d = np.full_like(z, dcoeffs[0])
        for c in dcoeffs[1:]:
            d = d * z + c
    else:
        d = np.zeros_like(z)
    return p, d


def _aberth(coeffs: np.ndarray) -> np.ndarray:
    n = len(coeffs) - 1
    dcoeffs = coeffs[:-1] * np.arange(n, 0, -1)
    cauchy = 1.0 + float(max(abs(coeffs[1:] / coeffs[0])))
    # deterministic perturbed circle; the 0.41 offset breaks real-coefficient symmetry
    k = np.arange(n)
    angles = 2.0 * np.pi * (k + 0.41) / n + 0.003 * k
    radii = cauchy * (1.0 + 0.002 * (k + 1) / n)
    z = radii * np.exp(1j * angles)
    for _ in range(ABERTH_MAX_ITER):
        p, d = _horner_pair(coeffs, dcoeffs, z)
        d = np.where(d == 0, 1e-300, d)
        newton = p / d
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        denom = 1.0 - newton * s
        denom = np.where(denom == 0, 1e-300, denom)
        corr = newton / denom
        z = z - corr
        if np.all(np.abs(corr) <= 1e-14 * (1.0 + np.abs(z))):
            break
    return z


def _newton_polish(coeffs: np.ndarray, z: np.ndarray, steps: int) -> np.ndarray:
    n = len(coeffs) - 1
    dcoeffs = coeffs[:-1] * np.arange(n, 0, -1)
    for _ in range(steps):
        p, d = _horner_pair(coeffs, dcoeffs, z)
        safe = np.abs(d) > 1e-300
        step = np.where(safe, p / np.where(safe, d, 1.0), 0.0)
        z = z - step
    return z


def _cluster(points: np.ndarray, radius: float):
    """Union-find clustering under the chordal metric."""
    n = len(points)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if _chordal_c(points[i], points[j]) <= radius:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted((sorted(idx) for idx in groups.values()), key=lambda g: g[0])


def _profile(clusters):
    return sorted(len(g) for g in clusters)


def _snap_root(reduced: Polynomial, center: complex) -> GaussianRational | None:
    """Verified Gaussian-rational root near a floating approximation.

    A well-conditioned root is located to ~1e-13, well inside the gap
    between distinct denominator-bounded rationals, so the direct candidate
    settles it.  Ill-conditioned roots (near-double geometry) carry
    irreducible floating error; for those the approximation is refined by
    exact rational Newton steps before snapping.  None when no exact root
    confirms.
    """
    cand = GaussianRational(
        Fraction(center.real).limit_denominator(SNAP_DENOMINATOR_BOUND),
        Fraction(center.imag).limit_denominator(SNAP_DENOMINATOR_BOUND),
    )
    if reduced.evaluate(cand).is_zero():
        return cand
    dv_center = complex(reduced.derivative().evaluate(complex(center)))
    if abs(dv_center) > 1e-3 * max(1.0, reduced.coeff_scale()):
        return None  # well-conditioned and not rational: nothing to refine
    x = GaussianRational(
        Fraction(center.real).limit_denominator(10**15),
        Fraction(center.imag).limit_denominator(10**15),
    )
    deriv = reduced.derivative()
    for _ in range(2):
        pv = reduced.evaluate(x)
        if pv.is_zero():
            break
        dv = deriv.evaluate(x)
        if dv.is_zero():
            break
        x = x - pv / dv
        # keep fraction sizes bounded without losing the precision gained
        x = GaussianRational(
            x.re.limit_denominator(10**40), x.im.limit_denominator(10**40)
        )
    cand = GaussianRational(
        x.re.limit_denominator(SNAP_DENOMINATOR_BOUND),
        x.im.limit_denominator(SNAP_DENOMINATOR_BOUND),
    )
    if reduced.evaluate(cand).is_zero():
        return cand
    return None


def _eval_scaled(coeffs: np.ndarray, z: complex) -> float:
    acc = 0j
    for a in coeffs:
        acc = acc * z + a
    return abs(acc) / max(1.0, abs(z)) ** (len(coeffs) - 1)


def _zap_denormals(z: complex) -> complex:
    # components this small are iteration dust, never meaningful values
    re = 0.0 if abs(z.real) < 1e-250 else z.real
    im = 0.0 if abs(z.imag) < 1e-250 else z.imag
    return complex(re, im)


def find_roots(p: Polynomial, cluster_radius: float = DEFAULT_CLUSTER_RADIUS):
    """All roots of p with multiplicities; the multiplicities sum to deg p.

    Returns a list of (root, multiplicity, residual) triples, sorted by the
    floating value of the root.  A root is a GaussianRational when it was
    verified exactly and a complex number otherwise.

    Exact polynomials are split into square-free factors first, so their
    multiplicities are exact algebra; clustering then only has to separate
    distinct roots, not recognize multiple ones.
    """
    if p.degree < 1:
        raise ValueError("find_roots needs degree >= 1")
    if p.is_exact:
        from .poly import squarefree_decomposition_exact

        _, factors = squarefree_decomposition_exact(p)
        results = []
        for factor, mult in factors:
            for root, m, res in _find_roots_numeric(factor, cluster_radius):
                results.append((root, m * mult, res))
        total = sum(m for _, m, _ in results)
        if total != p.degree:
            raise RootFindingFailedError(
                "multiplicities do not sum to the degree",
                found=total,
                degree=p.degree,
            )
        results.sort(key=lambda t: (complex(t[0]).real, complex(t[0]).imag))
        return results
    return _find_roots_numeric(p, cluster_radius)


def _find_roots_numeric(p: Polynomial, cluster_radius: float):
    exact = p.is_exact

    # deflate exact zeros at the origin first
    zero_mult = 0
    work = list(p.coeffs)
    while len(work) > 1 and (
        work[-1].is_zero() if isinstance(work[-1], GaussianRational) else work[-1] == 0
    ):
        zero_mult += 1
        work.pop()
    reduced = Polynomial(work)

    results = []
    if zero_mult:
        zero_root = GaussianRational(0) if exact else complex(0)
        results.append((zero_root, zero_mult, 0.0))

    if reduced.degree >= 1:
        rc = reduced.to_complex_array()
        rc = rc / max(abs(rc))
        if reduced.degree == 1:
            z = np.array([-rc[1] / rc[0]])
        elif reduced.degree == 2:
            a, b, c = rc
            disc = np.sqrt(b * b - 4 * a * c + 0j)
            q = -(b + disc) / 2 if abs(b + disc) >= abs(b - disc) else -(b - disc) / 2
            if abs(q) == 0:
                z = np.array([0j, 0j])
            else:
                z = np.array([q / a, c / q])
        else:
            z = _aberth(rc)
        z = _newton_polish(rc, z, NEWTON_POLISH_STEPS)

        residuals = [_eval_scaled(rc, zi) for zi in z]
        # multiple roots legitimately stall above machine precision; the
        # acceptance bar here only rejects genuine non-convergence
        if max(residuals) > 1e-6:
            raise RootFindingFailedError(
                "root finder did not converge",
                residuals=residuals,
                degree=p.degree,
            )

        clusters = _cluster(z, cluster_radius)
        clusters_wide = _cluster(z, 10.0 * cluster_radius)
        ambiguous = _profile(clusters) != _profile(clusters_wide)

        pending = []
        for group in clusters:
            pts = z[group]
            center = _zap_denormals(complex(pts.mean()))
            mult = len(group)
            if mult > 1:
                # the centroid cancels the leading perturbation term; polish it
                # on the (mult-1)-th derivative where the root is simple
                g = reduced
                for _ in range(mult - 1):
                    g = g.derivative()
                gc = g.to_complex_array()
                gc = gc / max(abs(gc))
                center = _zap_denormals(
                    complex(_newton_polish(gc, np.array([center]), NEWTON_POLISH_STEPS)[0])
                )
            pending.append((center, mult))

        # exact representation when a snapped candidate verifies exactly
        all_resolved_exactly = True
        merged_exact = {}
        floating = []
        for center, mult in pending:
            if exact:
                cand = _snap_root(reduced, center)
                if cand is not None:
                    key = (cand.re, cand.im)
                    prev = merged_exact.get(key, (cand, 0))
                    merged_exact[key] = (cand, prev[1] + mult)
                    continue
            all_resolved_exactly = False
            floating.append((center, mult))

        for cand, mult in merged_exact.values():
            order = vanishing_order_exact(reduced, cand)
            if order != mult:
                all_resolved_exactly = False
                floating.append((complex(cand), mult))
            else:
                results.append((cand, mult, _eval_scaled(rc, complex(cand))))

        if ambiguous and not all_resolved_exactly:
            raise MultiplicityAmbiguousError(
                "two clusterings within a factor 10 disagree",
                radius=cluster_radius,
                profiles=(_profile(clusters), _profile(clusters_wide)),
            )

        for center, mult in floating:
            results.append((center, mult, _eval_scaled(rc, center)))

    total_mult = sum(m for _, m, _ in results)
    if total_mult != p.degree:
        raise RootFindingFailedError(
            "multiplicities do not sum to the degree",
            found=total_mult,
            degree=p.degree,
        )
    results.sort(key=lambda t: (complex(t[0]).real, complex(t[0]).imag))
    return results


def roots_as_points(p: Polynomial, cluster_radius: float = DEFAULT_CLUSTER_RADIUS):
    return [(SpherePoint.finite(root), mult) for root, mult, _ in find_roots(p, cluster_radius)]
