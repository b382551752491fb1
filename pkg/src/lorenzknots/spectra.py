"""Zeroes of Alexander polynomials, the genus/braid-index annulus, and the
invariant r(K) used to rule out Lorenz knots."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass

import flint
import numpy as np

from .polynomial import IntPolynomial, squarefree_factors

EXCLUSION_GUARD = 1e-9
ANNULUS_TOL = 1e-9


class RootFindingError(ArithmeticError):
    pass


class BoundError(ValueError):
    """Bounds undefined for the given invariants (unknot, b = 1, ...)."""


# -- root finding -----------------------------------------------------------------


def _root_radius(c: np.ndarray) -> float:
    """Fujiwara bound on the moduli of the roots (c ascending, monic or not)."""
    n = len(c) - 1
    lead = abs(c[-1])
    terms = [(abs(c[n - k]) / lead) ** (1.0 / k) for k in range(1, n + 1)]
    terms[-1] = (abs(c[0]) / (2 * lead)) ** (1.0 / n)
    return 2 * max(terms) or 1.0


def _newton_ratio(desc: np.ndarray, rev: np.ndarray, z: np.ndarray) -> np.ndarray:
    """p(z)/p'(z) for all z, switching to the reversed polynomial outside
    the unit disc to keep Horner's rule in range."""
    n = len(desc) - 1
    out = np.empty_like(z)
    inside = np.abs(z) <= 1
    zi = z[inside]
    if zi.size:
        p = np.zeros_like(zi)
        dp = np.zeros_like(zi)
        for a in desc:
            dp = dp * zi + p
            p = p * zi + a
        out[inside] = p / dp
    zo = z[~inside]
    if zo.size:
        w = 1 / zo
        q = np.zeros_like(w)
        dq = np.zeros_like(w)
        for a in rev:
            dq = dq * w + q
            q = q * w + a
        # p(z) = z^n q(1/z)  =>  p'/p = n/z - w^2 q'(w)/q(w)
        out[~inside] = 1 / (n * w - w * w * dq / q)
    return out


def aberth(coeffs, tol: float = 1e-12, max_iter: int = 1000) -> tuple[np.ndarray, int]:
    """Simultaneous Aberth-Ehrlich iteration; ``coeffs`` ascending, degree >= 1.

    Starts on a circle of Fujiwara radius with a fixed angular offset, so the
    result is a deterministic function of the coefficients.  A root stops
    moving once its relative update drops below ``tol``, or once the update
    has stalled at the rounding floor (no halving over ten sweeps while
    currently below 1e-4); :func:`roots` then polishes in extended precision.
    Returns the roots and the number of sweeps used.
    """
    c = np.asarray([np.longdouble(str(x)) for x in coeffs], dtype=np.clongdouble)
    n = len(c) - 1
    if n < 1:
        raise RootFindingError("constant polynomial has no roots")
    if n == 1:
        return np.array([complex(-c[0] / c[1])]), 0
    desc = c[::-1] / c[-1]
    rev = c / c[-1]
    angles = 2 * np.pi * np.arange(n, dtype=np.longdouble) / n + np.longdouble(0.4)
    z = np.longdouble(_root_radius(c)) * np.exp(1j * angles).astype(np.clongdouble)
    active = np.ones(n, dtype=bool)
    best = np.full(n, np.inf)
    stall = np.zeros(n, dtype=int)
    for sweep in range(1, max_iter + 1):
        idx = np.flatnonzero(active)
        zi = z[idx]
        # an iterate landing exactly on a root gives a non-finite step; it is
        # zeroed, which freezes that root
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = _newton_ratio(desc, rev, zi)
            diff = zi[:, None] - z[None, :]
            diff[np.arange(len(idx)), idx] = 1
            inv = 1 / diff
            inv[np.arange(len(idx)), idx] = 0
            step = ratio / (1 - ratio * inv.sum(axis=1))
        step = np.where(np.isfinite(step), step, 0)
        z[idx] = zi - step
        rel = np.abs(step) / np.maximum(np.abs(z[idx]), 1)
        improved = rel < 0.5 * best[idx]
        best[idx] = np.minimum(best[idx], rel)
        stall[idx] = np.where(improved, 0, stall[idx] + 1)
        done = (rel < tol) | ((stall[idx] >= 10) & (rel < 1e-4))
        active[idx[done]] = False
        if not active.any():
            return z.astype(complex), sweep
    raise RootFindingError(f"no convergence after {max_iter} sweeps; largest relative step {best[active].max():.3g}")


_WORKPREC = 133  # bits, about 40 decimal digits


def _acb(z: complex) -> flint.acb:
    return flint.acb(z.real, z.imag)


def _refine(f: IntPolynomial, z: np.ndarray, target: float = 1e-15, max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Aberth corrections in extended precision, applied only to roots whose
    Newton correction |f/f'| is still above ``target`` (relative).  Unlike
    plain Newton this separates the members of a tight cluster.  Returns the
    roots and their final Newton corrections."""
    with flint.ctx.workprec(_WORKPREC):
        poly = flint.acb_poly(list(f.coeffs))
        dpoly = poly.derivative()
        w = [_acb(complex(x)) for x in z]

        def ratio(x):
            return poly(x) / dpoly(x)

        r = [ratio(x) for x in w]
        for _ in range(max_sweeps):
            todo = [k for k, x in enumerate(w) if _mag(r[k]) > target * max(1.0, _mag(x))]
            if not todo:
                break
            for k in todo:
                s = sum((1 / (w[k] - w[m]) for m in range(len(w)) if m != k), flint.acb(0))
                w[k] = (w[k] - r[k] / (1 - r[k] * s)).mid()
                r[k] = ratio(w[k])
        return np.array([complex(x.mid()) for x in w]), np.array([_mag(x) for x in r])


def _mag(x: flint.acb) -> float:
    """|x| as a float (the midpoint of the enclosing ball; inf if undefined)."""
    v = float(abs(x.mid()).mid())
    return v if math.isfinite(v) else math.inf


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residual: float
    max_modulus: float

    def __len__(self) -> int:
        return len(self.roots)

    def moduli(self) -> list[float]:
        return [abs(z) for z in self.roots]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["re", "im", "modulus"])
        for z in self.roots:
            w.writerow([fmt(z.real), fmt(z.imag), fmt(abs(z))])
        return buf.getvalue()


def fmt(x: float) -> str:
    return "%.17g" % x


def roots(p: IntPolynomial, tol: float = 1e-12, max_iter: int = 1000) -> RootSet:
    """All complex roots of ``p`` with multiplicity, ordered by argument then modulus."""
    if p.degree < 1:
        raise RootFindingError("polynomial must have degree >= 1")
    zeros = p.valuation()
    q = IntPolynomial(p.coeffs[zeros:])
    found: list[complex] = [0j] * zeros
    residual = 0.0
    for f, mult in squarefree_factors(q):
        z, _ = aberth(f.coeffs, tol, max_iter)
        z, r = _refine(f, z)
        residual = max(residual, float(r.max()))
        if len(z) > 1:
            gap = np.abs(z[:, None] - z[None, :]) + np.eye(len(z))
            if gap.min() < 1e-10 * max(1.0, float(np.abs(z).max())):
                raise RootFindingError("two roots of a square-free factor coincide")
        if residual > 1e-8 * max(1.0, float(np.abs(z).max())):
            raise RootFindingError(f"root residual {residual:.3g} too large")
        z = _snap_real(z)
        found.extend(complex(x) for x in z for _ in range(mult))
    found.sort(key=lambda x: (round(math.atan2(x.imag, x.real), 12), abs(x)))
    m = max((max(abs(x), 1 / abs(x)) for x in found if x), default=1.0)
    return RootSet(tuple(found), residual, m)


def _snap_real(z: np.ndarray) -> np.ndarray:
    """Zero the rounding-level imaginary part of roots that have no separate
    conjugate partner (real coefficients force such roots onto the axis)."""
    z = z.copy()
    for k, x in enumerate(z):
        scale = max(1.0, abs(x))
        if abs(x.imag) < 1e-10 * scale:
            others = np.delete(z, k)
            if not others.size or np.abs(others - np.conj(x)).min() > 1e-8 * scale:
                z[k] = complex(x.real, 0.0)
    return z


def root_quality(p: IntPolynomial, rs: RootSet) -> float:
    """max |p(z)| / (||p||_1 max(1,|z|)^deg) over the roots, evaluated in
    extended precision at the (double precision) roots."""
    worst = 0.0
    with flint.ctx.workprec(_WORKPREC):
        poly = flint.acb_poly(list(p.coeffs))
        for z in rs.roots:
            scale = p.l1() * max(1.0, abs(z)) ** p.degree
            worst = max(worst, _mag(poly(_acb(z))) / scale)
    return worst


# -- bounds ------------------------------------------------------------------------


def annulus_bound(g: int, b: int) -> tuple[float, float]:
    """The annulus (2g)^(-4/(b-1)) <= |z| <= (2g)^(4/(b-1))."""
    if g < 1:
        raise BoundError("genus must be at least 1")
    if b < 2:
        raise BoundError("braid index must be at least 2")
    upper = (2 * g) ** (4 / (b - 1))
    return 1 / upper, upper


def spectral_radius_bound_prop(n: int, b_0: int) -> tuple[float, float]:
    """The cell-count annulus n^(-8/b_0) <= |z| <= n^(8/b_0)."""
    if b_0 < 2:
        raise BoundError("b_0 must be at least 2")
    if n < 1:
        raise BoundError("cell count must be positive")
    upper = n ** (8 / b_0)
    return 1 / upper, upper


@dataclass(frozen=True)
class AnnulusVerdict:
    lower: float
    upper: float
    all_inside: bool
    margin: float  # min over roots of log(upper) - |log|z||


def annulus_verdict(rs: RootSet, g: int, b: int, tol: float = ANNULUS_TOL) -> AnnulusVerdict:
    lower, upper = annulus_bound(g, b)
    log_upper = math.log(upper)
    margin = min((log_upper - abs(math.log(abs(z))) for z in rs.roots if z), default=log_upper)
    return AnnulusVerdict(lower, upper, margin >= -tol, margin)


def r_invariant(g: int, b: int, m: float) -> float:
    """(b - 1) log(m) / log(2g)."""
    if g < 1:
        raise BoundError("genus must be at least 1")
    if b < 2:
        raise BoundError("braid index must be at least 2")
    if m < 1:
        m = 1 / m
    return (b - 1) * math.log(m) / math.log(2 * g)


@dataclass(frozen=True)
class ScreenVerdict:
    g: int
    b: int
    m: float
    r: float
    lower: float
    upper: float
    all_inside: bool
    excluded: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def lorenz_exclusion(g: int, b: int, alexander: IntPolynomial | None = None, m: float | None = None) -> ScreenVerdict:
    """Screen a knot with genus g and braid index b: excluded iff r > 1 + guard.

    Give either the Alexander polynomial or the maximal root modulus m.
    """
    if (alexander is None) == (m is None):
        raise ValueError("give exactly one of alexander and m")
    if alexander is not None:
        m = roots(alexander).max_modulus if alexander.degree >= 1 else 1.0
    if m <= 0 or not math.isfinite(m):
        raise ValueError(f"invalid maximal modulus {m}")
    m = max(m, 1 / m)
    r = r_invariant(g, b, m)
    lower, upper = annulus_bound(g, b)
    return ScreenVerdict(g, b, m, r, lower, upper, m <= upper * (1 + ANNULUS_TOL), r > 1 + EXCLUSION_GUARD)
