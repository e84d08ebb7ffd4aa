"""Numerical searches over coefficient bodies and catalog families.

The closed-form bounds in `bounds` are extremes of delta = |gamma_2| -
|gamma_1| over a three-parameter coefficient body: a modulus for a_2 (or the
first Schwarz coefficient), a modulus for the free part of a_3 (or the second
Schwarz coefficient), and the relative phase between them.  These bodies are
relaxations: every class member yields a body point, so searching the body
brackets the class extremes from outside.  `body_search` grids and refines
such a search, `bound_violation_scan` hammers the same body with random
samples, and `family_sweep` walks a one-parameter catalog family and records
the delta values actually attained.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import catalog, functional
from .bounds import bound_delta
from .classes import (
    ClassSpec,
    g_coefficients_from_schwarz,
    m_coefficients_from_schwarz,
)
from .series import DEFAULT_ORDER

# The searched set is a relaxation of the class, not the class itself.
BODY_NOTE = "proof-relaxation body: contains the coefficient region of the class"

SCAN_TOLERANCE = 1e-9

_TIE = 1e-12


def _body_geometry(spec: ClassSpec):
    """(m1 range, m2 cap as a function of m1) for the class's coefficient body.

    U and S bodies live in (|a_2|, |a_3 - a_2^2|); M and G bodies live in the
    Schwarz coefficients (|c_1|, |c_2|).
    """
    if spec.kind in ("U", "S"):
        lam = 1.0 if spec.kind == "S" else spec.lam
        return 1.0 + lam, (lambda x: np.full_like(np.asarray(x, dtype=float), lam))
    return 1.0, (lambda x: 1.0 - np.asarray(x, dtype=float) ** 2)


def _coeffs_from_body(spec: ClassSpec, m1, m2, phase):
    """(a_2, a_3) at a body point; broadcasts over array inputs."""
    m1 = np.asarray(m1, dtype=float)
    w = np.asarray(m2, dtype=float) * np.exp(1j * np.asarray(phase, dtype=float))
    if spec.kind in ("U", "S"):
        return m1.astype(complex), m1 * m1 + w
    if spec.kind == "M":
        return m_coefficients_from_schwarz(m1, w, spec.alpha)
    return g_coefficients_from_schwarz(m1, w, spec.alpha)


def body_delta(spec: ClassSpec, m1, m2, phase):
    """delta at a body point.  Pure formula: the caller keeps (m1, m2) inside
    the body; nothing here checks that."""
    a2, a3 = _coeffs_from_body(spec, m1, m2, phase)
    return 0.5 * np.abs(a3 - 0.5 * a2 * a2) - 0.5 * np.abs(a2)


@dataclass(frozen=True)
class SearchResult:
    """Extremes of delta over a gridded and refined body search.

    argmin and argmax hold the body coordinates (m1, m2, phase) of the
    refined extreme points.
    """

    spec: ClassSpec
    min_delta: float
    max_delta: float
    argmin: dict
    argmax: dict
    resolution: int
    refined: bool
    note: str = field(default=BODY_NOTE)

    def as_dict(self) -> dict:
        return {
            "class": self.spec.label(),
            "min_delta": self.min_delta,
            "max_delta": self.max_delta,
            "argmin": dict(self.argmin),
            "argmax": dict(self.argmax),
            "resolution": self.resolution,
            "refined": self.refined,
            "note": self.note,
        }


def _slab_delta(spec, x, ts, phis, m2cap):
    # One x-slab of the grid: m2 varies down the rows, phase across columns.
    m2 = (ts * float(m2cap(x)))[:, None]
    return body_delta(spec, x, m2, phis[None, :])


def body_search(spec: ClassSpec, resolution: int = 200, parallel: bool = False) -> SearchResult:
    """Grid the body at the given resolution, then locally refine both extremes.

    Ties on the grid (within 1e-12) resolve to the smallest (m1, m2, phase)
    in lexicographic order, so results are reproducible whether or not the
    grid pass runs on threads.
    """
    if resolution < 2:
        raise ValueError(f"resolution must be at least 2, got {resolution}")
    xmax, m2cap = _body_geometry(spec)
    xs = np.linspace(0.0, xmax, resolution + 1)
    ts = np.linspace(0.0, 1.0, resolution + 1)
    phis = np.linspace(0.0, 2.0 * math.pi, resolution, endpoint=False)

    def slab(x):
        d = _slab_delta(spec, x, ts, phis, m2cap)
        return float(d.min()), float(d.max())

    if parallel:
        with ThreadPoolExecutor() as ex:
            ranges = list(ex.map(slab, xs))
    else:
        ranges = [slab(x) for x in xs]
    mins, maxs = zip(*ranges)
    gmin, gmax = min(mins), max(maxs)

    # Second pass only over slabs that can host a tied extreme; the first
    # flat index argmin/argmax returns is the lexicographic winner.
    loc_min = loc_max = None
    for i, x in enumerate(xs):
        need_min = loc_min is None and mins[i] <= gmin + _TIE
        need_max = loc_max is None and maxs[i] >= gmax - _TIE
        if not (need_min or need_max):
            continue
        d = _slab_delta(spec, x, ts, phis, m2cap)
        if need_min:
            hits = np.argwhere(d <= gmin + _TIE)
            if hits.size:
                j, k = hits[0]
                loc_min = (x, ts[j], phis[k])
        if need_max:
            hits = np.argwhere(d >= gmax - _TIE)
            if hits.size:
                j, k = hits[0]
                loc_max = (x, ts[j], phis[k])
        if loc_min is not None and loc_max is not None:
            break

    hx = xs[1] - xs[0]
    ht = ts[1] - ts[0]
    hp = phis[1] - phis[0]
    min_delta, argmin = _refine(spec, loc_min, (hx, ht, hp), xmax, m2cap, mode="min")
    max_delta, argmax = _refine(spec, loc_max, (hx, ht, hp), xmax, m2cap, mode="max")
    return SearchResult(
        spec=spec,
        min_delta=min_delta,
        max_delta=max_delta,
        argmin=argmin,
        argmax=argmax,
        resolution=resolution,
        refined=True,
    )


def _refine(spec, start, steps, xmax, m2cap, mode, iterations: int = 3):
    """Shrinking 5x5x5 neighborhood descent in (m1, t, phase) coordinates.

    t is m2 normalized by its cap at the current m1, so moving in m1 never
    pushes m2 outside the body.
    """
    x, t, phi = start
    hx, ht, hp = steps
    offs = np.arange(-2.0, 3.0)
    better = np.argmin if mode == "min" else np.argmax
    for _ in range(iterations):
        cx = np.clip(x + hx * offs, 0.0, xmax)
        ct = np.clip(t + ht * offs, 0.0, 1.0)
        cp = np.mod(phi + hp * offs, 2.0 * math.pi)
        X = cx[:, None, None]
        T = ct[None, :, None]
        P = cp[None, None, :]
        d = body_delta(spec, X, T * m2cap(X), P)
        i, j, k = np.unravel_index(better(d), d.shape)
        x, t, phi = float(cx[i]), float(ct[j]), float(cp[k])
        hx, ht, hp = 0.5 * hx, 0.5 * ht, 0.5 * hp
    m2 = float(t * m2cap(x))
    value = float(body_delta(spec, x, m2, phi))
    return value, {"m1": float(x), "m2": m2, "phase": float(phi)}


# -- catalog family sweeps ---------------------------------------------------

# label -> name of the swept parameter
SWEEPABLE = {
    "koebe": "theta",
    "f1": "theta",
    "f2": "theta",
    "f3": "lam",
    "f4": "lam",
    "f5": "lam",
    "k_theta_alpha": "alpha",
    "m_alpha_upper": "alpha",
    "g_alpha_upper": "alpha",
}

# label -> class kind whose parameter the swept parameter is
BOUND_CLASS = {
    "f3": "U",
    "f4": "U",
    "f5": "U",
    "k_theta_alpha": "M",
    "m_alpha_upper": "M",
    "g_alpha_upper": "G",
}


@dataclass(frozen=True)
class SweepRow:
    param: float
    delta_min: float
    delta_max: float


def _family_members(label, param, theta_grid, order):
    if label in ("koebe", "f1", "f2"):
        # The swept parameter is the rotation angle itself.
        return [catalog.make(label, theta=param)]
    if label == "f3":
        return [catalog.f3(param, th) for th in theta_grid]
    if label == "f4":
        return [catalog.f4(param)]
    if label == "f5":
        return [catalog.f5(param)]
    if label == "k_theta_alpha":
        return [catalog.k_theta_alpha(th, param, order=order) for th in theta_grid]
    if label == "m_alpha_upper":
        return [catalog.m_alpha_upper(param, order=order)]
    if label == "g_alpha_upper":
        return [catalog.g_alpha_upper(param, order=order)]
    raise ValueError(f"{label!r} is not sweepable; choose one of {sorted(SWEEPABLE)}")


def family_sweep(label, param_grid, theta_grid=(0.0,), order: int = DEFAULT_ORDER):
    """delta range attained along a one-parameter catalog family.

    For families that also carry a rotation angle, each parameter value is
    evaluated at every angle in theta_grid and the row records the spread.
    """
    if label not in SWEEPABLE:
        raise ValueError(f"{label!r} is not sweepable; choose one of {sorted(SWEEPABLE)}")
    rows = []
    for param in param_grid:
        values = [functional.delta(f) for f in _family_members(label, param, theta_grid, order)]
        rows.append(SweepRow(param=float(param), delta_min=min(values), delta_max=max(values)))
    return rows


# -- randomized bound checks -------------------------------------------------


@dataclass(frozen=True)
class ScanResult:
    """Outcome of a randomized body scan against the closed-form bounds."""

    spec: ClassSpec
    samples: int
    seed: int
    violations: int
    min_delta: float
    max_delta: float

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def as_dict(self) -> dict:
        return {
            "class": self.spec.label(),
            "samples": self.samples,
            "seed": self.seed,
            "violations": self.violations,
            "min_delta": self.min_delta,
            "max_delta": self.max_delta,
            "passed": self.passed,
        }


def bound_violation_scan(spec: ClassSpec, samples: int = 100_000, seed: int = 0) -> ScanResult:
    """Sample the body uniformly and count samples whose delta escapes the
    closed-form bounds by more than SCAN_TOLERANCE.  Deterministic for a
    fixed seed (permuted congruential generator)."""
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    xmax, m2cap = _body_geometry(spec)
    rng = np.random.Generator(np.random.PCG64(seed))
    m1 = rng.uniform(0.0, xmax, samples)
    m2 = rng.uniform(0.0, 1.0, samples) * m2cap(m1)
    phase = rng.uniform(0.0, 2.0 * math.pi, samples)
    d = body_delta(spec, m1, m2, phase)
    pair = bound_delta(spec)
    violations = int(np.count_nonzero(d < pair.lower - SCAN_TOLERANCE)) + int(
        np.count_nonzero(d > pair.upper + SCAN_TOLERANCE)
    )
    return ScanResult(
        spec=spec,
        samples=samples,
        seed=seed,
        violations=violations,
        min_delta=float(d.min()),
        max_delta=float(d.max()),
    )
