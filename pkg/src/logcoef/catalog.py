"""Catalog of normalized analytic functions used as extremal witnesses.

Every entry is an :class:`AnalyticFunction`: a normalized Taylor series
(f(0) = 0, f'(0) = 1) plus, where a closed form exists, an evaluator that
returns (f, f', f'') at a point or at an ndarray of points.  Entries whose
only definition is an integral representation carry series only; evaluating
those at a radius the truncation cannot support is the membership module's
problem to refuse, not this module's to paper over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .series import DEFAULT_ORDER, NormalizedSeries, TruncatedSeries, exp_unit, log_unit, pow_real

LABELS = (
    "koebe",
    "f1",
    "f2",
    "f3",
    "f4",
    "f5",
    "k_theta_alpha",
    "m_alpha_upper",
    "g_alpha_upper",
    "g_quadratic",
)


@dataclass(frozen=True, eq=False)
class AnalyticFunction:
    """A catalog entry: normalized series, parameters, optional evaluator."""

    label: str
    series: NormalizedSeries
    params: dict = field(default_factory=dict)
    evaluator: Optional[Callable] = field(default=None, repr=False)

    def a(self, n: int) -> complex:
        """Taylor coefficient a_n."""
        return self.series.coefficient(n)

    def eval(self, z):
        """(f, f', f'') at z, by closed form when available, else by series."""
        if self.evaluator is not None:
            return self.evaluator(z)
        s = self.series.series
        d1 = s.deriv()
        return s(z), d1(z), d1.deriv()(z)


def _quadratic_rational(label, b, c, params, order):
    """z / (1 + b z + c z^2) with its closed-form derivatives."""
    den = TruncatedSeries([1.0, b, c], order=order)
    num = TruncatedSeries([0.0, 1.0], order=order)
    series = NormalizedSeries(num / den)

    def ev(z):
        q = 1.0 + b * z + c * z * z
        qp = b + 2.0 * c * z
        f = z / q
        fp = (q - z * qp) / (q * q)
        fpp = (-2.0 * c * z * q - 2.0 * qp * (q - z * qp)) / (q * q * q)
        return f, fp, fpp

    return AnalyticFunction(label, series, params, ev)


def koebe(theta: float = 0.0, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """z / (1 - e^{i theta} z)^2, coefficients a_n = n e^{i(n-1) theta}."""
    w = np.exp(1j * theta)
    return _quadratic_rational("koebe", -2.0 * w, w * w, {"theta": float(theta)}, order)


def f1(theta: float = 0.0, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """z / (1 - sqrt(2) e^{i theta} z + e^{2 i theta} z^2).

    Starts z + sqrt(2) e^{i theta} z^2 + e^{2 i theta} z^3; gamma_2 vanishes,
    so it attains the most negative value of |gamma_2| - |gamma_1| possible
    for a univalent function.
    """
    w = np.exp(1j * theta)
    return _quadratic_rational("f1", -math.sqrt(2.0) * w, w * w, {"theta": float(theta)}, order)


def f2(theta: float = 0.0, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """z / (1 + e^{i theta} z^2): odd, a_2 = 0, a_3 = -e^{i theta}."""
    w = np.exp(1j * theta)
    return _quadratic_rational("f2", 0.0, w, {"theta": float(theta)}, order)


def f3(lam: float, theta: float = 0.0, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """z / (1 - lam e^{i theta} z^2) = z + lam e^{i theta} z^3 + lam^2 e^{2 i theta} z^5 + ...

    Requires 0 < lam <= 1.
    """
    if not 0.0 < lam <= 1.0:
        raise ValueError(f"f3 requires 0 < lambda <= 1, got {lam}")
    w = np.exp(1j * theta)
    return _quadratic_rational(
        "f3", 0.0, -lam * w, {"lam": float(lam), "theta": float(theta)}, order
    )


def f4(lam: float, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """z / (1 - sqrt(2 lam) z + lam z^2) = z + sqrt(2 lam) z^2 + lam z^3 + ...

    Requires 1/2 <= lam <= 1; below 1/2 a pole enters the disk.
    """
    if not 0.5 <= lam <= 1.0:
        raise ValueError(f"f4 requires 1/2 <= lambda <= 1, got {lam}")
    return _quadratic_rational(
        "f4", -math.sqrt(2.0 * lam), lam, {"lam": float(lam)}, order
    )


def f5(lam: float, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """z / (1 - z + lam z^2) = z + z^2 + (1 - lam) z^3 + ...

    Requires 0 < lam <= 1/2 so that both poles stay outside the open disk.
    """
    if not 0.0 < lam <= 0.5:
        raise ValueError(f"f5 requires 0 < lambda <= 1/2, got {lam}")
    return _quadratic_rational("f5", -1.0, lam, {"lam": float(lam)}, order)


def _stable_pow(a: TruncatedSeries, beta: float) -> TruncatedSeries:
    """a^beta computed as exp(beta log a).

    The direct power recurrence cancels badly when a's coefficients grow
    (relative error ~ n^3.5 at coefficient n), which matters at the orders
    the membership tests use; the log coefficients are O(1/n) and the exp
    recurrence is cancellation-free, so this route keeps high-order
    coefficients usable.
    """
    logs = log_unit(a)
    return exp_unit(TruncatedSeries(beta * logs.coeffs, order=a.order))


def k_theta_alpha(theta: float, alpha: float, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """Generalized koebe function for the alpha-convex family.

    Defined through ((1/alpha) * integral_0^z t^{1/alpha - 1}
    (1 - e^{i theta} t)^{-2/alpha} dt)^alpha, computed entirely in series:
    expand (1 - e^{i theta} t)^{-2/alpha} = sum b_k t^k, divide b_k by
    (1 + alpha k), and raise the result to the alpha power, so the outcome is
    z * (sum b_k z^k / (1 + alpha k))^alpha.  No quadrature is involved.
    Reduces to the koebe function at alpha = 0; a_2 = 2 e^{i theta} / (1 + alpha).

    Series only for alpha > 0.  Note the inner expansion coefficients grow
    like n^(2/alpha - 1), so very small positive alpha needs moderate orders
    to stay inside double-precision range.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    if alpha == 0:
        return koebe(theta, order=order)
    w = np.exp(1j * theta)
    expanded = pow_real(TruncatedSeries([1.0, -w], order=order), -2.0 / alpha)
    k = np.arange(order + 1)
    inner = TruncatedSeries(expanded.coeffs / (1.0 + alpha * k), order=order)
    u = _stable_pow(inner, alpha)
    c = np.zeros(order + 1, dtype=complex)
    c[1:] = u.coeffs[:-1]
    return AnalyticFunction(
        "k_theta_alpha",
        NormalizedSeries(TruncatedSeries(c, order=order)),
        {"theta": float(theta), "alpha": float(alpha)},
    )


def m_alpha_upper(alpha: float, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """Odd extremal z + z^3/(1+2 alpha) + ... for the alpha-convex family.

    Built from the same series pipeline as k_theta_alpha but with inner
    factor (1 - t^2)^{-1/alpha}.  At alpha = 0 it is z / (1 - z^2) in closed
    form; for alpha > 0 it is series only.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    if alpha == 0:
        return _quadratic_rational("m_alpha_upper", 0.0, -1.0, {"alpha": 0.0}, order)
    expanded = pow_real(TruncatedSeries([1.0, 0.0, -1.0], order=order), -1.0 / alpha)
    k = np.arange(order + 1)
    inner = TruncatedSeries(expanded.coeffs / (1.0 + alpha * k), order=order)
    u = _stable_pow(inner, alpha)
    c = np.zeros(order + 1, dtype=complex)
    c[1:] = u.coeffs[:-1]
    return AnalyticFunction(
        "m_alpha_upper",
        NormalizedSeries(TruncatedSeries(c, order=order)),
        {"alpha": float(alpha)},
    )


def g_alpha_upper(alpha: float, order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """Primitive of (1 - z^2)^(alpha/2): starts z - (alpha/6) z^3.

    Requires 0 < alpha <= 1.  f' and f'' have closed forms; f itself is
    evaluated from the series (its coefficients decay absolutely, so that is
    harmless on the closed disk).
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"g_alpha_upper requires 0 < alpha <= 1, got {alpha}")
    fp = pow_real(TruncatedSeries([1.0, 0.0, -1.0], order=order), 0.5 * alpha)
    f = fp.integ()
    fc = f.coeffs

    def ev(z):
        acc = np.zeros_like(np.asarray(z, dtype=complex))
        for c in fc[::-1]:
            acc = acc * z + c
        # 1 - z^2 has positive real part on the disk, so the principal
        # power agrees with the series branch.
        w = 1.0 - z * z
        fpv = np.power(w, 0.5 * alpha)
        fppv = -alpha * z * np.power(w, 0.5 * alpha - 1.0)
        if np.ndim(z) == 0:
            return complex(acc), complex(fpv), complex(fppv)
        return acc, fpv, fppv

    return AnalyticFunction(
        "g_alpha_upper", NormalizedSeries(f), {"alpha": float(alpha)}, ev
    )


def g_quadratic(order: int = DEFAULT_ORDER) -> AnalyticFunction:
    """z - z^2/2, the polynomial member with delta = -3/16."""

    def ev(z):
        return z - 0.5 * z * z, 1.0 - z, z * 0.0 - 1.0

    return AnalyticFunction(
        "g_quadratic",
        NormalizedSeries(TruncatedSeries([0.0, 1.0, -0.5], order=order)),
        {},
        ev,
    )


def rotate(f: AnalyticFunction, theta: float) -> AnalyticFunction:
    """Disk rotation e^{-i theta} f(e^{i theta} z): a_n -> e^{i(n-1) theta} a_n.

    Preserves membership in every rotation-invariant class and each |gamma_n|.
    """
    w = np.exp(1j * theta)
    c = f.series.coeffs.copy()
    n = np.arange(len(c))
    c[1:] = c[1:] * w ** (n[1:] - 1)
    base_ev = f.evaluator
    ev = None
    if base_ev is not None:
        wc = complex(w)

        def ev(z, _ev=base_ev, _w=wc):
            fv, fpv, fppv = _ev(_w * z)
            return fv / _w, fpv, _w * fppv

    params = dict(f.params)
    params["rotated_by"] = float(theta)
    return AnalyticFunction(
        f.label, NormalizedSeries(TruncatedSeries(c, order=f.series.order)), params, ev
    )


def poles_outside_disk(coeffs) -> tuple[bool, float]:
    """Whether every root of a degree <= 2 polynomial lies strictly outside |z| = 1.

    Returns (all_outside, smallest_root_modulus).  Roots are taken with the
    closed quadratic formula, using the numerically stable pairing
    (q / c2, c0 / q) with q = -(c1 + s)/2 and s the square root aligned
    with c1.
    """
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if c.size == 0 or not c.any():
        raise ValueError("zero polynomial has no pole locations")
    while len(c) > 1 and c[-1] == 0:
        c = c[:-1]
    if len(c) > 3:
        raise ValueError("only polynomial degree <= 2 is supported")
    if len(c) == 1:
        return True, math.inf
    if len(c) == 2:
        m = abs(c[0] / c[1])
        return m > 1.0, float(m)
    c0, c1, c2 = (complex(v) for v in c)
    disc = c1 * c1 - 4.0 * c0 * c2
    s = complex(np.sqrt(np.complex128(disc)))
    if (np.conj(c1) * s).real < 0.0:
        s = -s
    q = -0.5 * (c1 + s)
    if q == 0:
        roots = ((-c1 + s) / (2.0 * c2), (-c1 - s) / (2.0 * c2))
    else:
        roots = (q / c2, c0 / q)
    m = min(abs(roots[0]), abs(roots[1]))
    return m > 1.0, float(m)


def make(
    label: str,
    theta: float = 0.0,
    lam: float | None = None,
    alpha: float | None = None,
    order: int = DEFAULT_ORDER,
) -> AnalyticFunction:
    """Build a catalog entry by label string; used by the command line."""
    if label == "koebe":
        return koebe(theta, order=order)
    if label == "f1":
        return f1(theta, order=order)
    if label == "f2":
        return f2(theta, order=order)
    if label == "f3":
        if lam is None:
            raise ValueError("f3 requires lambda")
        return f3(lam, theta, order=order)
    if label == "f4":
        if lam is None:
            raise ValueError("f4 requires lambda")
        return f4(lam, order=order)
    if label == "f5":
        if lam is None:
            raise ValueError("f5 requires lambda")
        return f5(lam, order=order)
    if label == "k_theta_alpha":
        if alpha is None:
            raise ValueError("k_theta_alpha requires alpha")
        return k_theta_alpha(theta, alpha, order=order)
    if label == "m_alpha_upper":
        if alpha is None:
            raise ValueError("m_alpha_upper requires alpha")
        return m_alpha_upper(alpha, order=order)
    if label == "g_alpha_upper":
        if alpha is None:
            raise ValueError("g_alpha_upper requires alpha")
        return g_alpha_upper(alpha, order=order)
    if label == "g_quadratic":
        return g_quadratic(order=order)
    raise ValueError(f"unknown function label {label!r}; known labels: {', '.join(LABELS)}")
