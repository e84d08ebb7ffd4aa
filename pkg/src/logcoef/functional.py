"""Logarithmic coefficients and the functional |gamma_2| - |gamma_1|.

For a normalized analytic f the logarithmic coefficients gamma_n are defined
by log(f(z)/z) = 2 * sum_{n>=1} gamma_n z^n.  The first two reduce to
gamma_1 = a_2 / 2 and gamma_2 = (a_3 - a_2^2 / 2) / 2; this module computes
them from the series logarithm and keeps the closed coefficient formulas as a
separate route so each can cross-check the other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .series import TruncatedSeries, log_unit


@dataclass(frozen=True)
class LogPair:
    """gamma_1, gamma_2 and the induced difference of moduli."""

    gamma1: complex
    gamma2: complex

    @property
    def delta(self) -> float:
        return abs(self.gamma2) - abs(self.gamma1)


def log_coefficients(f, n: int) -> np.ndarray:
    """First n logarithmic coefficients gamma_1..gamma_n of a catalog entry.

    Computed from the series logarithm of f(z)/z.  Requires
    n <= series order - 1 because dividing by z drops one order.
    """
    s = f.series
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > s.order - 1:
        raise ValueError(
            f"cannot produce gamma_{n} from a series of order {s.order}; "
            f"need order >= {n + 1}"
        )
    unit = TruncatedSeries(s.coeffs[1:], order=s.order - 1)
    L = log_unit(unit)
    return 0.5 * L.coeffs[1 : n + 1]


def gamma_from_a(a2: complex, a3: complex) -> LogPair:
    """LogPair straight from the coefficient formulas, no series involved."""
    g1 = 0.5 * complex(a2)
    g2 = 0.5 * (complex(a3) - 0.5 * complex(a2) * complex(a2))
    return LogPair(g1, g2)


def log_pair(f) -> LogPair:
    """gamma_1 and gamma_2 of a catalog entry via the series logarithm."""
    g = log_coefficients(f, 2)
    return LogPair(complex(g[0]), complex(g[1]))


def delta(f) -> float:
    """|gamma_2| - |gamma_1| for a catalog entry."""
    return log_pair(f).delta
