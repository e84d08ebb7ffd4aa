"""Closed-form bounds, and the numerical searches that corroborate them.

Every bound is an explicit formula; body_search grids a coefficient body
that contains the class's (a2, a3) region and so brackets the true extremes
from outside.  When the two agree to a few parts in a thousand, the formula,
the body geometry, and the search all confirm one another.
"""

from logcoef import (
    ClassSpec,
    M_BRANCH_ALPHA,
    body_search,
    bound_delta,
    bound_violation_scan,
    delta,
    g_quadratic,
    m_lower_minimizer,
)

print("== bounds across the classes ==")
for spec in [
    ClassSpec("S"),
    ClassSpec("U", lam=0.25),
    ClassSpec("U", lam=1.0),
    ClassSpec("M", alpha=0.0),
    ClassSpec("M", alpha=1.0),
    ClassSpec("G", alpha=1.0),
]:
    b = bound_delta(spec)
    sharp = ("sharp" if b.lower_sharp else "outer") + "/" + ("sharp" if b.upper_sharp else "outer")
    wit = f"witnesses {b.lower_witness or '-'} / {b.upper_witness or '-'}"
    print(f"{spec.label():8s} [{b.lower:+.9f}, {b.upper:+.9f}]  {sharp:12s} {wit}")
print()

print("== the lower bound for the alpha-convex family switches branch ==")
print(f"breakpoint alpha = (1 + sqrt 3)/2 = {M_BRANCH_ALPHA:.10f}")
for alpha in (1.0, M_BRANCH_ALPHA, 2.0, 10.0):
    b = bound_delta(ClassSpec("M", alpha=alpha))
    extra = ""
    if alpha >= M_BRANCH_ALPHA:
        extra = f"   interior minimizer |a2| = {m_lower_minimizer(alpha):.6f}"
    print(f"alpha = {alpha:7.4f}: lower = {b.lower:+.10f}{extra}")
print()

print("== grid-plus-refinement search against the formulas ==")
for spec in [ClassSpec("U", lam=0.5), ClassSpec("M", alpha=1.0), ClassSpec("G", alpha=1.0)]:
    res = body_search(spec, resolution=200)
    b = bound_delta(spec)
    print(
        f"{spec.label():8s} search [{res.min_delta:+.6f}, {res.max_delta:+.6f}]"
        f"  formula [{b.lower:+.6f}, {b.upper:+.6f}]"
        f"  gaps {abs(res.min_delta - b.lower):.1e} / {abs(res.max_delta - b.upper):.1e}"
    )
print("(the search runs over a relaxation body, so it can only close the gap from outside)")
print()

print("== randomized scans find no violations ==")
for spec in [ClassSpec("S"), ClassSpec("U", lam=0.8), ClassSpec("M", alpha=2.0)]:
    res = bound_violation_scan(spec, samples=100_000, seed=0)
    print(
        f"{spec.label():8s} {res.samples} samples: {res.violations} violations,"
        f" observed range [{res.min_delta:+.6f}, {res.max_delta:+.6f}]"
    )
print()

print("== a gap the search exposes honestly ==")
b = bound_delta(ClassSpec("G", alpha=1.0))
d = delta(g_quadratic())
print(f"G(1) lower bound:        {b.lower:+.10f}")
print(f"best known member value: {d:+.10f}  (z - z^2/2)")
print(f"gap 4/21 - 3/16 = 1/336 = {d - b.lower:.10f}")
print(f"note: {b.note}")
