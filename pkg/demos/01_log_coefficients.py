"""First steps: logarithmic coefficients and the delta functional.

For a normalized analytic function f(z) = z + a2 z^2 + a3 z^3 + ... the
logarithmic coefficients gamma_n come from log(f(z)/z) = 2 sum gamma_n z^n,
and delta = |gamma_2| - |gamma_1| is the quantity everything else in this
package bounds.  This script computes the pair two independent ways and shows
that delta ignores rotations.
"""

from logcoef import (
    delta,
    f1,
    f2,
    gamma_from_a,
    koebe,
    log_coefficients,
    log_pair,
    rotate,
)

print("== gamma via the series logarithm ==")
k = koebe()
print(f"koebe coefficients a_1..a_6: {[round(k.a(n).real, 6) for n in range(1, 7)]}")
g = log_coefficients(k, 6)
print(f"gamma_1..gamma_6:            {[round(x.real, 6) for x in g]}")
print("(the harmonic numbers 1/n: the koebe function saturates every gamma_n)")
print()

print("== two routes to the same pair ==")
for f in (koebe(), f1(), f2()):
    via_series = log_pair(f)
    via_formula = gamma_from_a(f.a(2), f.a(3))
    drift = max(
        abs(via_series.gamma1 - via_formula.gamma1),
        abs(via_series.gamma2 - via_formula.gamma2),
    )
    print(
        f"{f.label:6s} gamma1 = {via_series.gamma1:.6f}  "
        f"gamma2 = {via_series.gamma2:.6f}  delta = {via_series.delta:+.6f}  "
        f"route gap = {drift:.2e}"
    )
print()

print("== delta is rotation invariant ==")
f = f1()
base = delta(f)
for theta in (0.0, 0.7, 1.9, 3.1):
    d = delta(rotate(f, theta))
    print(f"theta = {theta:3.1f}: delta = {d:+.12f}  (drift {abs(d - base):.2e})")
print()
print(f"f1 attains delta = -sqrt(2)/2 = {base:+.12f},")
print("the most negative value possible for a univalent function; f2 attains +1/2.")
print(f"f2: delta = {delta(f2()):+.12f}")
