"""The dual Hahn polynomial behind the oscillator moments, on its quadratic grid."""

from fractions import Fraction

from radmoments.polys import DualHahnParams, dual_hahn, dual_hahn_equation_residual, finite_differences

n, K, k = 3, 1, 2
params = DualHahnParams(0, 1 - K - Fraction(n, 2), 0, k)

# values at s = p/2, where x(s) = s(s+1)
values = [dual_hahn(params, Fraction(p, 2)) for p in range(-4, 7)]
print(" ".join(map(str, values)))

# degree k in x(s) means a degree 2k polynomial in s: on an integer lattice
# the (2k+1)-th differences vanish
print(not any(finite_differences([dual_hahn(params, s) for s in range(12)], 2 * k + 1)))

# the second-order difference equation holds exactly, here off the lattice too
print(not any(dual_hahn_equation_residual(params, Fraction(s, 7)) for s in range(-3, 4)))
