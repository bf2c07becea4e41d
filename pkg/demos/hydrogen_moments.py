"""Hydrogen radial moments: Chebyshev closed form, Kramers-Pasternack, inversion."""

from fractions import Fraction

from radmoments.hydrogen import HydrogenState, expval_neg, inversion_in4, kramers_pasternack_range, moment
from radmoments.oracle import hydrogen_expval_oracle

state = HydrogenState(2, 1)

# positive powers from the recurrence
for k, value in kramers_pasternack_range(state, 4):
    print(f"<r^{k}> =", value)

# negative powers by inversion, down to the divergence at -2l-3
for k in range(2 * state.l + 1):
    print(f"<r^{-k - 2}> =", inversion_in4(state, k), " oracle:", hydrogen_expval_oracle(state, -k - 2))

# the literal negative-power closed form overshoots by (2l+k+1)!/(2l-k)!
print(expval_neg(state, 0, "paper-literal"), "vs", expval_neg(state, 0))

# rational Z and a0 scale <r^q> by (a0/Z)^q
heavy = HydrogenState(3, 2, Z=2, a0=Fraction(1, 3))
print([str(moment(heavy, q)) for q in (-3, -1, 1, 2)])
