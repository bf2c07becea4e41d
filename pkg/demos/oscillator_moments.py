"""Radial moments of the n-dimensional isotropic oscillator, several ways."""

from radmoments.oracle import ho_expval_oracle
from radmoments.oscillator import (
    OscillatorState,
    energy,
    expval_closed,
    expval_dual_hahn,
    expval_recurrence_range,
)

# 3D, N=2, K=0: the first excited s-wave
state = OscillatorState(3, 2, 0)

# exact values carry a rational times a power of sqrt(pi)
for p in range(-2, 7):
    print(f"<r^{p}> =", expval_closed(state, p))

# the hypergeometric form, the dual Hahn form and termwise integration agree exactly
p = 5
print(expval_closed(state, p), expval_dual_hahn(state, p), ho_expval_oracle(state, p))

# the recurrence builds a whole table from two seeds per parity
table = expval_recurrence_range(state, -2, 8)
print([str(rec.exact) for rec in table])

# virial: <r^2> is the energy
print("<r^2> =", expval_closed(state, 2), " E =", energy(state))

# odd powers bring in sqrt(pi)
print(expval_closed(OscillatorState(2, 3, 1), 1).to_fields())
