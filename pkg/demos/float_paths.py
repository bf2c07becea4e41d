"""Real powers: the lgamma float path against Gauss-Laguerre quadrature."""

import mpmath

from radmoments.exact import to_float
from radmoments.oracle import ho_expval_quadrature
from radmoments.oscillator import OscillatorState, expval_closed, expval_closed_real

state = OscillatorState(3, 4, 2)

for p in (-1.5, 0.5, 2.7):
    print(p, expval_closed_real(state, p), ho_expval_quadrature(state, p))

# on integer p the float path tracks the exact one
for p in (-3, 1, 8):
    print(p, expval_closed_real(state, p), to_float(expval_closed(state, p)))

# higher precision comes back as an mpmath number
print(mpmath.nstr(to_float(expval_closed(state, 3), precision=200), 50))
