"""Why the derived recurrence coefficient is the default."""

from radmoments.oracle import ho_expval_oracle
from radmoments.oscillator import OscillatorState, expval_closed, recurrence_coefficient, recurrence_step

state = OscillatorState(3, 2, 0)
r2, r0 = expval_closed(state, 2), expval_closed(state, 0)

# step from <r^2>, <1> to <r^4> with both coefficient variants
for mode in ("derived", "paper-literal"):
    print(mode, recurrence_coefficient(state, 2, mode), recurrence_step(state, 2, r2, r0, mode=mode))

# only the derived one matches the direct integral
print("closed:", expval_closed(state, 4), " oracle:", ho_expval_oracle(state, 4))
