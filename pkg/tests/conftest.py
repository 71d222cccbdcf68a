"""Shared test helpers: strategies for admissible scenario parameters."""

import math

from hypothesis import assume
from hypothesis import strategies as st

from cohdet import ScenarioParams, effective_coherence, overlap


def finite_floats(lo, hi):
    return st.floats(min_value=lo, max_value=hi, allow_nan=False, allow_infinity=False)


@st.composite
def admissible_delta_c(draw, margin=1e-6):
    """(delta, c) pairs staying clear of the singular point delta*c = -1."""
    delta = draw(finite_floats(0.0, 1.0))
    c = draw(finite_floats(-1.0, 1.0))
    assume(1.0 + delta * c > margin)
    return delta, c


@st.composite
def scenario_params(draw, k_max=12.0, margin=1e-6):
    """Admissible ScenarioParams over sensible physical ranges."""
    k = draw(finite_floats(0.0, k_max))
    gamma = draw(finite_floats(0.0, 1.0))
    theta = draw(finite_floats(0.0, 2.0 * math.pi))
    p = draw(finite_floats(0.0, 1.0))
    assume(1.0 + overlap(k) * effective_coherence(gamma, theta) > margin)
    return ScenarioParams(k=k, gamma=gamma, theta=theta, p=p)


def linspace(lo, hi, n):
    """Inclusive grid matching the sweep module's spacing convention."""
    if n == 1:
        return [lo]
    values = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    values[-1] = hi
    return values
