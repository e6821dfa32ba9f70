import hypothesis
from hypothesis import strategies as st

from nomgame.model import ModelParams

hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.load_profile("default")


def _real(lo, hi):
    return st.floats(lo, hi, allow_nan=False, allow_infinity=False)


@st.composite
def params(draw, **fixed):
    values = dict(
        b_L=draw(_real(-2, -0.01)), b_R=draw(_real(0.01, 2)),
        alpha_L=draw(_real(0, 2)), alpha_R=draw(_real(0, 2)),
        k_l=draw(_real(-2, -0.01)), k_r=draw(_real(0.01, 2)), k_o=draw(_real(0, 2)),
        nu_l=draw(_real(0, 1.5)), nu_r=draw(_real(0, 1.5)), nu_o=draw(_real(0, 1.5)),
    )
    values.update(fixed)
    return ModelParams(**values)
