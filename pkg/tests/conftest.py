import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from satake.poly import Poly

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

VARS = ("t1", "t2", "t3", "x0")


@st.composite
def polys(draw, names=VARS, max_terms=4, max_exp=2, coeff=5):
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, max_exp) for _ in names]),
        st.integers(-coeff, coeff),
        max_size=max_terms,
    ))
    return Poly.from_dict(terms, names)
