"""Shared hypothesis strategies."""
from hypothesis import strategies as st

from centralfiring.rootsys import build, supported_types

SMALL_TYPES = [str(t) for t in supported_types(4)]
SIMPLY_LACED_UP_TO_8 = [str(t) for t in supported_types(8) if t.simply_laced]


def root_systems(names=SMALL_TYPES):
    return st.sampled_from(names).map(build)


def weights(rs, lo=-3, hi=3):
    return st.tuples(*[st.integers(lo, hi)] * rs.rank)


def dominant_weights(rs, hi=3):
    return st.tuples(*[st.integers(0, hi)] * rs.rank)
