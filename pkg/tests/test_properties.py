import random

from hypothesis import given, settings
from hypothesis import strategies as st

import properties

seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_exactalg_roundtrips(seed):
    assert properties.exactalg_roundtrips(random.Random(seed), 40) == []


@settings(max_examples=5, deadline=None)
@given(seeds)
def test_cocycle_identity(seed):
    assert properties.cocycle_identity(random.Random(seed), 2000) == []


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_sum_ef_is_degree(seed):
    assert properties.sum_ef_is_degree(random.Random(seed), 10) == []


@settings(max_examples=5, deadline=None)
@given(seeds)
def test_class_constancy(seed):
    assert properties.class_constancy(random.Random(seed), 100) == []


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_orbit_oracle_consistency(seed):
    assert properties.orbit_oracle(random.Random(seed), 10) == []
