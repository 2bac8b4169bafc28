import math

import pytest
from hypothesis import given, strategies as st

from hyperentropy.core import validate
from hyperentropy.entropy import (
    degree_entropy,
    entropy_from_h,
    h_bounds,
    h_value,
    theorem_bounds,
)
from hyperentropy.errors import InvalidParameters
from hyperentropy.families import family_member, hyperstar

from .conftest import class_instances, relabel_randomly


def shannon(weights):
    """Independent route: -sum p log2 p over normalised weights."""
    s = sum(weights)
    return -sum(w / s * math.log2(w / s) for w in weights)


def test_examples(loose_path_3_3):
    assert degree_entropy(hyperstar(2, 3), 1) == pytest.approx(2.2516291673878226, abs=1e-12)
    assert degree_entropy(family_member("HII", 3, 3), 1) == pytest.approx(2.4193819456463714, abs=1e-12)
    assert h_value(validate(3, [[0, 1, 2]])) == 0.0
    assert h_value(hyperstar(4, 3)) == pytest.approx(8.0, abs=1e-12)
    assert h_value(loose_path_3_3) == pytest.approx(4.0, abs=1e-12)


@given(class_instances())
def test_t_zero_is_log_n(H):
    assert degree_entropy(H, 0) == math.log2(H.n)


@given(class_instances(), st.floats(-3, 3, allow_nan=False))
def test_matches_direct_shannon(H, t):
    assert degree_entropy(H, t) == pytest.approx(shannon([d ** t for d in H.degrees()]), abs=1e-12)


@given(class_instances(), st.floats(-3, 3, allow_nan=False))
def test_shannon_range(H, t):
    I = degree_entropy(H, t)
    assert -1e-12 <= I <= math.log2(H.n) + 1e-12


@given(class_instances())
def test_identity_with_h(H):
    assert abs(degree_entropy(H, 1) - entropy_from_h(h_value(H), H.k, H.m)) <= 1e-12


@given(class_instances(), st.integers(0, 1000), st.floats(-3, 3, allow_nan=False))
def test_label_invariance(H, seed, t):
    assert degree_entropy(relabel_randomly(H, seed), t) == degree_entropy(H, t)


def test_theorem_bounds_examples():
    b = theorem_bounds("supertree", 3, 4)
    assert b.lower == pytest.approx(2.9182958340544896, abs=1e-12)
    assert b.upper == pytest.approx(3.084962500721156, abs=1e-12)
    assert b.lower_witness == ("Hyperstar",) and b.upper_witness == ("TStar",)
    b = theorem_bounds("unicyclic", 3, 2)
    assert b.lower == pytest.approx(1.9182958340544896, abs=1e-12)
    assert b.upper == pytest.approx(b.lower, abs=1e-12)
    b = theorem_bounds("bicyclic", 4, 2)
    assert b.lower == pytest.approx(2.25, abs=1e-12) and b.upper == pytest.approx(2.25, abs=1e-12)
    assert set(b.lower_witness) == {"HIV", "HV"} and b.upper_witness == ("HIII",)


def test_h_bounds_examples():
    b = h_bounds("supertree", 3, 4)
    assert (b.lower, b.upper) == (pytest.approx(6), pytest.approx(8))
    b = h_bounds("unicyclic", 5, 3)
    assert b.lower == pytest.approx(6) and b.upper == pytest.approx(6.754887502163468, abs=1e-12)
    b = h_bounds("bicyclic", 4, 3)
    assert b.lower == pytest.approx(8) and b.upper == pytest.approx(8.754887502163468, abs=1e-12)


@pytest.mark.parametrize("cls", ["supertree", "unicyclic", "bicyclic"])
@pytest.mark.parametrize("k", [3, 4, 5, 7])
@pytest.mark.parametrize("m", [2, 3, 4, 10, 50])
def test_bound_duality_and_order(cls, k, m):
    I, h = theorem_bounds(cls, k, m), h_bounds(cls, k, m)
    km = k * m
    assert abs(I.lower - (math.log2(km) - h.upper / km)) <= 1e-12
    assert abs(I.upper - (math.log2(km) - h.lower / km)) <= 1e-12
    assert I.lower <= I.upper + 1e-12


@pytest.mark.parametrize("args", [("supertree", 2, 3), ("unicyclic", 3, 1), ("other", 3, 3)])
def test_bounds_reject(args):
    with pytest.raises((InvalidParameters, ValueError)):
        theorem_bounds(*args)
