"""Chow ring arithmetic checked against independent symmetric-function
recursions and the curve pairing."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanoconic.chow import ChowRing, SplitBundleOnP, bundle_of_G, bundle_of_Y
from fanoconic.picard import (
    ELL_F,
    ELL_V,
    ConstructionParams,
    DivisorClassY,
    pair,
)

from .oracles import complete_homogeneous, elementary_symmetric


@pytest.fixture
def ring2():
    return ChowRing.of_Y(ConstructionParams(2))


def test_bundle_rejects_empty():
    with pytest.raises(ValueError):
        SplitBundleOnP(())


def test_base_dimension_must_be_positive():
    with pytest.raises(ValueError):
        ChowRing(0, SplitBundleOnP((0, 2)))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_elementary_symmetric_matches_oracle(m):
    params = ConstructionParams(m)
    for bundle in (bundle_of_Y(params), bundle_of_G(params)):
        for k in range(bundle.rank + 1):
            assert bundle.elementary_symmetric(k) == elementary_symmetric(
                k, bundle.twists
            )


def test_grothendieck_relation_m2(ring2):
    # twists (0, 4, 4): e_1 = 8, e_2 = 16, e_3 = 0, so D^3 = 8HD^2 - 16H^2D.
    expected = 8 * ring2.monomial(1, 2) - 16 * ring2.monomial(2, 1)
    assert ring2.grothendieck_relation() == expected
    assert (ring2.D(3) - expected).is_zero()


@pytest.mark.parametrize("m", [2, 3])
def test_relation_annihilates_chern_alternating_sum(m):
    ring = ChowRing.of_Y(ConstructionParams(m))
    cherns = ring.chern_classes()
    total = ring.zero()
    for k, ck in enumerate(cherns):
        sign = 1 if k % 2 == 0 else -1
        total = total + sign * (ck * ring.D(ring.rank - k))
    assert total.is_zero()


def test_base_hyperplane_truncates(ring2):
    n = ring2.n_base
    assert ring2.H(n + 1).is_zero()
    assert ring2.element({(n + 5, 2): 7}).is_zero()
    assert not ring2.H(n).is_zero()


def test_normalization(ring2):
    n, r = ring2.n_base, ring2.rank
    assert ring2.degree(ring2.H(n) * ring2.D(r - 1)) == 1


@pytest.mark.parametrize("m", [2, 3, 4])
def test_segre_degrees_match_complete_homogeneous(m):
    params = ConstructionParams(m)
    ring = ChowRing.of_Y(params)
    n = params.n_base
    twists = bundle_of_Y(params).twists
    for k in range(n + 1):
        value = ring.degree(ring.H(n - k) * ring.D(2 + k))
        assert value == complete_homogeneous(k, twists)
        assert value == (k + 1) * params.twist**k


def test_segre_degrees_m2_spot_values(ring2):
    assert ring2.degree(ring2.H(5) * ring2.D(3)) == 8
    assert ring2.degree(ring2.H(4) * ring2.D(4)) == 48
    assert ring2.degree(ring2.H(3) * ring2.D(5)) == 256


@pytest.mark.parametrize("m", [2, 3])
def test_segre_degrees_on_divisor_bundle(m):
    params = ConstructionParams(m)
    ring = ChowRing(params.n_base, bundle_of_G(params))
    n = params.n_base
    for k in range(n + 1):
        value = ring.degree(ring.H(n - k) * ring.D(1 + k))
        assert value == complete_homogeneous(k, (0, params.twist))
        assert value == params.twist**k


def test_degree_rejects_inhomogeneous(ring2):
    with pytest.raises(ValueError):
        ring2.degree(ring2.one() + ring2.H())


def test_degree_rejects_wrong_dimension(ring2):
    with pytest.raises(ValueError):
        ring2.degree(ring2.H())


def test_degree_of_zero(ring2):
    assert ring2.degree(ring2.zero()) == 0


def test_mixed_ring_arithmetic_rejected(ring2):
    other = ChowRing.of_Y(ConstructionParams(3))
    with pytest.raises(ValueError):
        ring2.H() + other.H()
    with pytest.raises(ValueError):
        ring2.degree(other.H(other.n_base) * other.D(2))


@pytest.mark.parametrize("m", [2, 3])
def test_fiber_line_pairing_matches_curve_pairing(m):
    # A line in a fiber is H^n * D; intersecting with aD + bH picks out a.
    params = ConstructionParams(m)
    ring = ChowRing.of_Y(params)
    fiber_line = ring.H(params.n_base) * ring.D()
    for a, b in [(1, 0), (0, 1), (3, 1 - m), (2, -2 * m), (-5, 7)]:
        cls_ = DivisorClassY(a, b)
        value = ring.degree(ring.from_divisor(cls_) * fiber_line)
        assert value == pair(cls_, ELL_F) == a


@pytest.mark.parametrize("m", [2, 3])
def test_section_line_pairing_matches_curve_pairing(m):
    # The section V is cut by the two twisted coordinates, so its class is
    # (D - 2mH)^2 and a line inside it is (D - 2mH)^2 * H^{n-1}.
    params = ConstructionParams(m)
    ring = ChowRing.of_Y(params)
    v_class = ring.from_divisor(DivisorClassY(1, -params.twist)) ** 2
    v_line = v_class * ring.H(params.n_base - 1)
    for a, b in [(1, 0), (0, 1), (3, 1 - m), (2, -2 * m), (-5, 7)]:
        cls_ = DivisorClassY(a, b)
        value = ring.degree(ring.from_divisor(cls_) * v_line)
        assert value == pair(cls_, ELL_V) == b


def test_anticanonical_against_section_line(ring2):
    # -K = 3D - H at m = 2 meets a line of V in 1 - m = -1 points.
    anti = ring2.from_divisor(DivisorClassY(3, -1))
    v_line = ring2.from_divisor(DivisorClassY(1, -4)) ** 2 * ring2.H(5)
    assert ring2.degree(anti * v_line) == -1


small_elements = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    st.integers(-9, 9),
    max_size=4,
)


@settings(max_examples=60, deadline=None)
@given(small_elements, small_elements)
def test_multiplication_commutes(ca, cb):
    ring = ChowRing.of_Y(ConstructionParams(2))
    x, y = ring.element(ca), ring.element(cb)
    assert x * y == y * x


@settings(max_examples=40, deadline=None)
@given(small_elements, small_elements, small_elements)
def test_multiplication_associates_and_distributes(ca, cb, cc):
    ring = ChowRing.of_Y(ConstructionParams(2))
    x, y, z = ring.element(ca), ring.element(cb), ring.element(cc)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@settings(max_examples=40, deadline=None)
@given(small_elements, st.integers(0, 3))
def test_power_matches_repeated_product(coeffs, k):
    ring = ChowRing.of_Y(ConstructionParams(2))
    x = ring.element(coeffs)
    expected = ring.one()
    for _ in range(k):
        expected = expected * x
    assert x**k == expected


def test_str_rendering(ring2):
    e = ring2.element({(1, 2): 8, (2, 1): -16})
    assert str(e) == "8*H*D^2 - 16*H^2*D"
    assert str(ring2.zero()) == "0"
    assert str(ring2.one()) == "1"
