import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from splitconf.algebra import L, ONE
from splitconf.clifford import Vector6, build_P, build_X, metric_form
from splitconf.group import (
    PLANES,
    act_on_P,
    act_on_X,
    act_on_vector,
    appendix_check,
    build_reference,
    canonical_plane,
    compose_so6,
    generator,
    metric6,
    pi_project,
    plane_kind,
    so6_matrix,
    so6_step,
    verify_group,
    verify_properties,
)
from splitconf.matrices import TensorMatrix, quadratic_form

angles = st.floats(-1.2, 1.2, allow_nan=False, allow_infinity=False)

plane_names = st.sampled_from(PLANES)

words = st.lists(st.tuples(plane_names, angles), max_size=4)

float_vectors = st.builds(
    Vector6,
    *([st.floats(-1, 1, allow_nan=False, allow_infinity=False)] * 6)
)

# a plane rotates when the two metric signs agree and boosts otherwise
EXPECTED_KINDS = {
    "xy": "rotation",
    "yz": "rotation",
    "zx": "rotation",
    "qx": "rotation",
    "qy": "rotation",
    "qz": "rotation",
    "tp": "rotation",
    "tx": "boost",
    "ty": "boost",
    "tz": "boost",
    "tq": "boost",
    "px": "boost",
    "py": "boost",
    "pz": "boost",
    "pq": "boost",
}


class TestPlaneNames:
    def test_canonical_resolution(self):
        assert canonical_plane("zx") == ("zx", 1)
        assert canonical_plane("xz") == ("zx", -1)
        assert canonical_plane(("p", "q")) == ("pq", 1)
        assert canonical_plane(("q", "p")) == ("pq", -1)

    def test_unknown_plane_rejected(self):
        with pytest.raises(ValueError):
            canonical_plane("xx")
        with pytest.raises(ValueError):
            canonical_plane("ab")

    @given(plane_names, angles)
    def test_reversed_pair_negates_the_angle(self, name, theta):
        flipped = name[::-1]
        assert generator(flipped, theta).approx_eq(
            generator(name, -theta), 1e-15
        )

    def test_kinds(self):
        for name, want in EXPECTED_KINDS.items():
            assert plane_kind(name) == want, name


class TestGenerator:
    def test_identity_at_zero(self):
        for name in PLANES:
            assert generator(name, 0) == TensorMatrix.identity(4)

    @given(plane_names, angles, angles)
    def test_one_parameter_group_law(self, name, t1, t2):
        lhs = generator(name, t1) @ generator(name, t2)
        rhs = generator(name, t1 + t2)
        assert lhs.approx_eq(rhs, 1e-12)

    @given(plane_names, angles)
    def test_inverse_law(self, name, theta):
        prod = generator(name, theta) @ generator(name, -theta)
        assert prod.approx_eq(TensorMatrix.identity(4), 1e-12)

    def test_dilation_generator_is_diagonal(self):
        g = generator("pq", 0.6)
        want = ONE * math.cosh(0.3) - L * math.sinh(0.3)
        for i in range(4):
            for j in range(4):
                if i == j:
                    assert g.rows[i][j].approx_eq(want, 1e-15)
                else:
                    assert not g.rows[i][j].nonzero


class TestCoordinateAction:
    def test_boost_moves_time_toward_z(self):
        img = act_on_vector([("tz", 0.8)], Vector6(t=1))
        assert abs(img.t - math.cosh(0.8)) < 1e-12
        assert abs(img.z - math.sinh(0.8)) < 1e-12

    def test_rotation_in_the_xy_plane(self):
        img = act_on_vector([("xy", 0.5)], Vector6(x=1))
        assert abs(img.x - math.cos(0.5)) < 1e-12
        assert abs(img.y + math.sin(0.5)) < 1e-12

    def test_dilation_scales_p_plus_q(self):
        v = Vector6(p=0.3, q=0.7)
        img = act_on_vector([("pq", 0.5)], v)
        assert abs((img.p + img.q) - math.exp(0.5)) < 1e-12
        assert abs((img.p - img.q) - math.exp(-0.5) * (v.p - v.q)) < 1e-12

    @given(plane_names, angles)
    def test_step_matches_definition(self, name, theta):
        dev = np.max(np.abs(so6_step(name, theta) - so6_matrix([(name, theta)])))
        assert dev < 1e-12

    @given(words)
    def test_words_compose(self, word):
        lhs = compose_so6(word)
        rhs = np.eye(6)
        for plane, theta in word:
            rhs = so6_step(plane, theta) @ rhs
        assert np.max(np.abs(lhs - rhs)) == 0

    @given(words, float_vectors)
    def test_metric_form_is_invariant(self, word, v):
        img = act_on_vector(word, v)
        assert abs(metric_form(img) - metric_form(v)) < 1e-9

    @given(words)
    def test_six_by_six_preserves_the_metric(self, word):
        r = compose_so6(word)
        g = metric6()
        assert np.max(np.abs(r.T @ g @ r - g)) < 1e-11
        assert abs(np.linalg.det(r) - 1) < 1e-11

    def test_empty_word_is_the_identity(self):
        v = Vector6(x=0.3, t=-0.2, q=1.1)
        assert act_on_vector([], v) == v


class TestTwoByTwoAction:
    @given(words, float_vectors)
    def test_agrees_with_the_four_by_four_action(self, word, v):
        p_img = act_on_P(word, build_P(v))
        x_img = act_on_X(word, build_X(v))
        _, tr, _, _ = p_img.blocks()
        assert (tr - x_img).max_abs() <= 1e-14

    @given(words, float_vectors)
    def test_preserves_hermiticity(self, word, v):
        x_img = act_on_X(word, build_X(v))
        assert x_img.is_c_hermitian(1e-12 * max(1, x_img.max_abs()))

    @given(words, float_vectors)
    def test_preserves_the_quadratic_form(self, word, v):
        x_img = act_on_X(word, build_X(v))
        assert abs(quadratic_form(x_img) - metric_form(v)) < 1e-9


class TestSpanValidation:
    def test_off_span_input_is_rejected(self):
        bad = build_P(Vector6(x=1)) + TensorMatrix.identity(4)
        with pytest.raises(ValueError):
            act_on_P([], bad)

    def test_projection_kills_p_and_q(self):
        from splitconf.clifford import gamma

        assert pi_project(gamma("p")).is_zero()
        assert pi_project(gamma("q")).is_zero()
        assert pi_project(gamma("x")) == gamma("x")


class TestStructuralSuites:
    def test_properties_report_is_all_green(self):
        rep = verify_properties()
        counts = rep.counts()
        assert len(rep.checks) == 216
        assert counts["pass"] == 216

    def test_group_report_has_no_failures(self):
        rep = verify_group({"samples": 60, "seed": 7, "tolerance": 1e-12})
        assert rep.counts()["fail"] == 0


class TestAppendixTable:
    def test_exactly_one_documented_discrepancy(self):
        rep = appendix_check()
        assert len(rep.checks) == 15
        counts = rep.counts()
        assert counts["fail"] == 0
        assert counts["discrepancy-documented"] == 1
        flagged = [c for c in rep.checks if c.status != "pass"]
        assert flagged[0].check_id == "appendix[ty]"
        # the transcription disagrees only in the lower off-diagonal cells
        assert "(2,3)" in flagged[0].actual or "(2, 3)" in flagged[0].actual

    def test_reference_matches_recomputation_for_tz(self):
        assert build_reference("tz", 0.9).approx_eq(generator("tz", 0.9), 1e-15)

    def test_reference_differs_from_recomputation_for_ty(self):
        ref = build_reference("ty", 0.9)
        rec = generator("ty", 0.9)
        assert not ref.approx_eq(rec, 1e-9)
        # upper block agrees; the sign flip sits in the lower block
        assert ref.rows[0][1].approx_eq(rec.rows[0][1], 1e-15)
        assert ref.rows[2][3].approx_eq(-rec.rows[2][3], 1e-15)
