from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from splitconf.algebra import ELL, K, KL, L, ONE, ZERO, TensorScalar
from splitconf.clifford import (
    COORDS,
    METRIC,
    Vector6,
    build_P,
    build_X,
    extract_coords,
    gamma,
    inner_product,
    metric_form,
    sigma,
    verify_clifford,
)
from splitconf.matrices import TensorMatrix, quadratic_form

SYMBOL = {
    "0": ZERO,
    "1": ONE,
    "-1": -ONE,
    "l": ELL,
    "-l": -ELL,
    "K": K,
    "-K": -K,
    "KL": KL,
    "-KL": -KL,
    "L": L,
    "-L": -L,
}


def grid(cells):
    return TensorMatrix(
        tuple(tuple(SYMBOL[c] for c in row) for row in cells)
    )


# Expected entries of the six 4x4 matrices, written out longhand.
GAMMA_GRIDS = {
    "x": (
        ("0", "0", "0", "1"),
        ("0", "0", "1", "0"),
        ("0", "1", "0", "0"),
        ("1", "0", "0", "0"),
    ),
    "y": (
        ("0", "0", "0", "-l"),
        ("0", "0", "l", "0"),
        ("0", "-l", "0", "0"),
        ("l", "0", "0", "0"),
    ),
    "z": (
        ("0", "0", "1", "0"),
        ("0", "0", "0", "-1"),
        ("1", "0", "0", "0"),
        ("0", "-1", "0", "0"),
    ),
    "t": (
        ("0", "0", "L", "0"),
        ("0", "0", "0", "L"),
        ("-L", "0", "0", "0"),
        ("0", "-L", "0", "0"),
    ),
    "q": (
        ("0", "0", "K", "0"),
        ("0", "0", "0", "K"),
        ("-K", "0", "0", "0"),
        ("0", "-K", "0", "0"),
    ),
    "p": (
        ("0", "0", "KL", "0"),
        ("0", "0", "0", "KL"),
        ("-KL", "0", "0", "0"),
        ("0", "-KL", "0", "0"),
    ),
}

exact_values = st.integers(-4, 4) | st.fractions(
    min_value=-3, max_value=3, max_denominator=6
)

exact_vectors = st.builds(Vector6, *([exact_values] * 6))

float_vectors = st.builds(
    Vector6,
    *([st.floats(-2, 2, allow_nan=False, allow_infinity=False)] * 6)
)


class TestGammaGrids:
    def test_every_gamma_matches_its_longhand_grid(self):
        for m, cells in GAMMA_GRIDS.items():
            assert gamma(m) == grid(cells), m

    def test_block_structure(self):
        z2 = TensorMatrix.zeros(2)
        for m in COORDS:
            tl, tr, bl, br = gamma(m).blocks()
            assert tl == z2 and br == z2
            assert tr == sigma(m)
            assert bl == sigma(m).star()

    def test_trace_reversal_equals_star_on_sigmas(self):
        for m in COORDS:
            assert sigma(m).trace_reversed() == sigma(m).star()

    def test_sigmas_are_c_hermitian(self):
        for m in COORDS:
            assert sigma(m).is_c_hermitian()


class TestCliffordRelations:
    def test_anticommutators(self):
        ident = TensorMatrix.identity(4)
        for i, m in enumerate(COORDS):
            for n in COORDS[i:]:
                anti = gamma(m) @ gamma(n) + gamma(n) @ gamma(m)
                g = METRIC[m] if m == n else 0
                assert anti == ident.scale(2 * g), (m, n)

    def test_squares_carry_the_metric(self):
        ident = TensorMatrix.identity(4)
        for m in COORDS:
            assert gamma(m) @ gamma(m) == ident.scale(METRIC[m])

    def test_verify_clifford_report(self):
        rep = verify_clifford()
        assert len(rep.checks) == 21
        assert rep.counts()["fail"] == 0
        assert rep.passed


class TestVectors:
    @given(exact_vectors)
    def test_extract_inverts_build_exactly(self, v):
        assert extract_coords(build_P(v)) == v

    @given(float_vectors)
    def test_extract_inverts_build_approximately(self, v):
        got = extract_coords(build_P(v))
        assert got.approx_eq(v, 1e-12)

    @given(exact_vectors)
    def test_embedding_is_linear(self, v):
        assert build_P(v.scale(3)) == build_P(v).scale(3)

    @given(exact_vectors)
    def test_square_is_the_metric_form(self, v):
        p = build_P(v)
        assert p @ p == TensorMatrix.identity(4).scale(metric_form(v))

    @given(exact_vectors)
    def test_two_by_two_form_matches_the_metric_form(self, v):
        assert quadratic_form(build_X(v)) == metric_form(v)

    def test_metric_form_on_basis_vectors(self):
        signs = {"x": 1, "y": 1, "z": 1, "t": -1, "p": -1, "q": 1}
        for m, want in signs.items():
            assert metric_form(Vector6.basis(m)) == want

    @given(exact_vectors)
    def test_p_blocks_carry_x_and_its_reversal(self, v):
        z2 = TensorMatrix.zeros(2)
        x = build_X(v)
        tl, tr, bl, br = build_P(v).blocks()
        assert tl == z2 and br == z2
        assert tr == x
        assert bl == x.trace_reversed()
        assert bl == x.star()

    @given(float_vectors)
    def test_x_is_c_hermitian(self, v):
        assert build_X(v).is_c_hermitian(1e-15)


class TestInnerProduct:
    def test_gamma_orthogonality(self):
        for m in COORDS:
            for n in COORDS:
                want = METRIC[m] if m == n else 0
                assert inner_product(gamma(m), gamma(n)) == want

    @given(exact_vectors, exact_vectors)
    def test_symmetry(self, u, v):
        a, b = build_P(u), build_P(v)
        assert inner_product(a, b) == inner_product(b, a)

    @given(exact_vectors, exact_vectors)
    def test_polarization(self, u, v):
        # <P_u, P_v> recovers the metric pairing of the coordinates
        want = sum(
            METRIC[m] * u.component(m) * v.component(m) for m in COORDS
        )
        assert inner_product(build_P(u), build_P(v)) == want

    def test_rejects_a_non_real_pairing(self):
        ident = TensorMatrix.identity(4)
        with pytest.raises(ValueError):
            inner_product(ident, ident.scale(ELL))


class TestExtractErrors:
    def test_identity_is_outside_the_span(self):
        with pytest.raises(ValueError):
            extract_coords(TensorMatrix.identity(4))

    def test_plane_products_are_outside_the_span(self):
        with pytest.raises(ValueError):
            extract_coords(gamma("x") @ gamma("y"))

    def test_near_miss_respects_the_tolerance(self):
        p = build_P(Vector6(x=1.0)) + TensorMatrix.identity(4).scale(1e-6)
        with pytest.raises(ValueError):
            extract_coords(p, tol=1e-9)
        got = extract_coords(p, tol=1e-3)
        assert got.approx_eq(Vector6(x=1.0), 1e-5)


class TestVector6:
    def test_basis_and_component(self):
        for m in COORDS:
            v = Vector6.basis(m)
            assert v.component(m) == 1
            assert sum(abs(c) for c in v.as_tuple()) == 1

    @given(exact_vectors)
    def test_mapping_round_trip(self, v):
        assert Vector6.from_mapping({m: v.component(m) for m in COORDS}) == v

    def test_exactness_predicate(self):
        assert Vector6(x=1, t=Fraction(1, 3)).is_exact()
        assert not Vector6(x=0.5).is_exact()
