import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tubal import (
    concat_lateral,
    fro_norm,
    frontal_slice,
    identity_tensor,
    make_tensor,
    spectral_norm,
    t_transpose,
    tprod,
)
from tubal.errors import DimensionError
from tubal.fourier import dft_mode3
from tubal.oracle import bcirc, reference_spectral_norm


class TestMakeTensor:
    def test_singleton(self):
        x = make_tensor(1, 1, 1, [7.0])
        assert x.shape == (1, 1, 1)
        assert x[0, 0, 0] == 7.0

    def test_slice_major_layout(self):
        x = make_tensor(2, 2, 2, list(range(8)))
        # first four values fill slice 1 row-major
        assert np.array_equal(x[:, :, 0], [[0, 1], [2, 3]])
        assert np.array_equal(x[:, :, 1], [[4, 5], [6, 7]])

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            make_tensor(2, 3, 4, list(range(23)))

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            make_tensor(1, 1, 2, [1.0, np.nan])


class TestFrontalSlice:
    def test_identity_slices(self):
        eye = identity_tensor(2, 3)
        assert np.array_equal(frontal_slice(eye, 1), np.eye(2))
        assert np.array_equal(frontal_slice(eye, 2), np.zeros((2, 2)))

    def test_out_of_range(self):
        eye = identity_tensor(2, 3)
        with pytest.raises(IndexError):
            frontal_slice(eye, 4)


class TestTranspose:
    def test_single_slice_is_matrix_transpose(self, rng):
        x = rng.standard_normal((3, 2, 1))
        assert np.array_equal(t_transpose(x)[:, :, 0], x[:, :, 0].T)

    def test_involution(self, rng):
        x = rng.standard_normal((3, 2, 4))
        assert np.array_equal(t_transpose(t_transpose(x)), x)

    def test_bcirc_of_transpose_is_transpose_of_bcirc(self, rng):
        x = rng.standard_normal((3, 2, 4))
        assert np.abs(bcirc(t_transpose(x)) - bcirc(x).T).max() < 1e-12

    def test_product_transpose_rule(self, rng):
        x = rng.standard_normal((4, 3, 5))
        y = rng.standard_normal((3, 2, 5))
        lhs = t_transpose(tprod(x, y))
        rhs = tprod(t_transpose(y), t_transpose(x))
        assert np.abs(lhs - rhs).max() < 1e-10

    @given(
        n1=st.integers(1, 4), n2=st.integers(1, 4), n3=st.integers(1, 6),
        seed=st.integers(0, 2**31),
    )
    @settings(max_examples=30, deadline=None)
    def test_involution_all_shapes(self, n1, n2, n3, seed):
        x = np.random.default_rng(seed).standard_normal((n1, n2, n3))
        assert np.array_equal(t_transpose(t_transpose(x)), x)


class TestIdentity:
    def test_shape_and_slices(self):
        eye = identity_tensor(2, 1)
        assert eye.shape == (2, 2, 1)
        assert np.array_equal(eye[:, :, 0], np.eye(2))

    def test_identity_law(self, rng):
        x = rng.standard_normal((3, 2, 4))
        assert np.abs(tprod(identity_tensor(3, 4), x) - x).max() < 1e-12


class TestConcatLateral:
    def test_single_block(self, rng):
        x = rng.standard_normal((2, 3, 2))
        assert np.array_equal(concat_lateral([x]), x)

    def test_two_columns(self, rng):
        a = rng.standard_normal((2, 1, 3))
        b = rng.standard_normal((2, 1, 3))
        c = concat_lateral([a, b])
        assert c.shape == (2, 2, 3)
        assert np.array_equal(c[:, :1, :], a)
        assert np.array_equal(c[:, 1:, :], b)

    def test_mismatched_depth(self, rng):
        with pytest.raises(DimensionError):
            concat_lateral(
                [rng.standard_normal((2, 1, 3)), rng.standard_normal((2, 1, 4))]
            )

    def test_slicing_recovers_parts(self, rng):
        parts = [rng.standard_normal((3, w, 2)) for w in (1, 2, 3)]
        c = concat_lateral(parts)
        offset = 0
        for p in parts:
            w = p.shape[1]
            assert np.array_equal(c[:, offset : offset + w, :], p)
            offset += w


class TestNorms:
    def test_fro_norm_all_ones(self):
        assert fro_norm(np.ones((2, 2, 2))) == pytest.approx(np.sqrt(8))

    def test_zero_tensor(self):
        assert fro_norm(np.zeros((2, 3, 4))) == 0.0
        assert spectral_norm(np.zeros((2, 3, 4))) == 0.0

    def test_fro_norm_fourier_identity(self, rng):
        x = rng.standard_normal((3, 2, 4))
        fourier_side = np.linalg.norm(dft_mode3(x).data) / np.sqrt(4)
        assert abs(fro_norm(x) - fourier_side) < 1e-12

    def test_spectral_norm_identity(self):
        assert spectral_norm(identity_tensor(3, 4)) == pytest.approx(1.0)

    def test_spectral_norm_vs_oracle(self, rng):
        x = rng.standard_normal((3, 2, 4))
        assert abs(spectral_norm(x) - reference_spectral_norm(x)) < 1e-10

    def test_submultiplicativity(self, rng):
        for _ in range(10):
            x = rng.standard_normal((3, 2, 4))
            y = rng.standard_normal((2, 5, 4))
            assert spectral_norm(tprod(x, y)) <= (
                spectral_norm(x) * spectral_norm(y) + 1e-10
            )
