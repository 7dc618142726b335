import numpy as np
import pytest

from tubal import CompletionConfig, Mask, apply_mask, complete, generate_mask
from tubal.errors import ConfigError, DimensionError
from tests.conftest import exact_rank_tensor


class TestMask:
    def test_rejects_non_binary(self):
        with pytest.raises(ValueError):
            Mask(np.full((2, 2, 1), 0.5))

    def test_observed_count(self):
        m = Mask(np.stack([np.eye(3), np.eye(3)], axis=2))
        assert m.observed_count == 6


class TestApplyMask:
    def test_all_ones(self, rng):
        x = rng.standard_normal((4, 5, 3))
        assert np.array_equal(apply_mask(x, Mask(np.ones_like(x))), x)

    def test_all_zeros(self, rng):
        x = rng.standard_normal((4, 5, 3))
        assert np.array_equal(apply_mask(x, Mask(np.zeros_like(x))), np.zeros_like(x))

    def test_idempotent(self, rng):
        x = rng.standard_normal((4, 5, 3))
        t = generate_mask(4, 5, 3, "random", 0.4, seed=1)
        once = apply_mask(x, t)
        assert np.array_equal(apply_mask(once, t), once)

    def test_shape_mismatch(self, rng):
        with pytest.raises(DimensionError):
            apply_mask(rng.standard_normal((4, 5, 3)), Mask(np.ones((4, 5, 2))))


class TestGenerateMask:
    def test_zero_ratio(self):
        t = generate_mask(5, 6, 3, "random", 0.0, seed=0)
        assert t.observed_count == 5 * 6 * 3

    def test_exact_pixel_count(self):
        t = generate_mask(100, 100, 3, "random", 0.7, seed=0)
        zeros = t.data.size - t.observed_count
        assert zeros == 7000 * 3
        # pixel semantics: channels drop together
        assert np.array_equal(t.data[:, :, 0], t.data[:, :, 1])

    def test_seed_determinism(self):
        a = generate_mask(30, 40, 3, "random", 0.5, seed=9)
        b = generate_mask(30, 40, 3, "random", 0.5, seed=9)
        assert np.array_equal(a.data, b.data)

    def test_rows_pattern(self):
        t = generate_mask(10, 4, 2, "rows", 0.5, seed=0)
        row_gone = np.all(t.data == 0.0, axis=(1, 2))
        assert row_gone.sum() == 5

    def test_columns_pattern(self):
        t = generate_mask(4, 10, 2, "columns", 0.3, seed=0)
        col_gone = np.all(t.data == 0.0, axis=(0, 2))
        assert col_gone.sum() == 3

    def test_ratio_out_of_range(self):
        with pytest.raises(ValueError):
            generate_mask(4, 4, 2, "random", 1.0)
        with pytest.raises(ValueError):
            generate_mask(4, 4, 2, "random", -0.1)


class TestComplete:
    def test_no_missing_exact_rank_one_iteration(self):
        x = exact_rank_tensor(20, 20, 3, rank=4, seed=3)
        t = Mask(np.ones_like(x))
        cfg = CompletionConfig(R=4, P=4, q=2, seed=0, iters=1)
        out, trace = complete(x, t, cfg)
        assert np.abs(out - x).max() < 1e-8 * np.abs(x).max()
        assert len(trace) == 1

    def test_exact_rank_converges(self):
        x = exact_rank_tensor(60, 60, 3, rank=5, seed=4)
        t = generate_mask(60, 60, 3, "random", 0.5, seed=1)
        observed = apply_mask(x, t)
        cfg = CompletionConfig(R=5, P=5, q=2, seed=0, iters=100)
        _, trace = complete(observed, t, cfg)
        assert trace[-1].relative_error < 1e-3

    def test_data_fidelity_each_iteration(self):
        # re-imposition copies observed entries bit-exactly
        x = exact_rank_tensor(15, 15, 2, rank=3, seed=5)
        t = generate_mask(15, 15, 2, "random", 0.3, seed=2)
        observed = apply_mask(x, t)
        cfg = CompletionConfig(R=3, P=3, q=1, seed=0, iters=3)
        out, _ = complete(observed, t, cfg)
        # output itself is the low-rank iterate; re-imposing must be exact
        reimposed = t.data * observed + (1 - t.data) * out
        assert np.array_equal(t.data * reimposed, observed)

    def test_shape_preserved_and_deterministic(self):
        x = exact_rank_tensor(20, 16, 3, rank=3, seed=6)
        t = generate_mask(20, 16, 3, "random", 0.4, seed=3)
        observed = apply_mask(x, t)
        cfg = CompletionConfig(R=3, P=3, q=1, seed=7, iters=4)
        out1, trace1 = complete(observed, t, cfg)
        out2, trace2 = complete(observed, t, cfg)
        assert out1.shape == x.shape
        assert np.array_equal(out1, out2)
        assert [r.relative_error for r in trace1] == [r.relative_error for r in trace2]

    def test_mean_fill_initialization(self):
        x = exact_rank_tensor(20, 20, 3, rank=3, seed=8) + 5.0
        t = generate_mask(20, 20, 3, "random", 0.4, seed=4)
        observed = apply_mask(x, t)
        cfg = CompletionConfig(R=3, P=3, q=1, seed=0, iters=5, init="mean_fill")
        out, trace = complete(observed, t, cfg)
        assert out.shape == x.shape
        assert trace[0].relative_error >= trace[-1].relative_error - 1e-9

    def test_invalid_config(self):
        with pytest.raises(ConfigError):
            CompletionConfig(R=3, iters=0)
        with pytest.raises(ConfigError):
            CompletionConfig(R=3, algorithm="svd")
        with pytest.raises(ConfigError):
            CompletionConfig(R=3, init="ones")

    def test_power_algorithm_variant(self):
        x = exact_rank_tensor(20, 20, 3, rank=3, seed=9)
        t = generate_mask(20, 20, 3, "random", 0.3, seed=5)
        observed = apply_mask(x, t)
        cfg = CompletionConfig(R=3, P=3, q=1, seed=0, iters=10, algorithm="power")
        _, trace = complete(observed, t, cfg)
        assert trace[-1].relative_error < trace[0].relative_error
