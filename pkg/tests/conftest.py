from pathlib import Path

import numpy as np
import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def test_image_path() -> Path:
    return DATA_DIR / "image256.png"


@pytest.fixture(scope="session")
def test_image(test_image_path) -> np.ndarray:
    from tubal.data_io import load_image

    return load_image(test_image_path)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


def exact_rank_tensor(n1: int, n2: int, n3: int, rank: int, seed: int = 0) -> np.ndarray:
    """Exactly tubal-rank-`rank` tensor from a product of Gaussian factors."""
    from tubal import gaussian_tensor, tprod

    return tprod(
        gaussian_tensor(n1, rank, n3, seed), gaussian_tensor(rank, n2, n3, seed + 1)
    )
