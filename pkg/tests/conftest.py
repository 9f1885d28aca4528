import os

import numpy as np
import pytest


@pytest.fixture(scope="session")
def optdigits_path(tmp_path_factory):
    """Path to a 65-column optdigits CSV of the 1797-point corpus.

    Uses $NTARP_OPTDIGITS if set; otherwise materializes the corpus
    from scikit-learn's copy.  Skips if neither source is available.
    """
    env = os.environ.get("NTARP_OPTDIGITS")
    if env:
        if not os.path.exists(env):
            pytest.skip(f"NTARP_OPTDIGITS points at a missing file: {env}")
        return env
    sklearn_datasets = pytest.importorskip(
        "sklearn.datasets", reason="no optdigits file and scikit-learn unavailable"
    )
    bunch = sklearn_datasets.load_digits()
    path = tmp_path_factory.mktemp("optdigits") / "optdigits.csv"
    with open(path, "w", encoding="utf-8") as fh:
        for x, y in zip(bunch.data.astype(int), bunch.target):
            fh.write(",".join(map(str, list(x) + [int(y)])) + "\n")
    return str(path)


@pytest.fixture(scope="session")
def optdigits(optdigits_path):
    from ntarp import data

    return data.load_optdigits(optdigits_path)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
