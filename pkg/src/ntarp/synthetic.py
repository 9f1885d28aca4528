"""Mixed Bernoulli-plus-Gaussian two-class generator.

Each coordinate of a class-c point is an independent Bernoulli(p_i^c)
draw plus N(0, sigma^2) noise, so each class is a Gaussian mixture on
the vertices of the unit cube.  A 20-step schedule interpolates the
second class's Bernoulli vector from fully mixed (equal to the first
class's) to the paper-style separated configuration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classifier import Dataset

SCHEDULE_DIM = 65
# 32/32/1 block split of the 65 coordinates; the last coordinate is 1 at
# both endpoints.
_P_START = np.array([0.25] * 32 + [0.8] * 32 + [1.0])
_P_END = np.array([0.8] * 32 + [0.25] * 32 + [1.0])


@dataclass(frozen=True)
class SyntheticModel:
    """Bernoulli parameter vectors for the two classes plus the noise level."""

    p_plus: np.ndarray
    p_minus: np.ndarray
    sigma: float = 0.0

    def __post_init__(self):
        pp = np.asarray(self.p_plus, dtype=float)
        pm = np.asarray(self.p_minus, dtype=float)
        if pp.ndim != 1 or pp.shape != pm.shape:
            raise ValueError("parameter vectors must be 1-D with matching length")
        for name, p in (("p_plus", pp), ("p_minus", pm)):
            if np.any((p < 0.0) | (p > 1.0)):
                raise ValueError(f"{name} entries must lie in [0, 1]")
        if not (np.isfinite(self.sigma) and self.sigma >= 0.0):
            raise ValueError("sigma must be finite and >= 0")
        object.__setattr__(self, "p_plus", pp)
        object.__setattr__(self, "p_minus", pm)

    @property
    def dim(self) -> int:
        return self.p_plus.shape[0]


def sample(model: SyntheticModel, N: int, seed) -> Dataset:
    """Draw a balanced dataset of N points, N/2 per class, shuffled."""
    if N < 2 or N % 2 != 0:
        raise ValueError(f"N must be even and >= 2, got {N}")
    rng = np.random.default_rng(seed)
    half = N // 2
    d = model.dim
    X_plus = (rng.random((half, d)) < model.p_plus).astype(float)
    X_minus = (rng.random((half, d)) < model.p_minus).astype(float)
    X = np.vstack([X_plus, X_minus])
    if model.sigma > 0.0:
        X += rng.normal(0.0, model.sigma, size=X.shape)
    y = np.concatenate([np.ones(half, dtype=np.int64), -np.ones(half, dtype=np.int64)])
    perm = rng.permutation(N)
    return Dataset(features=X[perm], labels=y[perm])


def schedule(steps: int, sigma: float = 0.0) -> list[SyntheticModel]:
    """Linear interpolation of p_minus from p_plus to the separated endpoint.

    Step 0 is the fully mixed configuration (Bayes error 50%); the last
    step realizes the separated endpoint exactly.
    """
    if steps < 2:
        raise ValueError(f"need at least 2 schedule steps, got {steps}")
    models = []
    for t in range(steps):
        frac = t / (steps - 1)
        p_minus = _P_START + frac * (_P_END - _P_START)
        models.append(SyntheticModel(p_plus=_P_START, p_minus=p_minus, sigma=sigma))
    return models
