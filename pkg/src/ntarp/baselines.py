"""From-scratch linear baselines: logistic regression and linear SVM.

Deliberately plain implementations used only as comparison classifiers:
full-batch gradient descent on the regularized logistic loss, and a
Pegasos-style stochastic subgradient method on the hinge loss with an
unregularized bias.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classifier import Dataset


@dataclass(frozen=True)
class LinearModel:
    weights: np.ndarray
    bias: float

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or not np.all(np.isfinite(w)) or not np.isfinite(self.bias):
            raise ValueError("weights and bias must be finite")
        object.__setattr__(self, "weights", w)


def logistic_loss(data: Dataset, w: np.ndarray, b: float, l2: float) -> float:
    margins = data.labels * (data.features @ w + b)
    return float(np.mean(np.logaddexp(0.0, -margins)) + 0.5 * l2 * w @ w)


def fit_logistic(
    data: Dataset, l2: float = 0.0, iters: int = 2000, step: float = 0.1
) -> LinearModel:
    """Full-batch gradient descent from a zero initialization; deterministic."""
    if l2 < 0.0:
        raise ValueError("l2 must be >= 0")
    X, y = data.features, data.labels
    N, d = X.shape
    w = np.zeros(d)
    b = 0.0
    for _ in range(iters):
        margins = y * (X @ w + b)
        # d/dm log(1 + e^-m) = -sigmoid(-m)
        sig = 1.0 / (1.0 + np.exp(np.clip(margins, -500, 500)))
        grad_w = -(X.T @ (y * sig)) / N + l2 * w
        grad_b = -float(np.mean(y * sig))
        w -= step * grad_w
        b -= step * grad_b
        if not (np.all(np.isfinite(w)) and np.isfinite(b)):
            raise ArithmeticError("logistic fit diverged; reduce the step size")
    return LinearModel(weights=w, bias=b)


def fit_linear_svm(
    data: Dataset, lam: float = 1e-4, epochs: int = 200, seed: int = 0
) -> LinearModel:
    """Pegasos stochastic subgradient descent on the hinge loss."""
    if lam <= 0.0:
        raise ValueError("lam must be > 0")
    X, y = data.features, data.labels
    N, d = X.shape
    rng = np.random.default_rng(seed)
    w = np.zeros(d)
    b = 0.0
    t = 0
    for _ in range(epochs):
        for i in rng.permutation(N):
            t += 1
            eta = 1.0 / (lam * t)
            w *= 1.0 - eta * lam
            if y[i] * (X[i] @ w + b) < 1.0:
                w += eta * y[i] * X[i]
                b += eta * y[i]
        if not (np.all(np.isfinite(w)) and np.isfinite(b)):
            raise ArithmeticError("SVM fit diverged")
    return LinearModel(weights=w, bias=b)


def svm_objective(data: Dataset, w: np.ndarray, b: float, lam: float) -> float:
    margins = data.labels * (data.features @ w + b)
    return float(0.5 * lam * w @ w + np.mean(np.maximum(0.0, 1.0 - margins)))


def predict_linear(model: LinearModel, x: np.ndarray) -> int:
    """sign(w.x + b) with sign(0) := +1."""
    x = np.asarray(x, dtype=float)
    if x.shape != model.weights.shape:
        raise ValueError(
            f"expected a length-{model.weights.shape[0]} vector, got shape {x.shape}"
        )
    return 1 if x @ model.weights + model.bias >= 0.0 else -1


def predict_linear_many(model: LinearModel, X: np.ndarray) -> np.ndarray:
    v = np.asarray(X, dtype=float) @ model.weights + model.bias
    return np.where(v >= 0.0, 1, -1)


def linear_error(model: LinearModel, data: Dataset) -> float:
    return float(np.mean(predict_linear_many(model, data.features) != data.labels))
