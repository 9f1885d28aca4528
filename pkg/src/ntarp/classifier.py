"""The n-TARP classifier.

Training draws n directions uniformly from the unit sphere in the
polynomially expanded feature space, projects the training data on each
direction, finds the error-minimizing threshold and orientation by an
exact sorted sweep, and keeps the best of the n resulting stumps.

Conventions fixed here:
  * prediction is s * sign(a . phi_k(x) - tau) with sign(0) := +1
  * the threshold sits at the midpoint of the optimal gap (or one unit
    outside the data range for the extreme cells)
  * ties between equally good cells are broken in sweep order with
    orientation +1 tried first; ties between equally good projections go
    to the lowest projection index
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .features import PolyFeatureMap, build_map, expand, expand_matrix


@dataclass(frozen=True)
class Dataset:
    """N labeled feature vectors, labels in {-1, +1}."""

    features: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        X = np.asarray(self.features, dtype=float)
        y = np.asarray(self.labels)
        if X.ndim != 2 or X.shape[0] < 1:
            raise ValueError("features must be a non-empty N x d matrix")
        if not np.all(np.isfinite(X)):
            raise ValueError("features must be finite")
        if y.shape != (X.shape[0],):
            raise ValueError("labels must be a length-N vector")
        if not np.all(np.isin(y, (-1, 1))):
            raise ValueError("labels must be -1 or +1")
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "labels", y.astype(np.int64))

    @property
    def n_points(self) -> int:
        return self.features.shape[0]

    @property
    def dim(self) -> int:
        return self.features.shape[1]


@dataclass(frozen=True)
class ProjectionStump:
    """One unit direction plus the optimal 1-D threshold rule for it."""

    direction: np.ndarray
    threshold: float
    orientation: int
    train_error: float

    def __post_init__(self):
        a = np.asarray(self.direction, dtype=float)
        if abs(np.linalg.norm(a) - 1.0) > 1e-12:
            raise ValueError("direction must have unit Euclidean norm")
        if self.orientation not in (-1, 1):
            raise ValueError("orientation must be -1 or +1")
        if not 0.0 <= self.train_error <= 1.0:
            raise ValueError("train_error must lie in [0, 1]")
        object.__setattr__(self, "direction", a)


@dataclass(frozen=True)
class TarpModel:
    """Best-of-n projection stump together with its fit configuration."""

    feature_map: PolyFeatureMap
    stump: ProjectionStump
    n: int
    seed: int
    per_projection_errors: np.ndarray = field(repr=False)

    def __post_init__(self):
        errs = np.asarray(self.per_projection_errors, dtype=float)
        if errs.shape != (self.n,):
            raise ValueError("need one training error per projection")
        if abs(errs.min() - self.stump.train_error) > 1e-12:
            raise ValueError("stump train_error must equal min per-projection error")
        object.__setattr__(self, "per_projection_errors", errs)


@dataclass(frozen=True)
class Dichotomy:
    """Label vector in {-1,+1}^N produced by one classifier on N fixed points."""

    bits: tuple

    def __post_init__(self):
        if not all(b in (-1, 1) for b in self.bits):
            raise ValueError("bits must be -1 or +1")


def sample_direction(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Uniform draw from the unit sphere S^(dim-1)."""
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    while True:
        a = rng.standard_normal(dim)
        norm = np.linalg.norm(a)
        if norm > 0.0:  # zero draw has probability 0
            return a / norm


def _cell_errors_plus(y_sorted: np.ndarray) -> np.ndarray:
    """Misclassification counts for orientation +1 over all N+1 sweep cells.

    Cell j puts the j smallest projections to the left of the threshold
    (predicted -1), the rest to the right (predicted +1).
    """
    N = y_sorted.shape[0]
    pos_prefix = np.concatenate(([0], np.cumsum(y_sorted == 1, axis=0)))
    neg_total = N - pos_prefix[-1]
    j = np.arange(N + 1)
    return 2 * pos_prefix - j + neg_total


def _valid_cells(z_sorted: np.ndarray) -> np.ndarray:
    """Cells a threshold can actually occupy: tied values collapse to one block."""
    N = z_sorted.shape[0]
    valid = np.ones(N + 1, dtype=bool)
    valid[1:N] = z_sorted[1:] > z_sorted[:-1]
    return valid


def _cell_threshold(z_sorted: np.ndarray, j: int) -> float:
    N = z_sorted.shape[0]
    if j == 0:
        return float(z_sorted[0] - 1.0)
    if j == N:
        return float(z_sorted[-1] + 1.0)
    return float(0.5 * (z_sorted[j - 1] + z_sorted[j]))


def best_threshold(z: np.ndarray, y: np.ndarray) -> tuple[float, int, int]:
    """Exact 1-D threshold ERM by sort and sweep, O(N log N).

    Returns (tau, s, error_count) minimizing the number of points with
    s * sign(z_i - tau) != y_i over all real tau and s in {-1, +1}.
    """
    z = np.asarray(z, dtype=float)
    y = np.asarray(y)
    if z.ndim != 1 or z.shape != y.shape or z.shape[0] < 1:
        raise ValueError("z and y must be matching non-empty vectors")
    if not np.all(np.isfinite(z)):
        raise ValueError("projected values must be finite")
    N = z.shape[0]
    order = np.argsort(z, kind="stable")
    zs, ys = z[order], y[order]
    err_plus = _cell_errors_plus(ys)
    valid = _valid_cells(zs)
    masked_plus = np.where(valid, err_plus, N + 1)
    masked_minus = np.where(valid, N - err_plus, N + 1)
    best_plus = int(masked_plus.min())
    best_minus = int(masked_minus.min())
    if best_plus <= best_minus:
        s, count = 1, best_plus
        j = int(np.argmin(masked_plus))
    else:
        s, count = -1, best_minus
        j = int(np.argmin(masked_minus))
    return _cell_threshold(zs, j), s, count


def fit(data: Dataset, k: int, n: int, seed: int) -> TarpModel:
    """Train n-TARP: expand once, try n seeded random directions, keep the best.

    Deterministic given (data, k, n, seed); the direction stream is the
    same one sample_direction would produce from the same generator.
    """
    if n < 1:
        raise ValueError(f"number of projections must be >= 1, got {n}")
    fmap = build_map(data.dim, k)
    Phi = expand_matrix(fmap, data.features)
    N = data.n_points
    y = data.labels

    rng = np.random.default_rng(seed)
    A = rng.standard_normal((n, fmap.output_dim))
    norms = np.linalg.norm(A, axis=1)
    for i in np.flatnonzero(norms == 0.0):
        A[i] = sample_direction(rng, fmap.output_dim)
        norms[i] = 1.0
    A /= norms[:, np.newaxis]

    Z = Phi @ A.T  # N x n projected values
    sort_idx = np.argsort(Z, axis=0, kind="stable")
    Zs = np.take_along_axis(Z, sort_idx, axis=0)
    Ys = y[sort_idx]

    pos_prefix = np.zeros((N + 1, n), dtype=np.int64)
    np.cumsum(Ys == 1, axis=0, out=pos_prefix[1:])
    neg_total = int(np.sum(y == -1))
    j = np.arange(N + 1)[:, np.newaxis]
    err_plus = 2 * pos_prefix - j + neg_total

    valid = np.ones((N + 1, n), dtype=bool)
    valid[1:N] = Zs[1:] > Zs[:-1]
    masked_plus = np.where(valid, err_plus, N + 1)
    masked_minus = np.where(valid, N - err_plus, N + 1)
    per_col = np.minimum(masked_plus.min(axis=0), masked_minus.min(axis=0))

    best = int(np.argmin(per_col))  # lowest index wins on ties
    tau, s, count = best_threshold(Z[:, best], y)

    stump = ProjectionStump(
        direction=A[best],
        threshold=tau,
        orientation=s,
        train_error=count / N,
    )
    return TarpModel(
        feature_map=fmap,
        stump=stump,
        n=n,
        seed=seed,
        per_projection_errors=per_col / N,
    )


def decision_values(model: TarpModel, X: np.ndarray) -> np.ndarray:
    """Projected values a . phi_k(x) minus the threshold, row-wise."""
    Phi = expand_matrix(model.feature_map, X)
    return Phi @ model.stump.direction - model.stump.threshold


def predict(model: TarpModel, x: np.ndarray) -> int:
    """Classify a single point; points exactly on the threshold go to +1*s."""
    z = float(expand(model.feature_map, x) @ model.stump.direction)
    side = 1 if z - model.stump.threshold >= 0.0 else -1
    return model.stump.orientation * side


def predict_many(model: TarpModel, X: np.ndarray) -> np.ndarray:
    v = decision_values(model, X)
    return model.stump.orientation * np.where(v >= 0.0, 1, -1)


def empirical_error(classifier, data: Dataset) -> float:
    """Exact misclassification fraction of a point-wise classifier callable."""
    wrong = sum(
        1 for x, label in zip(data.features, data.labels) if classifier(x) != label
    )
    return wrong / data.n_points


def model_error(model: TarpModel, data: Dataset) -> float:
    """Misclassification fraction of a fitted model, vectorized."""
    return float(np.mean(predict_many(model, data.features) != data.labels))


def save_model(model: TarpModel, path):
    """Write a model in the self-describing text format (see ntarp.cli docs)."""
    lines = [
        "ntarp-model 1",
        f"d {model.feature_map.d}",
        f"k {model.feature_map.k}",
        f"n {model.n}",
        f"seed {model.seed}",
        f"orientation {model.stump.orientation}",
        f"threshold {model.stump.threshold!r}",
        f"train_error {model.stump.train_error!r}",
        "direction " + " ".join(repr(float(v)) for v in model.stump.direction),
        "per_projection_errors "
        + " ".join(repr(float(v)) for v in model.per_projection_errors),
    ]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_model(path) -> TarpModel:
    """Read a model written by save_model."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh if line.strip()]
    if not lines or lines[0] != "ntarp-model 1":
        raise ValueError(f"{path}: not an ntarp-model v1 file")
    fields = {}
    for line in lines[1:]:
        name, _, value = line.partition(" ")
        fields[name] = value
    stump = ProjectionStump(
        direction=np.array([float(v) for v in fields["direction"].split()]),
        threshold=float(fields["threshold"]),
        orientation=int(fields["orientation"]),
        train_error=float(fields["train_error"]),
    )
    return TarpModel(
        feature_map=build_map(int(fields["d"]), int(fields["k"])),
        stump=stump,
        n=int(fields["n"]),
        seed=int(fields["seed"]),
        per_projection_errors=np.array(
            [float(v) for v in fields["per_projection_errors"].split()]
        ),
    )


def dichotomy_chain(direction: np.ndarray, data: Dataset, s: int) -> list[Dichotomy]:
    """Distinct dichotomies produced as the threshold sweeps -inf -> +inf.

    The direction lives in the same space as data.features (expand the
    dataset first for k > 1).  With distinct projected values the chain
    has N+1 elements and consecutive Hamming distance 1; tied values
    collapse sweep steps.
    """
    if s not in (-1, 1):
        raise ValueError("orientation must be -1 or +1")
    a = np.asarray(direction, dtype=float)
    z = data.features @ a
    zs = np.sort(z)
    boundaries = np.concatenate(([zs[0] - 1.0], (zs[:-1] + zs[1:]) / 2.0, [zs[-1] + 1.0]))
    chain = []
    prev = None
    for tau in boundaries:
        bits = tuple(int(s * (1 if v - tau >= 0.0 else -1)) for v in z)
        if bits != prev:
            chain.append(Dichotomy(bits))
            prev = bits
    return chain
