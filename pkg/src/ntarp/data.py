"""Optdigits ingestion, binary relabeling, splitting, and dataset CSV I/O.

The optdigits input format is the UCI .tra/.tes layout: comma-separated
lines of 64 integer pixel values in [0, 16] followed by the digit label
in [0, 9].  Dataset CSV export uses a `f0,...,f{d-1},label` header with
one decimal row per point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classifier import Dataset

TASKS = ("even_odd", "small_large", "zero_one")


class DataFormatError(ValueError):
    """Malformed or out-of-range input data file."""


@dataclass(frozen=True)
class LabeledDigits:
    """8x8 digit images as 64 integer features plus the digit in [0, 9]."""

    features: np.ndarray
    digits: np.ndarray

    def __post_init__(self):
        X = np.asarray(self.features, dtype=np.int64)
        y = np.asarray(self.digits, dtype=np.int64)
        if X.ndim != 2 or X.shape[0] < 1 or X.shape[1] != 64:
            raise ValueError("features must be a non-empty M x 64 matrix")
        if y.shape != (X.shape[0],):
            raise ValueError("digits must be a length-M vector")
        if X.min() < 0 or X.max() > 16:
            raise ValueError("pixel values must lie in [0, 16]")
        if y.min() < 0 or y.max() > 9:
            raise ValueError("digit labels must lie in [0, 9]")
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "digits", y)

    @property
    def n_points(self) -> int:
        return self.features.shape[0]


def load_optdigits(path) -> LabeledDigits:
    """Parse one optdigits file, validating field count and value ranges."""
    rows, digits = [], []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            fields = line.split(",")
            if len(fields) != 65:
                raise DataFormatError(
                    f"{path}:{lineno}: expected 65 comma-separated fields, "
                    f"got {len(fields)}"
                )
            try:
                values = [int(f) for f in fields]
            except ValueError as exc:
                raise DataFormatError(f"{path}:{lineno}: non-integer field ({exc})")
            pixels, digit = values[:64], values[64]
            if any(v < 0 or v > 16 for v in pixels):
                raise DataFormatError(f"{path}:{lineno}: pixel value outside [0, 16]")
            if digit < 0 or digit > 9:
                raise DataFormatError(f"{path}:{lineno}: digit label outside [0, 9]")
            rows.append(pixels)
            digits.append(digit)
    if not rows:
        raise DataFormatError(f"{path}: no data rows")
    return LabeledDigits(features=np.array(rows), digits=np.array(digits))


def concat_digits(*parts: LabeledDigits) -> LabeledDigits:
    """Concatenate several loaded files (e.g. the UCI .tra and .tes halves)."""
    if not parts:
        raise ValueError("need at least one LabeledDigits")
    return LabeledDigits(
        features=np.vstack([p.features for p in parts]),
        digits=np.concatenate([p.digits for p in parts]),
    )


def relabel(digits: LabeledDigits, task: str) -> Dataset:
    """Turn the 10-class digits into one of the three binary tasks."""
    if task == "even_odd":
        keep = np.ones(digits.n_points, dtype=bool)
        labels = np.where(digits.digits % 2 == 1, 1, -1)
    elif task == "small_large":
        keep = np.ones(digits.n_points, dtype=bool)
        labels = np.where(digits.digits <= 4, 1, -1)
    elif task == "zero_one":
        keep = np.isin(digits.digits, (0, 1))
        labels = np.where(digits.digits == 0, 1, -1)
    else:
        raise ValueError(f"unknown task {task!r}; expected one of {TASKS}")
    if not keep.any():
        raise ValueError(f"task {task!r} leaves no data points")
    return Dataset(
        features=digits.features[keep].astype(float), labels=labels[keep]
    )


def split(data: Dataset, n_train: int, seed) -> tuple[Dataset, Dataset]:
    """Uniform random partition into n_train training and N - n_train test points."""
    N = data.n_points
    if not 1 <= n_train < N:
        raise ValueError(f"n_train must lie in [1, {N - 1}], got {n_train}")
    perm = np.random.default_rng(seed).permutation(N)
    tr, te = perm[:n_train], perm[n_train:]
    return (
        Dataset(features=data.features[tr], labels=data.labels[tr]),
        Dataset(features=data.features[te], labels=data.labels[te]),
    )


def export_dataset(data: Dataset, path):
    """Write a dataset as `f0,...,f{d-1},label` CSV with full-precision decimals."""
    d = data.dim
    header = ",".join([f"f{i}" for i in range(d)] + ["label"])
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header + "\n")
        for x, label in zip(data.features, data.labels):
            fh.write(",".join(repr(float(v)) for v in x) + f",{int(label)}\n")


def load_dataset(path) -> Dataset:
    """Read a dataset written by export_dataset."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        names = header.split(",")
        if len(names) < 2 or names[-1] != "label":
            raise DataFormatError(f"{path}:1: expected a f0,...,label header")
        d = len(names) - 1
        features, labels = [], []
        for lineno, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            fields = line.split(",")
            if len(fields) != d + 1:
                raise DataFormatError(
                    f"{path}:{lineno}: expected {d + 1} fields, got {len(fields)}"
                )
            try:
                features.append([float(f) for f in fields[:d]])
                labels.append(int(fields[d]))
            except ValueError as exc:
                raise DataFormatError(f"{path}:{lineno}: bad numeric field ({exc})")
    if not features:
        raise DataFormatError(f"{path}: no data rows")
    return Dataset(features=np.array(features), labels=np.array(labels))
