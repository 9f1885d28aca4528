"""Polynomial feature expansion.

Maps a vector x in R^d to the vector of all monomials of total degree
at most k, ordered graded-lexicographically (degree ascending, and
within a degree x1-major, e.g. for d=2, k=2: 1, x1, x2, x1^2, x1*x2,
x2^2).  The expanded dimension is C(d+k, k).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

# C(d+k, k) beyond this is not exactly representable as a float and the
# resulting arrays would not be allocatable anyway.
_MAX_SAFE_DIM = 2**53


def extended_dim(d: int, k: int) -> int:
    """Dimension C(d+k, k) of the degree-<=k monomial basis on R^d."""
    if d < 1:
        raise ValueError(f"input dimension must be >= 1, got {d}")
    if k < 0:
        raise ValueError(f"expansion order must be >= 0, got {k}")
    dim = math.comb(d + k, k)
    if dim > _MAX_SAFE_DIM:
        raise OverflowError(
            f"C({d + k}, {k}) = {dim} exceeds the safe integer range"
        )
    return dim


def _exponent_table(d: int, k: int) -> np.ndarray:
    rows = []
    for degree in range(k + 1):
        for combo in itertools.combinations_with_replacement(range(d), degree):
            e = [0] * d
            for i in combo:
                e[i] += 1
            rows.append(e)
    return np.array(rows, dtype=np.int64).reshape(len(rows), d)


@dataclass(frozen=True)
class PolyFeatureMap:
    """Exponent table defining the expansion x -> (monomials of degree <= k)."""

    d: int
    k: int
    exponents: np.ndarray = field(repr=False)

    def __post_init__(self):
        n_terms, d = self.exponents.shape
        if d != self.d or n_terms != extended_dim(self.d, self.k):
            raise ValueError("exponent table inconsistent with (d, k)")

    @property
    def output_dim(self) -> int:
        return self.exponents.shape[0]


def build_map(d: int, k: int) -> PolyFeatureMap:
    """Build the degree-k polynomial feature map on R^d."""
    extended_dim(d, k)  # validates d, k and the overflow policy
    return PolyFeatureMap(d=d, k=k, exponents=_exponent_table(d, k))


def expand(fmap: PolyFeatureMap, x: np.ndarray) -> np.ndarray:
    """Evaluate every monomial of the map at a single point x."""
    x = np.asarray(x, dtype=float)
    if x.shape != (fmap.d,):
        raise ValueError(f"expected a length-{fmap.d} vector, got shape {x.shape}")
    return np.prod(x[np.newaxis, :] ** fmap.exponents, axis=1)


def expand_matrix(fmap: PolyFeatureMap, X: np.ndarray) -> np.ndarray:
    """Row-wise expansion of an N x d matrix to N x C(d+k,k)."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] != fmap.d:
        raise ValueError(f"expected an (N, {fmap.d}) matrix, got shape {X.shape}")
    # N x d~ x d broadcast; d~ is a few hundred at most in our experiments.
    return np.prod(X[:, np.newaxis, :] ** fmap.exponents[np.newaxis, :, :], axis=2)
