"""Estimator-style front end over the enumeration pipeline."""

from __future__ import annotations

import numbers

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .bulk import DEFAULT_MAX_PRODUCT_TUPLES, enumerate_maximal_cliques
from .core import TemporalNetwork
from .sweep import summarize


def validate_link_array(X) -> TemporalNetwork:
    """Coerce an (m, 3) array of (u, v, t) rows into a temporal network.

    Rows must have integer-valued fields and distinct endpoints; vertex
    ids become string labels, matching the file based path.
    """
    if isinstance(X, TemporalNetwork):
        return X
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError(
            f"expected an (m, 3) array of (u, v, t) rows, got shape {arr.shape}"
        )
    if arr.shape[0] == 0:
        raise ValueError("the link array is empty")
    if not np.issubdtype(arr.dtype, np.number):
        raise ValueError(f"link fields must be numeric, got dtype {arr.dtype}")
    if not np.all(arr == np.floor(arr)):
        raise ValueError("link fields must be integer valued")
    arr = arr.astype(np.int64)
    if np.any(arr[:, 0] == arr[:, 1]):
        row = int(np.flatnonzero(arr[:, 0] == arr[:, 1])[0])
        raise ValueError(f"self loop in row {row}")
    return TemporalNetwork.from_triples(
        (int(u), int(v), int(t)) for u, v, t in arr
    )


class DeltaGammaCliqueEnumerator(BaseEstimator):
    """Enumerate maximal (delta, gamma)-cliques of a link stream.

    fit accepts an (m, 3) integer array of (u, v, t) rows or a prebuilt
    TemporalNetwork and exposes the result through fitted attributes:
    ``cliques_`` (canonically ordered), ``n_cliques_``,
    ``max_cardinality_`` and ``max_duration_``.
    """

    def __init__(
        self,
        delta: int = 1,
        gamma: int = 1,
        clamp: bool = False,
        threads: int = 1,
        max_product_tuples: int = DEFAULT_MAX_PRODUCT_TUPLES,
    ):
        self.delta = delta
        self.gamma = gamma
        self.clamp = clamp
        self.threads = threads
        self.max_product_tuples = max_product_tuples

    def _validate_params(self) -> None:
        for name in ("delta", "gamma", "threads", "max_product_tuples"):
            value = getattr(self, name)
            if not isinstance(value, numbers.Integral):
                raise ValueError(f"{name} must be an integer, got {value!r}")
        if self.delta < 0:
            raise ValueError(f"delta must be non-negative, got {self.delta}")
        if self.gamma < 1:
            raise ValueError(f"gamma must be at least 1, got {self.gamma}")
        if self.threads < 1:
            raise ValueError(f"threads must be at least 1, got {self.threads}")

    def fit(self, X, y=None):
        self._validate_params()
        network = validate_link_array(X)
        self.network_ = network
        self.cliques_ = enumerate_maximal_cliques(
            network,
            int(self.delta),
            int(self.gamma),
            clamp=self.clamp,
            threads=int(self.threads),
            max_product_tuples=int(self.max_product_tuples),
        )
        count, cardinality, duration = summarize(self.cliques_)
        self.n_cliques_ = count
        self.max_cardinality_ = cardinality
        self.max_duration_ = duration
        return self

    def labelled_cliques(self) -> list[tuple[list[str], int, int]]:
        """Cliques as (member labels, start, end), in canonical order."""
        check_is_fitted(self, "cliques_")
        return [
            (self.network_.member_labels(c.members), c.interval.start, c.interval.end)
            for c in self.cliques_
        ]
