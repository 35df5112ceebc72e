"""Edge labelings of the torus grid, stored as a pair of n x m matrices.

Entry (i,j) of the horizontal matrix is the label of H(i,j); likewise for
the vertical matrix and V(i,j).  A labeling is total by construction: all
q = 2nm entries are positive integers.  Whether it is supermagic
(a bijection onto {1..q} with uniform vertex weight) is decided by the
verifier, never assumed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from .grid import EdgeRef, GridDims, all_edges


class DomainMismatch(ValueError):
    """Labeling domain differs from the grid's edge set."""


@dataclass(frozen=True)
class Labeling:
    """Total assignment EdgeRef -> positive integer over C_n x C_m."""

    dims: GridDims
    h: np.ndarray
    v: np.ndarray

    def __post_init__(self) -> None:
        shape = (self.dims.n, self.dims.m)
        if self.h.shape != shape or self.v.shape != shape:
            raise DomainMismatch(
                f"matrices must be {shape}, got {self.h.shape} and {self.v.shape}"
            )
        if (self.h < 1).any() or (self.v < 1).any():
            raise DomainMismatch("labels must be positive integers")

    def label(self, e: EdgeRef) -> int:
        matrix = self.h if e.orient == "H" else self.v
        return int(matrix[e.i - 1, e.j - 1])

    __getitem__ = label

    def items(self) -> Iterator[tuple[EdgeRef, int]]:
        """All (edge, label) pairs, H block first, row-major."""
        for e in all_edges(self.dims):
            yield e, self.label(e)

    def labels(self) -> np.ndarray:
        """All q labels as a flat array (H block then V block, row-major)."""
        return np.concatenate([self.h.ravel(), self.v.ravel()])

    def transpose(self) -> "Labeling":
        """The same labeling on C_m x C_n: rows and columns swap roles,
        so horizontal and vertical matrices exchange (transposed)."""
        from .grid import dims as make_dims

        return Labeling(make_dims(self.dims.m, self.dims.n),
                        self.v.T.copy(), self.h.T.copy())

    def with_swapped(self, e1: EdgeRef, e2: EdgeRef) -> "Labeling":
        """Copy with the labels of two edges exchanged (for perturbation tests)."""
        h, v = self.h.copy(), self.v.copy()

        def put(e: EdgeRef, value: int) -> None:
            (h if e.orient == "H" else v)[e.i - 1, e.j - 1] = value

        l1, l2 = self.label(e1), self.label(e2)
        put(e1, l2)
        put(e2, l1)
        return Labeling(self.dims, h, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return (self.dims == other.dims
                and np.array_equal(self.h, other.h)
                and np.array_equal(self.v, other.v))

    @classmethod
    def from_matrices(cls, dims: GridDims, horizontal, vertical) -> "Labeling":
        h = np.asarray(horizontal, dtype=np.int64)
        v = np.asarray(vertical, dtype=np.int64)
        return cls(dims, h, v)

    @classmethod
    def from_edge_map(cls, dims: GridDims, mapping: Mapping[EdgeRef, int]) -> "Labeling":
        """Build from an explicit edge -> label map; the domain must be exactly
        the q edges of the grid."""
        edges = set(all_edges(dims))
        given = set(mapping)
        if given != edges:
            missing = sorted(edges - given, key=EdgeRef.sort_key)
            extra = sorted(given - edges, key=EdgeRef.sort_key)
            raise DomainMismatch(
                f"domain mismatch: {len(missing)} edges unlabeled "
                f"(first: {missing[:3]}), {len(extra)} labels off-grid (first: {extra[:3]})"
            )
        h = np.zeros((dims.n, dims.m), dtype=np.int64)
        v = np.zeros((dims.n, dims.m), dtype=np.int64)
        for e, value in mapping.items():
            (h if e.orient == "H" else v)[e.i - 1, e.j - 1] = value
        return cls(dims, h, v)
