"""Immutable sampled-graph container with CSR adjacency.

Vertices are 0..n-1.  Adjacency is stored in compressed sparse row form
(indptr, indices) with each neighbor list sorted ascending; the structure is
symmetric, loop-free and duplicate-free by construction.  Positions may be
partial: a vertex whose last coordinate has not been revealed yet carries NaN
in that column.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["GirgGraph"]


@dataclass(frozen=True)
class GirgGraph:
    n: int
    weights: np.ndarray  # (n,) positive floats
    positions: np.ndarray  # (n, d); NaN marks an unrevealed coordinate
    indptr: np.ndarray  # (n+1,) int64
    indices: np.ndarray  # (2*edge_count,) int32, sorted within each row
    edge_count: int

    # ---- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n, weights, positions, eu, ev) -> "GirgGraph":
        """Build from an edge list given as endpoint arrays (any order).

        Self-loops are rejected; duplicate edges are rejected rather than
        coalesced, since the samplers emit each pair at most once.
        """
        eu = np.asarray(eu, dtype=np.int64)
        ev = np.asarray(ev, dtype=np.int64)
        if eu.shape != ev.shape:
            raise ValueError("endpoint arrays must have equal length")
        if eu.size and (eu.min() < 0 or ev.min() < 0 or max(eu.max(), ev.max()) >= n):
            raise ValueError("edge endpoint out of range")
        if np.any(eu == ev):
            raise ValueError("self-loops are not allowed")
        lo = np.minimum(eu, ev)
        hi = np.maximum(eu, ev)
        if lo.size:
            order = np.lexsort((hi, lo))
            lo, hi = lo[order], hi[order]
            dup = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
            if np.any(dup):
                raise ValueError("duplicate edges are not allowed")
        m = lo.size
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(
            n=int(n),
            weights=np.asarray(weights, dtype=np.float64),
            positions=np.asarray(positions, dtype=np.float64),
            indptr=indptr,
            indices=dst.astype(np.int32),
            edge_count=int(m),
        )

    def __post_init__(self):
        if self.weights.shape != (self.n,):
            raise ValueError("weights must have shape (n,)")
        if self.positions.ndim != 2 or self.positions.shape[0] != self.n:
            raise ValueError("positions must have shape (n, d)")
        if self.indptr.shape != (self.n + 1,):
            raise ValueError("indptr must have shape (n+1,)")
        if self.indices.size != 2 * self.edge_count:
            raise ValueError("indices length must equal twice the edge count")

    # ---- accessors ---------------------------------------------------------

    @property
    def dimension(self) -> int:
        return self.positions.shape[1]

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def edge_array(self) -> np.ndarray:
        """Edges as an (m, 2) array with u < v, sorted lexicographically."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        dst = self.indices.astype(np.int64)
        keep = src < dst
        return np.column_stack([src[keep], dst[keep]])

    def same_edges(self, other: "GirgGraph") -> bool:
        """Exact edge-set equality (ignores weights/positions)."""
        if self.n != other.n or self.edge_count != other.edge_count:
            return False
        return bool(
            np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def validate(self) -> None:
        """Check the structural invariants; raises on violation."""
        deg = self.degrees()
        if deg.sum() != 2 * self.edge_count:
            raise AssertionError("edge_count does not match adjacency size")
        for v in range(self.n):
            nbrs = self.neighbors(v)
            if nbrs.size == 0:
                continue
            if np.any(np.diff(nbrs) <= 0):
                raise AssertionError(f"neighbor list of {v} not strictly sorted")
            if np.any(nbrs == v):
                raise AssertionError(f"self-loop at {v}")
        # symmetry: edge_array covers each edge once; rebuild must agree
        ea = self.edge_array()
        rebuilt = GirgGraph.from_edges(self.n, self.weights, self.positions, ea[:, 0], ea[:, 1])
        if not self.same_edges(rebuilt):
            raise AssertionError("adjacency is not symmetric")
