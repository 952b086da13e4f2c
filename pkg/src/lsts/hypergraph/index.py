"""Vertex and pair incidence index over a triple system"""

import numpy as np


class IncidenceIndex:
    """
    CSR-style lookups from vertices and pairs to the edges containing them

    Edge ids are positions in the system's canonical (lexicographic) edge
    order; every lookup returns ids in increasing order. Pairs are encoded as
    the integer key u * n + v with u < v.
    """

    def __init__(self, n: int, edge_array: np.ndarray):
        self.n = n
        m = len(edge_array)
        owners = np.repeat(np.arange(m, dtype=np.int64), 3)

        flat = edge_array.reshape(-1)
        order = np.argsort(flat, kind="stable")
        self._vertex_edges = owners[order]
        self._vertex_ptr = np.zeros(n + 1, dtype=np.int64)
        if m:
            np.cumsum(np.bincount(flat, minlength=n), out=self._vertex_ptr[1:])

        u = edge_array[:, [0, 0, 1]].reshape(-1)
        v = edge_array[:, [1, 2, 2]].reshape(-1)
        keys = u * n + v
        order = np.argsort(keys, kind="stable")
        self._pair_keys = keys[order]
        self._pair_edges = owners[order]
        self.pair_keys, self.pair_counts = np.unique(self._pair_keys, return_counts=True)

    def pair_key(self, x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        return x * self.n + y

    def decode(self, key: int):
        return divmod(int(key), self.n)

    def edges_with_vertex(self, v: int) -> np.ndarray:
        return self._vertex_edges[self._vertex_ptr[v]:self._vertex_ptr[v + 1]]

    def edges_with_pair(self, x: int, y: int) -> np.ndarray:
        key = self.pair_key(x, y)
        lo = np.searchsorted(self._pair_keys, key, side="left")
        hi = np.searchsorted(self._pair_keys, key, side="right")
        return self._pair_edges[lo:hi]

    def codegree(self, x: int, y: int) -> int:
        key = self.pair_key(x, y)
        pos = np.searchsorted(self.pair_keys, key)
        if pos < len(self.pair_keys) and self.pair_keys[pos] == key:
            return int(self.pair_counts[pos])
        return 0

    def codegrees(self, keys: np.ndarray) -> np.ndarray:
        """Vectorized codegree lookup for an array of pair keys"""
        keys = np.asarray(keys, dtype=np.int64)
        if len(self.pair_keys) == 0:
            return np.zeros(len(keys), dtype=np.int64)
        pos = np.minimum(np.searchsorted(self.pair_keys, keys), len(self.pair_keys) - 1)
        return np.where(self.pair_keys[pos] == keys, self.pair_counts[pos], 0)

    def pairs_with_codegree(self, c: int):
        """
        Pairs of codegree exactly c with the edges through them

        Returns (keys, edges) where edges[i] holds the c edge ids through
        pair keys[i], ascending.
        """
        keys = self.pair_keys[self.pair_counts == c]
        lo = np.searchsorted(self._pair_keys, keys, side="left")
        edges = self._pair_edges[lo[:, None] + np.arange(c)]
        return keys, edges

    def degree(self, v: int) -> int:
        return int(self._vertex_ptr[v + 1] - self._vertex_ptr[v])

    @property
    def max_codegree(self) -> int:
        return int(self.pair_counts.max()) if len(self.pair_counts) else 0
