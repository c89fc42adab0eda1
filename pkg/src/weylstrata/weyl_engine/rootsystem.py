"""Root systems in the basis of simple roots (Bourbaki numbering)."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

KEY_BASE = 32
KEY_OFFSET = 16

EXPECTED_ROOTS = {
    ("E", 6): 72, ("E", 7): 126, ("E", 8): 240, ("F", 4): 48, ("G", 2): 12,
}


def dynkin_data(kind: str, n: int):
    """Squared root lengths and edges of the Dynkin diagram."""
    if kind == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        return [2] * n, [(i, i + 1) for i in range(n - 1)]
    if kind == "B":
        if n < 2:
            raise ValueError("B_n needs n >= 2")
        return [4] * (n - 1) + [2], [(i, i + 1) for i in range(n - 1)]
    if kind == "C":
        if n < 2:
            raise ValueError("C_n needs n >= 2")
        return [2] * (n - 1) + [4], [(i, i + 1) for i in range(n - 1)]
    if kind == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        return [2] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in 6, 7, 8")
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return [2] * n, edges
    if kind == "F":
        if n != 4:
            raise ValueError("F_n needs n = 4")
        return [4, 4, 2, 2], [(0, 1), (1, 2), (2, 3)]
    if kind == "G":
        if n != 2:
            raise ValueError("G_n needs n = 2")
        return [2, 6], [(0, 1)]
    raise ValueError(f"unsupported type {kind!r}")


def gram_from_dynkin(lengths, edges) -> np.ndarray:
    n = len(lengths)
    g = np.zeros((n, n), dtype=np.int64)
    for i, d in enumerate(lengths):
        g[i, i] = d
    for i, j in edges:
        g[i, j] = g[j, i] = -max(lengths[i], lengths[j]) // 2
    return g


def cartan_from_gram(g: np.ndarray) -> np.ndarray:
    """a_ij = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)."""
    n = g.shape[0]
    a = np.zeros_like(g)
    for i in range(n):
        for j in range(n):
            a[i, j] = 2 * g[i, j] // g[i, i]
    return a


def classical_simple_roots_e(kind: str, n: int) -> np.ndarray:
    """Columns are the simple roots in the standard e-basis."""
    if kind == "A":
        e = np.zeros((n + 1, n), dtype=np.int64)
        for i in range(n):
            e[i, i], e[i + 1, i] = 1, -1
        return e
    e = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        e[i, i], e[i + 1, i] = 1, -1
    if kind == "B":
        e[n - 1, n - 1] = 1
    elif kind == "C":
        e[n - 1, n - 1] = 2
    elif kind == "D":
        e[n - 2, n - 1], e[n - 1, n - 1] = 1, 1
    else:
        raise ValueError(kind)
    return e


class RootSystem:
    def __init__(self, kind: str, n: int):
        self.kind = kind
        self.rank = n
        self.lengths, self.edges = dynkin_data(kind, n)
        self.gram = gram_from_dynkin(self.lengths, self.edges)
        self.cartan = cartan_from_gram(self.gram)
        self.simple_reflections = [self._simple_reflection(i) for i in range(n)]
        self.roots = self._generate_roots()
        self.nroots = len(self.roots)
        self.root_sq = np.einsum("ij,jk,ik->i", self.roots, self.gram, self.roots)
        self.positive = np.all(self.roots >= 0, axis=1)
        self.long_sq = int(max(self.lengths))
        self._weights = KEY_BASE ** np.arange(n, dtype=np.int64)
        keys = self.keys(self.roots.T)
        self._order = np.argsort(keys)
        self._sorted_keys = keys[self._order]
        # pairing[i, j] = <beta_i^vee, beta_j>
        self.pairing = (2 * (self.roots @ self.gram @ self.roots.T)) // self.root_sq[:, None]
        self.e_roots = None
        if kind in "ABCD":
            self.e_roots = self.roots @ classical_simple_roots_e(kind, n).T
        expected = EXPECTED_ROOTS.get((kind, n))
        if expected is not None and expected != self.nroots:
            raise AssertionError(f"{kind}{n}: {self.nroots} roots, expected {expected}")

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    def _simple_reflection(self, i: int) -> np.ndarray:
        m = np.eye(self.rank, dtype=np.int64)
        m[i, :] -= self.cartan[i, :]
        return m

    def _generate_roots(self) -> np.ndarray:
        seen = {}
        frontier = [tuple(int(x) for x in row) for row in np.eye(self.rank, dtype=np.int64)]
        for v in frontier:
            seen[v] = None
        while frontier:
            new = []
            for v in frontier:
                vec = np.array(v, dtype=np.int64)
                for s in self.simple_reflections:
                    w = tuple(int(x) for x in s @ vec)
                    if w not in seen:
                        seen[w] = None
                        new.append(w)
            frontier = new
        roots = sorted(seen, key=lambda v: (sum(v) < 0, abs(sum(v)), v))
        return np.array(roots, dtype=np.int64)

    def keys(self, cols: np.ndarray) -> np.ndarray:
        """Integer keys of vectors given as columns (rank x k)."""
        return (cols.T + KEY_OFFSET) @ self._weights

    def index_of(self, cols: np.ndarray) -> np.ndarray:
        keys = self.keys(cols)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, len(self._sorted_keys) - 1)
        if not np.all(self._sorted_keys[pos] == keys):
            raise ValueError("vector is not a root")
        return self._order[pos]

    def root_permutation(self, m: np.ndarray) -> np.ndarray:
        return self.index_of(m @ self.roots.T)

    def reflection(self, idx: int) -> np.ndarray:
        """Matrix of the reflection in root number idx."""
        beta = self.roots[idx]
        coroot_row = (2 * (beta @ self.gram)) // self.root_sq[idx]
        return np.eye(self.rank, dtype=np.int64) - np.outer(beta, coroot_row)

    def simple_root_index(self, i: int) -> int:
        v = np.zeros((self.rank, 1), dtype=np.int64)
        v[i, 0] = 1
        return int(self.index_of(v)[0])

    def is_long(self, idx: int) -> bool:
        return int(self.root_sq[idx]) == self.long_sq

    def length(self, m: np.ndarray) -> int:
        """Coxeter length: positive roots sent to negative roots."""
        images = m @ self.roots[self.positive].T
        return int(np.sum(np.any(images < 0, axis=0)))

    def word_to_matrix(self, word) -> np.ndarray:
        m = np.eye(self.rank, dtype=np.int64)
        for i in word:
            m = m @ self.simple_reflections[i]
        return m

    def reduced_word(self, m: np.ndarray) -> tuple[int, ...]:
        """Right-descent peeling: returns (i1, ..., ik) with m = s_i1 ... s_ik."""
        m = np.array(m, dtype=np.int64)
        rec = []
        while True:
            for i in range(self.rank):
                if np.any(m[:, i] < 0):
                    m = m @ self.simple_reflections[i]
                    rec.append(i)
                    break
            else:
                break
        if not np.array_equal(m, np.eye(self.rank, dtype=np.int64)):
            raise AssertionError("descent did not reach the identity")
        return tuple(reversed(rec))

    def highest_root_index(self) -> int:
        return int(np.argmax(self.roots.sum(axis=1)))


@lru_cache(maxsize=None)
def root_system(kind: str, n: int) -> RootSystem:
    return RootSystem(kind, n)
