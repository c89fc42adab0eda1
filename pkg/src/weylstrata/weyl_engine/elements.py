"""Element-level invariants: fixed spaces, orders, fingerprints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .linalg import charpoly, cyclotomic_factors, rank


def nullspace(m) -> list[list[int]]:
    """Integer basis of the rational kernel of an integer matrix."""
    rows = [[Fraction(int(x)) for x in row] for row in np.asarray(m)]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        den = lcm(*(x.denominator for x in v))
        basis.append([int(x * den) for x in v])
    return basis


def fixed_space_dim(m) -> int:
    m = np.asarray(m, dtype=np.int64)
    return m.shape[0] - rank(m - np.eye(m.shape[0], dtype=np.int64))


def element_order(m, limit: int = 200) -> int:
    m = np.asarray(m, dtype=np.int64)
    ident = np.eye(m.shape[0], dtype=np.int64)
    p = m.copy()
    for k in range(1, limit + 1):
        if np.array_equal(p, ident):
            return k
        p = p @ m
    raise ValueError("element order exceeds limit")


def cycle_type(perm) -> tuple[int, ...]:
    perm = list(perm)
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        k, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = int(perm[j])
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))


def length_cycle_types(rs, perm) -> tuple[tuple[int, ...], ...]:
    """Cycle types of the permutation restricted to each root length, long first."""
    out = []
    for sq in sorted(set(int(x) for x in rs.root_sq), reverse=True):
        idx = np.nonzero(rs.root_sq == sq)[0]
        pos = {int(j): k for k, j in enumerate(idx)}
        out.append(cycle_type([pos[int(perm[j])] for j in idx]))
    return tuple(out)


@dataclass(frozen=True)
class Fingerprint:
    charpoly: tuple[tuple[int, int], ...]
    root_cycles: tuple[tuple[int, ...], ...]
    order: int
    charpoly2: tuple[tuple[int, int], ...]
    charpoly3: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "charpoly": [list(x) for x in self.charpoly],
            "root_cycles": [list(c) for c in self.root_cycles],
            "order": self.order,
            "charpoly2": [list(x) for x in self.charpoly2],
            "charpoly3": [list(x) for x in self.charpoly3],
        }


def cyclo(m) -> tuple[tuple[int, int], ...]:
    return cyclotomic_factors(charpoly(m))


def fingerprint(rs, m) -> Fingerprint:
    m = np.asarray(m, dtype=np.int64)
    return Fingerprint(
        charpoly=cyclo(m),
        root_cycles=length_cycle_types(rs, rs.root_permutation(m)),
        order=element_order(m),
        charpoly2=cyclo(m @ m),
        charpoly3=cyclo(m @ m @ m),
    )


class WeylElement:
    """An element of W given by its matrix on the root lattice (root coordinates).

    The root permutation is computed lazily and checked against the matrix.
    """

    def __init__(self, rs, matrix, word=None):
        self.rs = rs
        self.matrix = np.asarray(matrix, dtype=np.int64)
        self.word = tuple(word) if word is not None else None
        self._perm = None

    @classmethod
    def from_word(cls, rs, word) -> "WeylElement":
        return cls(rs, rs.word_to_matrix(word), word)

    @property
    def permutation(self) -> np.ndarray:
        if self._perm is None:
            self._perm = self.rs.root_permutation(self.matrix)
            for i in range(self.rs.rank):
                j = self.rs.simple_root_index(i)
                if not np.array_equal(self.rs.roots[self._perm[j]], self.matrix[:, i]):
                    raise AssertionError("permutation and matrix disagree")
        return self._perm

    def reduced_word(self) -> tuple[int, ...]:
        if self.word is None or len(self.word) != self.length():
            self.word = self.rs.reduced_word(self.matrix)
        return self.word

    def length(self) -> int:
        return self.rs.length(self.matrix)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.rs, self.matrix @ other.matrix)

    def inverse(self) -> "WeylElement":
        w = self.rs.reduced_word(self.matrix)
        return WeylElement.from_word(self.rs, tuple(reversed(w)))

    def fixed_space_dim(self) -> int:
        return fixed_space_dim(self.matrix)

    def fingerprint(self) -> Fingerprint:
        return fingerprint(self.rs, self.matrix)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.matrix.tobytes())
