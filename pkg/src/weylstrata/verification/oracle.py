"""Brute-force group models for cross-checking.

Types B and D are realized as signed permutations, G2 and F4 (and E6) by
closing the simple reflection matrices under multiplication.  Classes are
found as conjugation orbits.  Nothing here imports the class-label modules.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np

from ..weyl_engine.rootsystem import root_system

SIZE_LIMIT = 10**7


class OracleSizeError(ValueError):
    pass


# ---------------------------------------------------------------- signed permutations
# An element is a tuple img with img[i] = +-(j+1) meaning e_i -> +-e_j.


def sp_compose(a, b):
    """a after b."""
    out = []
    for x in b:
        y = a[abs(x) - 1]
        out.append(y if x > 0 else -y)
    return tuple(out)


def sp_inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[abs(x) - 1] = (i + 1) if x > 0 else -(i + 1)
    return tuple(out)


def sp_generators(kind: str, n: int):
    """Simple reflections: transpositions (i, i+1), then the last node."""
    gens = []
    for i in range(n - 1):
        g = list(range(1, n + 1))
        g[i], g[i + 1] = g[i + 1], g[i]
        gens.append(tuple(g))
    g = list(range(1, n + 1))
    if kind in "BC":
        g[n - 1] = -n
    else:
        g[n - 2], g[n - 1] = -n, -(n - 1)
    gens.append(tuple(g))
    return gens


def sp_matrix(a) -> np.ndarray:
    n = len(a)
    m = np.zeros((n, n), dtype=np.int64)
    for i, x in enumerate(a):
        m[abs(x) - 1, i] = 1 if x > 0 else -1
    return m


def signed_cycle_type(a) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(negative cycle lengths, positive cycle lengths), both decreasing."""
    seen = set()
    neg, pos = [], []
    for start in range(len(a)):
        if start in seen:
            continue
        length, sign, cur = 0, 1, start
        while cur not in seen:
            seen.add(cur)
            x = a[cur]
            sign *= 1 if x > 0 else -1
            cur = abs(x) - 1
            length += 1
        (neg if sign < 0 else pos).append(length)
    return tuple(sorted(neg, reverse=True)), tuple(sorted(pos, reverse=True))


def fixed_dim(m: np.ndarray) -> int:
    n = m.shape[0]
    return n - int(np.linalg.matrix_rank((m - np.eye(n, dtype=np.int64)).astype(float)))


@dataclass
class OracleClass:
    rep: object
    size: int
    m: int
    members: frozenset
    cycle_type: tuple | None = None


@dataclass
class OracleGroup:
    name: str
    order: int
    classes: list[OracleClass]
    elements: list
    generators: list

    def class_index(self, x) -> int:
        for i, c in enumerate(self.classes):
            if x in c.members:
                return i
        raise KeyError(x)


def _orbits(elements, conj):
    left = set(elements)
    out = []
    for x in elements:
        if x not in left:
            continue
        orbit = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for z in conj(y):
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        left -= orbit
        out.append(orbit)
    return out


def _signed_group(kind: str, n: int) -> OracleGroup:
    order = 2**n * int(np.prod(range(1, n + 1)))
    if kind == "D":
        order //= 2
    if order > SIZE_LIMIT:
        raise OracleSizeError(f"{kind}{n}: order {order} exceeds {SIZE_LIMIT}")
    elements = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if kind == "D" and signs.count(-1) % 2:
                continue
            elements.append(tuple(s * x for s, x in zip(signs, perm)))
    gens = sp_generators(kind, n)

    def conj(y):
        return [sp_compose(sp_compose(g, y), g) for g in gens]

    classes = []
    for orbit in _orbits(elements, conj):
        rep = min(orbit)
        classes.append(
            OracleClass(rep, len(orbit), fixed_dim(sp_matrix(rep)), frozenset(orbit), signed_cycle_type(rep))
        )
    return OracleGroup(f"{kind}{n}", order, classes, elements, gens)


def _matrix_group(kind: str, n: int) -> OracleGroup:
    rs = root_system(kind, n)
    gens = [g.astype(np.int64) for g in rs.simple_reflections]
    ident = np.eye(n, dtype=np.int64)
    seen = {ident.tobytes(): ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x @ g
            k = y.tobytes()
            if k not in seen:
                seen[k] = y
                queue.append(y)
                if len(seen) > SIZE_LIMIT:
                    raise OracleSizeError(f"{kind}{n}: order exceeds {SIZE_LIMIT}")
    keys = list(seen)

    def conj(k):
        x = seen[k]
        return [(g @ x @ g).tobytes() for g in gens]

    classes = []
    for orbit in _orbits(keys, conj):
        rep = min(orbit)
        classes.append(OracleClass(rep, len(orbit), fixed_dim(seen[rep]), frozenset(orbit)))
    group = OracleGroup(f"{kind}{n}", len(seen), classes, keys, gens)
    group.matrices = seen
    return group


def oracle_group(kind: str, n: int) -> OracleGroup:
    """Full class enumeration by brute force."""
    if kind in "BCD":
        if kind == "D" and n < 2:
            raise ValueError("type D needs rank >= 2")
        return _signed_group("B" if kind == "C" else kind, n)
    if (kind, n) in {("G", 2), ("F", 4), ("E", 6)}:
        return _matrix_group(kind, n)
    raise OracleSizeError(f"no oracle model for {kind}{n}")


# ---------------------------------------------------------------- explicit elements


def positive_cycle(coords) -> dict[int, int]:
    """Cycle e_c0 -> e_c1 -> ... -> e_c0 on the given coordinates."""
    return {c: coords[(i + 1) % len(coords)] for i, c in enumerate(coords)}


def element_from_cycles(n: int, cycles) -> tuple[int, ...]:
    """cycles: list of (coords, negative) placed as given."""
    img = [0] * n
    for coords, negative in cycles:
        for i, c in enumerate(coords):
            nxt = coords[(i + 1) % len(coords)]
            sign = -1 if (negative and i == len(coords) - 1) else 1
            img[c] = sign * (nxt + 1)
    for i in range(n):
        if img[i] == 0:
            img[i] = i + 1
    return tuple(img)


def flip_last_sign(a) -> tuple[int, ...]:
    """Conjugate by the sign change of the last coordinate."""
    n = len(a)
    f = tuple(list(range(1, n)) + [-n])
    return sp_compose(sp_compose(f, a), f)
