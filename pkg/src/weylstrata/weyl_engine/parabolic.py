"""Standard parabolic subgroups: component types, longest elements, and the
representative set of subsets J up to conjugacy of W_J."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np


@dataclass(frozen=True)
class FactorType:
    """Irreducible component of a parabolic subsystem.

    nodes lists the ambient simple-root indices in the standard (Bourbaki)
    order of the component type; tilde marks short roots of type A.
    """

    kind: str
    rank: int
    nodes: tuple[int, ...]
    tilde: bool = False

    @property
    def name(self) -> str:
        return ("Ã" if self.tilde else self.kind) + str(self.rank)

    def to_json(self) -> dict:
        return {"type": self.name, "nodes": list(self.nodes)}


def _neighbors(cartan, nodes):
    s = set(nodes)
    return {i: [j for j in nodes if j != i and cartan[i, j] != 0] for i in s}


def _path_from(start, nbrs):
    out, prev, cur = [start], None, start
    while True:
        nxt = [j for j in nbrs[cur] if j != prev]
        if not nxt:
            return out
        prev, cur = cur, nxt[0]
        out.append(cur)


def _arm(branch, first, nbrs):
    out, prev, cur = [first], branch, first
    while True:
        nxt = [j for j in nbrs[cur] if j != prev]
        if not nxt:
            return out
        prev, cur = cur, nxt[0]
        out.append(cur)


def classify_component(cartan, lengths, nodes) -> FactorType:
    nodes = sorted(nodes)
    two_lengths = len(set(lengths)) > 1
    long_sq = max(lengths)
    if len(nodes) == 1:
        i = nodes[0]
        return FactorType("A", 1, (i,), two_lengths and lengths[i] < long_sq)
    nbrs = _neighbors(cartan, nodes)
    own = {lengths[i] for i in nodes}
    if len(own) == 1:
        tilde = two_lengths and lengths[nodes[0]] < long_sq
        branch = [i for i in nodes if len(nbrs[i]) == 3]
        if not branch:
            ends = [i for i in nodes if len(nbrs[i]) == 1]
            return FactorType("A", len(nodes), tuple(_path_from(min(ends), nbrs)), tilde)
        b = branch[0]
        arms = sorted((_arm(b, j, nbrs) for j in nbrs[b]), key=lambda a: (len(a), min(a)))
        la = [len(a) for a in arms]
        k = len(nodes)
        if la[0] == 1 and la[1] == 1:
            if la[2] == 1:
                arms = sorted(arms, key=min)
            long_arm = arms[2] if la[2] > 1 else arms[0]
            leaves = sorted(a[0] for a in arms if a is not long_arm)
            order = list(reversed(long_arm)) + [b] + leaves
            return FactorType("D", k, tuple(order))
        if la[0] == 1 and la[1] == 2 and la[2] >= 2:
            short, mid = arms[0], arms[1]
            rest = arms[2]
            if la[2] == 2 and min(rest) < min(mid):
                mid, rest = rest, mid
            order = [mid[1], short[0], mid[0], b] + rest
            return FactorType("E", k, tuple(order))
        raise ValueError(f"unrecognized simply-laced component {nodes}")
    # two root lengths inside the component
    ends = [i for i in nodes if len(nbrs[i]) == 1]
    path = _path_from(min(ends), nbrs)
    bonds = [cartan[a, b] * cartan[b, a] for a, b in zip(path, path[1:])]
    if 3 in bonds:
        short, long_ = sorted(nodes, key=lambda i: lengths[i])
        return FactorType("G", 2, (short, long_))
    pos = bonds.index(2)
    if len(nodes) == 4 and pos == 1:
        if lengths[path[0]] < lengths[path[-1]]:
            path.reverse()
        return FactorType("F", 4, tuple(path))
    if pos == 0:
        path.reverse()
    if len(nodes) == 2:
        if lengths[path[0]] < lengths[path[1]]:
            path.reverse()
        return FactorType("B", 2, tuple(path))
    kind = "B" if lengths[path[-1]] < lengths[path[-2]] else "C"
    return FactorType(kind, len(nodes), tuple(path))


def components(cartan, lengths, J) -> list[FactorType]:
    J = sorted(J)
    left = set(J)
    comps = []
    while left:
        start = min(left)
        stack, comp = [start], {start}
        while stack:
            i = stack.pop()
            for j in J:
                if j not in comp and cartan[i, j] != 0:
                    comp.add(j)
                    stack.append(j)
        left -= comp
        comps.append(classify_component(cartan, lengths, comp))
    comps.sort(key=lambda f: (-f.rank, f.kind, f.tilde, f.nodes))
    return comps


def type_string(factors) -> str:
    if not factors:
        return "A0"
    counts: dict[str, int] = {}
    for f in factors:
        counts[f.name] = counts.get(f.name, 0) + 1
    return "+".join((f"{c}{n}" if c > 1 else n) for n, c in counts.items())


def longest_element(rs, J) -> np.ndarray:
    m = np.eye(rs.rank, dtype=np.int64)
    J = list(J)
    while True:
        for i in J:
            if np.all(m[:, i] >= 0):
                m = m @ rs.simple_reflections[i]
                break
        else:
            return m


@dataclass
class ParabolicRep:
    J: tuple[int, ...]
    factors: list[FactorType]
    members: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def type_name(self) -> str:
        return type_string(self.factors)

    def to_json(self) -> dict:
        return {
            "J": list(self.J),
            "type": self.type_name,
            "factors": [f.to_json() for f in self.factors],
            "class_size": len(self.members),
        }


class ParabolicData:
    """All subsets J of I grouped by conjugacy, with conjugators to the representative.

    to_rep[J] = (matrix u, node map) with u(alpha_j) = alpha_{map[j]} for j in J;
    from_rep[J] is the inverse of u.
    """

    def __init__(self, rs):
        self.rs = rs
        n = rs.rank
        self._w0: dict[tuple[int, ...], np.ndarray] = {}
        self.rep_of: dict[tuple[int, ...], tuple[int, ...]] = {}
        self.to_rep: dict[tuple[int, ...], tuple[np.ndarray, dict[int, int]]] = {}
        self.from_rep: dict[tuple[int, ...], np.ndarray] = {}
        self.reps: list[ParabolicRep] = []
        subsets = [tuple(c) for k in range(n + 1) for c in combinations(range(n), k)]
        for J in subsets:
            if J in self.rep_of:
                continue
            self._orbit(J)

    def w0(self, J) -> np.ndarray:
        J = tuple(sorted(J))
        if J not in self._w0:
            self._w0[J] = longest_element(self.rs, J)
        return self._w0[J]

    def _images(self, w, J) -> tuple[int, ...]:
        out = []
        for j in J:
            col = w[:, j]
            nz = np.nonzero(col)[0]
            if len(nz) != 1 or col[nz[0]] != 1:
                raise AssertionError("move does not map simple roots to simple roots")
            out.append(int(nz[0]))
        return tuple(out)

    def _orbit(self, R):
        rs = self.rs
        ident = np.eye(rs.rank, dtype=np.int64)
        # inv[M] maps Delta_M onto Delta_R, conj[M] is its inverse
        inv = {R: ident}
        conj = {R: ident}
        queue = [R]
        while queue:
            M = queue.pop(0)
            for s in range(rs.rank):
                if s in M:
                    continue
                L = tuple(sorted(M + (s,)))
                w = self.w0(L) @ self.w0(M)
                img = self._images(w, M)
                M2 = tuple(sorted(img))
                if M2 in inv:
                    continue
                inv[M2] = inv[M] @ self.w0(M) @ self.w0(L)
                conj[M2] = w @ conj[M]
                queue.append(M2)
        rep = ParabolicRep(R, components(rs.cartan, rs.lengths, R), sorted(inv))
        self.reps.append(rep)
        for M, u in inv.items():
            self.rep_of[M] = R
            self.to_rep[M] = (u, dict(zip(M, self._images(u, M))))
            self.from_rep[M] = conj[M]

    def rep(self, J) -> ParabolicRep:
        R = self.rep_of[tuple(sorted(J))]
        return next(p for p in self.reps if p.J == R)
