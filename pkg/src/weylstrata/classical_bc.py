"""Conjugacy classes of W(B_n) = W(C_n) as pairs (r, p) and their
characteristic-2 unipotent shadows.

A class is recorded by its signed cycle type: a negative k-cycle contributes
a part 2k to r, a positive k-cycle contributes a pair (k, k) to p.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import factorial

from .partition_core import (
    Bipartition,
    Partition,
    bar_sequence,
    classify,
    doubled,
    enumerate_partitions,
    halved,
    partitions,
    remove_parts,
)


class GroupFlavor(enum.Enum):
    SP = "Sp"
    SO_ODD = "SOodd"


@dataclass(frozen=True, order=True)
class BCClassLabel:
    n: int
    r: Partition
    p: Partition

    def __post_init__(self):
        if not isinstance(self.r, Partition):
            object.__setattr__(self, "r", Partition.of(self.r))
        if not isinstance(self.p, Partition):
            object.__setattr__(self, "p", Partition.of(self.p))
        if self.r.size() + self.p.size() != 2 * self.n:
            raise ValueError(f"|r|+|p| != 2n for {self.r} {self.p} n={self.n}")
        if not classify(self.r).in_R:
            raise ValueError(f"r={self.r} has an odd part")
        if not classify(self.p).in_P:
            raise ValueError(f"p={self.p} is not paired")

    def negative_cycles(self) -> tuple[int, ...]:
        return tuple(x // 2 for x in self.r.parts)

    def positive_cycles(self) -> tuple[int, ...]:
        return halved(self.p).parts

    def __str__(self):
        return f"({self.r},{self.p})"

    def to_json(self) -> dict:
        return {"type": "B", "n": self.n, "r": self.r.to_json(), "p": self.p.to_json()}


def label_from_cycles(n: int, negative, positive) -> BCClassLabel:
    r = Partition.of([2 * k for k in negative])
    p = doubled(Partition.of(positive))
    return BCClassLabel(n, r, p)


@dataclass(frozen=True)
class UnipLabelChar2:
    """(c, eps) with eps stored as sorted (j, value) pairs."""

    n: int
    c: Partition
    eps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.c, Partition):
            object.__setattr__(self, "c", Partition.of(self.c))
        eps = self.eps
        if isinstance(eps, dict):
            eps = tuple(sorted(eps.items()))
        object.__setattr__(self, "eps", tuple(sorted((int(j), int(v)) for j, v in eps)))
        if self.c.size() != 2 * self.n:
            raise ValueError(f"|c| != 2n for c={self.c}")
        mults = self.c.multiplicities()
        for j, m in mults.items():
            if j % 2 and m % 2:
                raise ValueError(f"odd part {j} of c={self.c} has odd multiplicity")
        if {j for j, _ in self.eps} != eps_domain(self.c):
            raise ValueError(f"eps domain mismatch for c={self.c}: {self.eps}")
        if any(v not in (0, 1) for _, v in self.eps):
            raise ValueError("eps values must be 0 or 1")

    @property
    def eps_map(self) -> dict[int, int]:
        return dict(self.eps)

    def __str__(self):
        e = ",".join(f"{j}:{v}" for j, v in self.eps)
        return f"(c={self.c},eps={{{e}}})"

    def to_json(self) -> dict:
        return {"c": self.c.to_json(), "eps": {str(j): v for j, v in self.eps}}


def eps_domain(c: Partition) -> set[int]:
    return {j for j, m in c.multiplicities().items() if j % 2 == 0 and m % 2 == 0}


def enumerate_classes(n: int) -> list[BCClassLabel]:
    out = []
    for rsize in range(0, 2 * n + 1, 2):
        for r in enumerate_partitions(rsize, "R"):
            for half in partitions((2 * n - rsize) // 2):
                out.append(BCClassLabel(n, r, doubled(half)))
    return out


def m_value(C) -> int:
    """Number of positive cycles, i.e. half the number of parts of p."""
    return len(C.p) // 2


def is_elliptic(C) -> bool:
    return len(C.p) == 0


def class_size(C: BCClassLabel) -> int:
    return (2**C.n * factorial(C.n)) // centralizer_order(C)


def centralizer_order(C: BCClassLabel) -> int:
    order = 1
    for cycles in (C.negative_cycles(), C.positive_cycles()):
        for k in set(cycles):
            a = cycles.count(k)
            order *= (2 * k) ** a * factorial(a)
    return order


def phi2(C: BCClassLabel) -> UnipLabelChar2:
    c = Partition.of(C.r.parts + C.p.parts)
    eps = {j: int(C.r.mu(j) > 0) for j in eps_domain(c)}
    return UnipLabelChar2(C.n, c, eps)


def enumerate_unip_char2(n: int) -> list[UnipLabelChar2]:
    out = []
    for c in partitions(2 * n):
        mults = c.multiplicities()
        if any(j % 2 and m % 2 for j, m in mults.items()):
            continue
        dom = sorted(eps_domain(c))
        for values in itertools.product((0, 1), repeat=len(dom)):
            out.append(UnipLabelChar2(n, c, dict(zip(dom, values))))
    return out


def _fiber_choices(u: UnipLabelChar2):
    """Per part value j, the admissible (mu_j(r), mu_j(p)) splits."""
    eps = u.eps_map
    choices = []
    for j, m in sorted(u.c.multiplicities().items(), reverse=True):
        if j % 2:
            opts = [(0, m)]
        elif j in eps:
            if eps[j]:
                opts = [(a, m - a) for a in range(2, m + 1, 2)]
            else:
                opts = [(0, m)]
        else:
            opts = [(a, m - a) for a in range(1, m + 1, 2)]
        choices.append((j, opts))
    return choices


def _assemble(n, splits) -> BCClassLabel:
    r, p = [], []
    for j, (a, b) in splits:
        r += [j] * a
        p += [j] * b
    return BCClassLabel(n, Partition.of(r), Partition.of(p))


def fiber(u: UnipLabelChar2) -> list[BCClassLabel]:
    choices = _fiber_choices(u)
    out = []
    for combo in itertools.product(*(opts for _, opts in choices)):
        out.append(_assemble(u.n, zip((j for j, _ in choices), combo)))
    return out


def max_nonelliptic(u: UnipLabelChar2) -> BCClassLabel:
    eps = u.eps_map
    splits = []
    for j, m in u.c.multiplicities().items():
        if j % 2:
            splits.append((j, (0, m)))
        elif m % 2:
            splits.append((j, (1, m - 1)))
        elif eps[j]:
            splits.append((j, (2, m - 2)))
        else:
            splits.append((j, (0, m)))
    return _assemble(u.n, splits)


def min_elliptic(u: UnipLabelChar2) -> BCClassLabel:
    eps = u.eps_map
    splits = []
    for j, m in u.c.multiplicities().items():
        if j % 2 or (m % 2 == 0 and not eps[j]):
            splits.append((j, (0, m)))
        else:
            splits.append((j, (m, 0)))
    return _assemble(u.n, splits)


def in_CL(C) -> bool:
    return all(m <= 2 for m in C.r.multiplicities().values())


def is_distinguished_CL(C) -> bool:
    if not in_CL(C):
        raise ValueError(f"{C} is not in CL")
    return is_elliptic(C)


def enumerate_CL(n: int) -> list[BCClassLabel]:
    return [C for C in enumerate_classes(n) if in_CL(C)]


def enumerate_CL_dist(n: int) -> list[BCClassLabel]:
    out = []
    for r in enumerate_partitions(2 * n, "R"):
        if all(m <= 2 for m in r.multiplicities().values()):
            out.append(BCClassLabel(n, r, Partition()))
    return out


def satisfies_char2_distinguished(u) -> bool:
    """Wall's conditions: no odd parts, multiplicities <= 2, eps = 1 on doubled parts."""
    mults = u.c.multiplicities()
    eps = u.eps_map
    if any(j % 2 for j in mults):
        return False
    if any(m > 2 for m in mults.values()):
        return False
    return all(eps[j] == 1 for j, m in mults.items() if m == 2)


def springer_bipartition_char2(u: UnipLabelChar2) -> Bipartition:
    if not satisfies_char2_distinguished(u):
        raise ValueError(f"{u} is not a distinguished characteristic-2 label")
    return Bipartition(tuple(x // 2 for x in u.c.parts))


def char2_distinguished_set(n: int) -> set[Bipartition]:
    return {
        springer_bipartition_char2(u)
        for u in enumerate_unip_char2(n)
        if satisfies_char2_distinguished(u)
    }


def is_char2_distinguished_bipartition(x: Bipartition, n: int) -> bool:
    """Direct test: weakly decreasing, total n, no value repeated three times."""
    e = x.nonzero()
    if sum(e) != n or any(a < b for a, b in zip(e, e[1:])):
        return False
    return all(e[i] != e[i + 2] for i in range(len(e) - 2))


def _strict_sequences(total: int, parity: int | None, min_part: int = 1):
    """Strictly decreasing sequences of positive integers with given parity."""

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for x in range(min(rest, cap), min_part - 1, -1):
            if parity is not None and x % 2 != parity:
                continue
            for tail in rec(rest - x, x - 1):
                yield (x,) + tail

    yield from rec(total, total)


def dist_bipartitions_oddchar(n: int, flavor: GroupFlavor) -> set[Bipartition]:
    out = set()
    if flavor is GroupFlavor.SP:
        for seq in _strict_sequences(n, None):
            out.add(Bipartition(seq))
    else:
        for nu in _strict_sequences(2 * n + 1, 1):
            if len(nu) % 2 == 0:
                continue
            c = [(x - 1) // 2 if i % 2 == 0 else (x + 1) // 2 for i, x in enumerate(nu)]
            out.add(Bipartition(tuple(c)))
    return out


def _check_strict(seq, parity):
    for a, b in zip(seq, seq[1:]):
        if a <= b:
            raise ValueError(f"{seq} is not strictly decreasing")
    if any(x < 1 or x % 2 != parity for x in seq):
        raise ValueError(f"{seq} has entries of the wrong parity")


def mixed_bipartition(nu, nu2, flavor: GroupFlavor, n: int | None = None) -> Bipartition:
    """Bipartition attached to a pair of distinguished shapes, entrywise a_i + b_i.

    The printed display halves a_i + b_i, which would make the total n/2; the
    entrywise sum is the reading that has total n and that agrees with the
    alternating c-sequence identity of the orthogonal even case.
    """
    nu, nu2 = tuple(nu), tuple(nu2)
    if flavor is GroupFlavor.SP:
        _check_strict(nu, 0)
        _check_strict(nu2, 0)
        total = sum(nu) + sum(nu2)
        if total % 2:
            raise ValueError("odd total")
        a = [x // 2 for x in nu]
        b = [x // 2 for x in nu2]
        size = total // 2
    else:
        _check_strict(nu, 1)
        _check_strict(nu2, 1)
        if len(nu) % 2 == 0 or len(nu2) % 2 == 1:
            raise ValueError("SOodd needs odd length for nu and even length for nu'")
        total = sum(nu) + sum(nu2)
        a = [(x - 1) // 2 if i % 2 == 0 else (x + 1) // 2 for i, x in enumerate(nu)]
        b = [(x + 1) // 2 if i % 2 == 0 else (x - 1) // 2 for i, x in enumerate(nu2)]
        size = (total - 1) // 2
    if n is not None and n != size:
        raise ValueError(f"shapes have total {size}, expected {n}")
    k = max(len(a), len(b))
    a += [0] * (k - len(a))
    b += [0] * (k - len(b))
    return Bipartition(tuple(x + y for x, y in zip(a, b)))


def mixed_inputs(n: int, flavor: GroupFlavor):
    """All valid (nu, nu') pairs of total rank n."""
    if flavor is GroupFlavor.SP:
        for k in range(0, 2 * n + 1, 2):
            for nu in _strict_sequences(k, 0):
                for nu2 in _strict_sequences(2 * n - k, 0):
                    yield nu, nu2
    else:
        for k in range(1, 2 * n + 2, 2):
            for nu in _strict_sequences(k, 1):
                if len(nu) % 2 == 0:
                    continue
                for nu2 in _strict_sequences(2 * n + 1 - k, 1):
                    if len(nu2) % 2 == 0:
                        yield nu, nu2


def ws_type(C: BCClassLabel) -> Partition:
    if not (in_CL(C) and is_elliptic(C)):
        raise ValueError(f"{C} is not a distinguished class")
    return bar_sequence(C.r)


def ws_root_count(C: BCClassLabel) -> int:
    return sum(k * (k - 1) for k in ws_type(C).parts)


def elementary_edges(n: int) -> list[tuple[BCClassLabel, BCClassLabel]]:
    """Remove two parts 2t from r (2t must survive) and add the pair (2t, 2t) to p."""
    out = []
    if n < 2:
        return out
    for r in enumerate_partitions(2 * n, "R"):
        for part, m in sorted(r.multiplicities().items(), reverse=True):
            if m >= 3:
                r2 = remove_parts(r, part, 2)
                out.append(
                    (BCClassLabel(n, r, Partition()), BCClassLabel(n, r2, Partition((part, part))))
                )
    return out


def fuse(n: int, a_cycle_types, sub: BCClassLabel | None) -> BCClassLabel:
    """Parabolic inclusion for W_J = S_l1 x ... x W(B_j): each A-factor cycle of
    length l adds a pair (l, l) to p, the B-factor label is merged as is."""
    r = list(sub.r.parts) if sub is not None else []
    p = list(sub.p.parts) if sub is not None else []
    for lam in a_cycle_types:
        for x in lam:
            p += [x, x]
    return BCClassLabel(n, Partition.of(r), Partition.of(p))
