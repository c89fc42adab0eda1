"""Conjugacy classes of W(D_n) as tagged pairs (r, p) with r in R_ev.

Split labels (r empty, all parts of p even) stand for two classes that are
swapped by the diagram involution; they carry a tag "I" or "II".  Tag I is
the class of the representative with all cycles positive on consecutive
coordinates, tag II its conjugate by the sign change of the last coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import classical_bc as bc
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

TAGS = ("I", "II")


def is_split_pair(r: Partition, p: Partition) -> bool:
    return len(r) == 0 and all(x % 2 == 0 for x in p.parts)


@dataclass(frozen=True, order=True)
class DClassLabel:
    n: int
    r: Partition
    p: Partition
    split: str | None = None

    def __post_init__(self):
        if not isinstance(self.r, Partition):
            object.__setattr__(self, "r", Partition.of(self.r))
        if not isinstance(self.p, Partition):
            object.__setattr__(self, "p", Partition.of(self.p))
        if self.r.size() + self.p.size() != 2 * self.n:
            raise ValueError(f"|r|+|p| != 2n for {self.r} {self.p} n={self.n}")
        if not classify(self.r).in_R_ev:
            raise ValueError(f"r={self.r} is not in R_ev")
        if not classify(self.p).in_P:
            raise ValueError(f"p={self.p} is not paired")
        if is_split_pair(self.r, self.p) != (self.split is not None):
            raise ValueError(f"split tag {self.split!r} inconsistent with ({self.r},{self.p})")
        if self.split is not None and self.split not in TAGS:
            raise ValueError(f"bad split tag {self.split!r}")

    def negative_cycles(self) -> tuple[int, ...]:
        return tuple(x // 2 for x in self.r.parts)

    def positive_cycles(self) -> tuple[int, ...]:
        return halved(self.p).parts

    def __str__(self):
        tag = f"[{self.split}]" if self.split else ""
        return f"({self.r},{self.p}){tag}"

    def to_json(self) -> dict:
        return {
            "type": "D",
            "n": self.n,
            "r": self.r.to_json(),
            "p": self.p.to_json(),
            "split": self.split,
        }


@dataclass(frozen=True)
class DUnipLabelChar2:
    n: int
    c: Partition
    eps: tuple[tuple[int, int], ...] = ()
    split: str | None = None

    def __post_init__(self):
        base = bc.UnipLabelChar2(self.n, self.c, self.eps)
        object.__setattr__(self, "c", base.c)
        object.__setattr__(self, "eps", base.eps)
        if not classify(self.c).in_T_ev:
            raise ValueError(f"c={self.c} is not in T_ev")
        if is_split_unip(self.c, self.eps_map) != (self.split is not None):
            raise ValueError(f"split tag {self.split!r} inconsistent with {self.c}")

    @property
    def eps_map(self) -> dict[int, int]:
        return dict(self.eps)

    def __str__(self):
        e = ",".join(f"{j}:{v}" for j, v in self.eps)
        tag = f"[{self.split}]" if self.split else ""
        return f"(c={self.c},eps={{{e}}}){tag}"

    def to_json(self) -> dict:
        return {
            "c": self.c.to_json(),
            "eps": {str(j): v for j, v in self.eps},
            "split": self.split,
        }


def is_split_unip(c: Partition, eps: dict[int, int]) -> bool:
    """eps identically zero, no odd parts, even multiplicities throughout."""
    mults = c.multiplicities()
    return (
        all(v == 0 for v in eps.values())
        and all(j % 2 == 0 and m % 2 == 0 for j, m in mults.items())
    )


def d_class_labels(n: int) -> list[DClassLabel]:
    """All labels for W(D_n), n >= 2 (small ranks serve as factors)."""
    out = []
    for rsize in range(0, 2 * n + 1, 2):
        for r in enumerate_partitions(rsize, "R_ev"):
            for half in partitions((2 * n - rsize) // 2):
                p = doubled(half)
                if is_split_pair(r, p):
                    out += [DClassLabel(n, r, p, t) for t in TAGS]
                else:
                    out.append(DClassLabel(n, r, p))
    return out


def enumerate_classes_d(n: int) -> list[DClassLabel]:
    if n < 4:
        raise ValueError("type D needs rank >= 4")
    return d_class_labels(n)


def m_value(C) -> int:
    return len(C.p) // 2


def is_elliptic(C) -> bool:
    return len(C.p) == 0


def class_size_d(C: DClassLabel) -> int:
    b = bc.BCClassLabel(C.n, C.r, C.p)
    order_d = 2 ** (C.n - 1) * factorial(C.n)
    cent_b = bc.centralizer_order(b)
    cent_d = cent_b if C.split else cent_b // 2
    if C.n == 0:
        return 1
    return order_d // cent_d


def phi2_d(C: DClassLabel) -> DUnipLabelChar2:
    u = bc.phi2(bc.BCClassLabel(C.n, C.r, C.p))
    return DUnipLabelChar2(C.n, u.c, u.eps, C.split)


def enumerate_unip_char2_d(n: int) -> list[DUnipLabelChar2]:
    out = []
    for u in bc.enumerate_unip_char2(n):
        if not classify(u.c).in_T_ev:
            continue
        if is_split_unip(u.c, u.eps_map):
            out += [DUnipLabelChar2(n, u.c, u.eps, t) for t in TAGS]
        else:
            out.append(DUnipLabelChar2(n, u.c, u.eps))
    return out


def fiber_d(u: DUnipLabelChar2) -> list[DClassLabel]:
    base = bc.UnipLabelChar2(u.n, u.c, u.eps)
    out = []
    for C in bc.fiber(base):
        if not classify(C.r).in_R_ev:
            continue
        if is_split_pair(C.r, C.p):
            out.append(DClassLabel(u.n, C.r, C.p, u.split))
        else:
            out.append(DClassLabel(u.n, C.r, C.p))
    return out


def _retag(C: bc.BCClassLabel, split) -> DClassLabel:
    tag = split if is_split_pair(C.r, C.p) else None
    return DClassLabel(C.n, C.r, C.p, tag)


def max_nonelliptic_d(u: DUnipLabelChar2) -> DClassLabel:
    return _retag(bc.max_nonelliptic(bc.UnipLabelChar2(u.n, u.c, u.eps)), u.split)


def min_elliptic_d(u: DUnipLabelChar2) -> DClassLabel:
    return _retag(bc.min_elliptic(bc.UnipLabelChar2(u.n, u.c, u.eps)), u.split)


def in_CL_d(C: DClassLabel) -> bool:
    return all(m <= 2 for m in C.r.multiplicities().values())


def is_distinguished_CL_d(C: DClassLabel) -> bool:
    if not in_CL_d(C):
        raise ValueError(f"{C} is not in CL")
    return is_elliptic(C)


def enumerate_CL_d(n: int) -> list[DClassLabel]:
    return [C for C in d_class_labels(n) if in_CL_d(C)]


def enumerate_CL_dist_d(n: int) -> list[DClassLabel]:
    out = []
    for r in enumerate_partitions(2 * n, "R_ev"):
        if all(m <= 2 for m in r.multiplicities().values()):
            out.append(DClassLabel(n, r, Partition()))
    return out


def satisfies_char2_distinguished_d(u) -> bool:
    return classify(u.c).in_T_ev and bc.satisfies_char2_distinguished(u)


def _alternate(c) -> tuple[int, ...]:
    return tuple((x + 2) // 2 if i % 2 == 0 else (x - 2) // 2 for i, x in enumerate(c))


def springer_bipartition_char2_d(u: DUnipLabelChar2) -> Bipartition:
    if u.n < 4:
        raise ValueError("type D needs rank >= 4")
    if not satisfies_char2_distinguished_d(u):
        raise ValueError(f"{u} is not a distinguished characteristic-2 label")
    return Bipartition(_alternate(u.c.parts))


def char2_distinguished_set_d(n: int) -> set[Bipartition]:
    return {
        springer_bipartition_char2_d(u)
        for u in enumerate_unip_char2_d(n)
        if satisfies_char2_distinguished_d(u)
    }


def dist_bipartitions_oddchar_d(n: int) -> set[Bipartition]:
    if n < 4:
        raise ValueError("type D needs rank >= 4")
    out = set()
    for nu in bc._strict_sequences(2 * n, 1):
        if len(nu) % 2:
            continue
        out.add(Bipartition(tuple(
            (x + 1) // 2 if i % 2 == 0 else (x - 1) // 2 for i, x in enumerate(nu)
        )))
    return out


def c_sequence_d(nu, nu2) -> tuple[int, ...]:
    """c_i = nu_i + nu'_i for i <= 2t, then nu_i -/+ 1 alternately."""
    nu, nu2 = tuple(nu), tuple(nu2)
    if len(nu2) > len(nu):
        nu, nu2 = nu2, nu
    t2 = len(nu2)
    c = [nu[i] + nu2[i] for i in range(t2)]
    for i in range(t2, len(nu)):
        c.append(nu[i] - 1 if i % 2 == 0 else nu[i] + 1)
    return tuple(c)


def mixed_bipartition_d(nu, nu2, n: int | None = None) -> Bipartition:
    """Entrywise a_i + b_i; equals the alternating form of the c-sequence."""
    nu, nu2 = tuple(nu), tuple(nu2)
    for seq in (nu, nu2):
        bc._check_strict(seq, 1)
        if len(seq) % 2:
            raise ValueError(f"{seq} must have even length")
    if len(nu2) > len(nu):
        nu, nu2 = nu2, nu
    total = sum(nu) + sum(nu2)
    if n is not None and total != 2 * n:
        raise ValueError(f"shapes have total {total}, expected {2 * n}")
    a = [(x + 1) // 2 if i % 2 == 0 else (x - 1) // 2 for i, x in enumerate(nu)]
    b = [(x + 1) // 2 if i % 2 == 0 else (x - 1) // 2 for i, x in enumerate(nu2)]
    b += [0] * (len(a) - len(b))
    direct = tuple(x + y for x, y in zip(a, b))
    c = c_sequence_d(nu, nu2)
    if any(x <= 0 or x % 2 for x in c):
        raise ValueError(f"c-sequence {c} is not even and positive")
    if any(x < y for x, y in zip(c, c[1:])) or any(c[i] == c[i + 2] for i in range(len(c) - 2)):
        raise ValueError(f"c-sequence {c} has a repeated equality")
    if _alternate(c) != direct:
        raise AssertionError(f"alternating form of {c} differs from {direct}")
    return Bipartition(direct)


def mixed_inputs_d(n: int):
    for k in range(0, 2 * n + 1, 2):
        for nu in bc._strict_sequences(k, 1):
            if len(nu) % 2:
                continue
            for nu2 in bc._strict_sequences(2 * n - k, 1):
                if len(nu2) % 2 == 0 and len(nu2) <= len(nu):
                    yield nu, nu2


@dataclass(frozen=True)
class WsTypeD:
    """S_{rbar_k} x ... x S_{rbar_2} x W(D_m) x W(D_m) with m = rbar_1 / 2."""

    symmetric: tuple[int, ...]
    d_rank: int

    def coxeter_factors(self) -> list[str]:
        out = [f"A{k - 1}" for k in self.symmetric if k >= 2]
        m = self.d_rank
        for _ in range(2):
            if m == 2:
                out += ["A1", "A1"]
            elif m == 3:
                out.append("A3")
            elif m >= 4:
                out.append(f"D{m}")
        return out

    def root_count(self) -> int:
        m = self.d_rank
        return sum(k * (k - 1) for k in self.symmetric) + 2 * (2 * m * (m - 1))

    def size(self) -> int:
        return sum(self.symmetric) + 2 * self.d_rank


def ws_type_d(C: DClassLabel) -> WsTypeD:
    if not (in_CL_d(C) and is_elliptic(C)):
        raise ValueError(f"{C} is not a distinguished class")
    rbar = bar_sequence(C.r).parts
    if rbar[0] % 2:
        raise AssertionError(f"first bar entry of {C} is odd")
    return WsTypeD(tuple(rbar[1:]), rbar[0] // 2)


def elementary_edges_d(n: int) -> list[tuple[DClassLabel, DClassLabel]]:
    out = []
    if n < 4:
        return out
    for r in enumerate_partitions(2 * n, "R_ev"):
        for part, m in sorted(r.multiplicities().items(), reverse=True):
            if m >= 3:
                r2 = remove_parts(r, part, 2)
                out.append(
                    (DClassLabel(n, r, Partition()), DClassLabel(n, r2, Partition((part, part))))
                )
    return out


def fuse_d(n: int, a_cycle_types, sub: DClassLabel | None, variant: str = "I") -> DClassLabel:
    """Parabolic inclusion for W_J = S_l1 x ... x W(D_j).

    The tag of a split result comes from the D-factor when there is one, and
    from the variant of J (which of the two end nodes it uses) otherwise.
    """
    r = list(sub.r.parts) if sub is not None else []
    p = list(sub.p.parts) if sub is not None else []
    for lam in a_cycle_types:
        for x in lam:
            p += [x, x]
    r, p = Partition.of(r), Partition.of(p)
    tag = None
    if is_split_pair(r, p):
        tag = sub.split if sub is not None and sub.n >= 2 else variant
    return DClassLabel(n, r, p, tag)


def parabolic_types_d(n: int):
    """Representatives of J up to conjugacy: (A-block sizes, j, variant).

    j is the rank of the D-factor (j = 1 never occurs; j = 0 means none).
    With j = 0 and all blocks even there are two inequivalent choices.
    """
    for j in [0] + list(range(2, n + 1)):
        for lam in partitions(n - j):
            if j == 0 and all(x % 2 == 0 for x in lam.parts):
                yield lam, j, "I"
                yield lam, j, "II"
            else:
                yield lam, j, None
