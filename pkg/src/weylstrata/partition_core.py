"""Partitions, bipartitions and the partition classes T, R, P, T_ev, R_ev."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive integers; zeros are never stored."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts if int(x) != 0)
        for x in parts:
            if x < 0:
                raise ValueError(f"negative part in {self.parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Partition":
        """Build from any sequence of nonnegative integers, sorting first."""
        return cls(tuple(sorted((int(x) for x in parts if x), reverse=True)))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def size(self) -> int:
        return sum(self.parts)

    def mu(self, j: int) -> int:
        return self.parts.count(j)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for x in self.parts:
            out[x] = out.get(x, 0) + 1
        return out

    def to_json(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True)
class Bipartition:
    """Sequence l1, l2, l3, ... with l1 >= l3 >= ... and l2 >= l4 >= ...

    The buffer always has even length; trailing zero pairs are dropped.
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        e = [int(x) for x in self.entries]
        if any(x < 0 for x in e):
            raise ValueError(f"negative entry in {self.entries}")
        while e and e[-1] == 0:
            e.pop()
        if len(e) % 2:
            e.append(0)
        for k in range(len(e) - 2):
            if e[k] < e[k + 2]:
                raise ValueError(f"bipartition chains not decreasing: {self.entries}")
        object.__setattr__(self, "entries", tuple(e))

    def size(self) -> int:
        return sum(self.entries)

    def odd_chain(self) -> tuple[int, ...]:
        return self.entries[0::2]

    def even_chain(self) -> tuple[int, ...]:
        return self.entries[1::2]

    def nonzero(self) -> tuple[int, ...]:
        e = list(self.entries)
        while e and e[-1] == 0:
            e.pop()
        return tuple(e)

    def __str__(self):
        return "(" + ",".join(map(str, self.nonzero())) + ")"

    def to_json(self) -> list[int]:
        return list(self.entries)


@dataclass(frozen=True)
class PartitionClassFlags:
    in_T: bool
    in_R: bool
    in_P: bool
    in_T_ev: bool
    in_R_ev: bool


CLASS_NAMES = ("T", "R", "P", "T_ev", "R_ev")


def size(x) -> int:
    if isinstance(x, (Partition, Bipartition)):
        return x.size()
    return sum(x)


def mu(lam: Partition, j: int) -> int:
    if j < 1:
        raise ValueError("mu is defined for j >= 1")
    return lam.mu(j)


def classify(lam: Partition) -> PartitionClassFlags:
    parts = lam.parts
    in_R = all(x % 2 == 0 for x in parts)
    in_P = all(m % 2 == 0 for m in lam.multiplicities().values())
    even_count = len(parts) % 2 == 0
    return PartitionClassFlags(
        in_T=True, in_R=in_R, in_P=in_P, in_T_ev=even_count, in_R_ev=in_R and even_count
    )


def in_class(lam: Partition, cls: str) -> bool:
    flags = classify(lam)
    return getattr(flags, "in_" + cls)


def bar_sequence(r: Partition) -> Partition:
    """r-bar_i = number of parts t with r_t / 2 >= i."""
    if any(x % 2 for x in r.parts):
        raise ValueError(f"bar_sequence needs even parts, got {r}")
    top = r.parts[0] // 2 if r.parts else 0
    return Partition(tuple(sum(1 for x in r.parts if x // 2 >= i) for i in range(1, top + 1)))


def partitions(m: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of m in reverse lexicographic order."""
    if max_part is None:
        max_part = m

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(m, max_part):
        yield Partition(parts)


def enumerate_partitions(m: int, cls: str = "T") -> list[Partition]:
    if cls not in CLASS_NAMES:
        raise ValueError(f"unknown partition class {cls!r}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return [lam for lam in partitions(m) if in_class(lam, cls)]


def paired_partitions(m: int) -> list[Partition]:
    """Partitions in P of size m, i.e. (k,k) pairs built from partitions of m/2."""
    if m % 2:
        return []
    return [doubled(lam) for lam in partitions(m // 2)]


def doubled(lam: Partition) -> Partition:
    """(a, b, ...) -> (a, a, b, b, ...)."""
    return Partition(tuple(x for x in lam.parts for _ in (0, 1)))


def halved(p: Partition) -> Partition:
    """Inverse of doubled on P."""
    if not classify(p).in_P:
        raise ValueError(f"{p} is not in P")
    return Partition(p.parts[0::2])


def join(*lams: Partition) -> Partition:
    return Partition.of([x for lam in lams for x in lam.parts])


def remove_parts(lam: Partition, part: int, count: int) -> Partition:
    parts = list(lam.parts)
    for _ in range(count):
        parts.remove(part)
    return Partition(tuple(parts))


def step_bounded_sequences(n: int, max_step: int = 2) -> list[Partition]:
    """Weakly decreasing sequences summing to n with consecutive drops <= max_step
    (the final drop to zero included)."""
    return [
        lam
        for lam in partitions(n)
        if all(a - b <= max_step for a, b in zip(lam.parts, lam.parts[1:] + (0,)))
    ]
