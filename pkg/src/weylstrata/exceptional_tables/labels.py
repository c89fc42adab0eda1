"""Carter labels and irreducible-representation labels."""

from __future__ import annotations

import re
from dataclasses import dataclass

PRIMES = ("", "′", "″")
_KIND_ORDER = {"E": 0, "F": 1, "D": 2, "C": 3, "B": 4, "G": 5, "A": 6}
_ROOTS = {
    "A": lambda k: k * (k + 1),
    "B": lambda k: 2 * k * k,
    "C": lambda k: 2 * k * k,
    "D": lambda k: 2 * k * (k - 1),
    "E": lambda k: {6: 72, 7: 126, 8: 240}[k],
    "F": lambda k: 48,
    "G": lambda k: 12,
}


@dataclass(frozen=True, order=True)
class Component:
    kind: str
    rank: int
    a: int = 0
    tilde: bool = False

    def sort_key(self):
        return (_KIND_ORDER[self.kind], -self.rank, self.a, self.tilde)

    def __str__(self):
        s = ("Ã" if self.tilde else self.kind) + str(self.rank)
        if self.a:
            s += f"(a{self.a})"
        return s

    def root_count(self) -> int:
        return _ROOTS[self.kind](self.rank)


def normalize_prime(p: str) -> str:
    p = p.replace("''", "″").replace("'", "′")
    if p not in PRIMES:
        raise ValueError(f"bad prime tag {p!r}")
    return p


_COMP = re.compile(r"^(\d*)(~?)([ABCDEFGÃ])(\d+)(?:\(a(\d+)\))?$")


@dataclass(frozen=True)
class CarterLabel:
    """Multiset of components plus an optional prime tag; A0 is the empty label."""

    components: tuple[Component, ...] = ()
    prime: str = ""

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple(sorted(self.components, key=Component.sort_key))
        )
        object.__setattr__(self, "prime", normalize_prime(self.prime))

    @classmethod
    def parse(cls, text: str) -> "CarterLabel":
        t = text.strip().replace(" ", "")
        if t.startswith("[") and t.endswith("]"):
            t = t[1:-1]
        prime = ""
        m = re.match(r"^\((.*)\)(′|″|''|')$", t)
        if m:
            t, prime = m.group(1), m.group(2)
        else:
            m = re.match(r"^(.*?)(′|″|''|')$", t)
            if m:
                t, prime = m.group(1), m.group(2)
            else:
                # single component written with the prime before the rank, e.g. A″5
                m = re.match(r"^([A-GÃ])(′|″|''|')(\d+)$", t)
                if m:
                    t, prime = m.group(1) + m.group(3), m.group(2)
        comps: list[Component] = []
        if t not in ("A0", ""):
            for piece in t.split("+"):
                m = _COMP.match(piece)
                if not m:
                    raise ValueError(f"cannot parse Carter label {text!r}")
                mult = int(m.group(1)) if m.group(1) else 1
                kind = m.group(3)
                tilde = bool(m.group(2)) or kind == "Ã"
                if kind == "Ã":
                    kind = "A"
                rank = int(m.group(4))
                a = int(m.group(5)) if m.group(5) else 0
                comps += [Component(kind, rank, a, tilde)] * mult
        return cls(tuple(comps), prime)

    @property
    def key(self) -> tuple[Component, ...]:
        return self.components

    def unprimed(self) -> "CarterLabel":
        return CarterLabel(self.components)

    def with_prime(self, prime: str) -> "CarterLabel":
        return CarterLabel(self.components, prime)

    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    def root_count(self) -> int:
        return sum(c.root_count() for c in self.components)

    def body(self) -> str:
        if not self.components:
            return "A0"
        parts: list[str] = []
        i = 0
        comps = self.components
        while i < len(comps):
            j = i
            while j < len(comps) and comps[j] == comps[i]:
                j += 1
            k = j - i
            parts.append((str(k) if k > 1 else "") + str(comps[i]))
            i = j
        return "+".join(parts)

    def __str__(self):
        b = self.body()
        if not self.prime:
            return b
        if len(self.components) == 1:
            return b + self.prime
        return f"({b}){self.prime}"


@dataclass(frozen=True)
class IrrLabel:
    degree: int
    b: int
    prime: str = ""

    def __str__(self):
        return f"{self.degree}_{self.b}"

    def tagged(self) -> str:
        return f"{self.degree}_{self.b}{self.prime}"

    def to_json(self) -> dict:
        return {"degree": self.degree, "b": self.b, "prime": self.prime}
