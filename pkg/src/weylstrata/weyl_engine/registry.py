"""Class registry of an irreducible Weyl group.

A class is keyed by (K, c) with K in the parabolic representative set and c an
elliptic class of W_K, one elliptic class per irreducible factor.  An element
is identified by moving a generic vector of its fixed space into the dominant
chamber: the element then lies in W_K' (K' the stabilizer of that vector) and
is elliptic there, and K' is carried onto its representative by the stored
conjugator.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import factorial

import numpy as np

from .. import classical_bc as bc
from .. import classical_d as cd
from ..exceptional_tables import (
    CarterLabel,
    Component,
    class_table,
    elliptic_edge_table,
    primed_provenance,
    resolve_label,
    ws_table,
)
from ..partition_core import Partition, doubled, partitions
from . import signed_perm as sp
from .elements import WeylElement, cyclo, fingerprint, fixed_space_dim, length_cycle_types, nullspace
from .elliptic import elliptic_lookup, elliptic_words
from .parabolic import ParabolicData, ParabolicRep, components
from .rootsystem import classical_simple_roots_e, root_system

ORDERS = {"G2": 12, "F4": 1152, "E6": 51840, "E7": 2903040, "E8": 696729600}
ENUMERATION_LIMIT = 100_000


class ClassIdentificationError(RuntimeError):
    pass


def group_order(kind: str, n: int) -> int:
    if kind == "A":
        return factorial(n + 1)
    if kind in "BC":
        return 2**n * factorial(n)
    if kind == "D":
        return 2 ** (n - 1) * factorial(n)
    return ORDERS[f"{kind}{n}"]


# ---------------------------------------------------------------- factors


@lru_cache(maxsize=None)
def factor_elliptics(kind: str, rank: int) -> tuple[tuple[object, tuple[int, ...]], ...]:
    """(ident, word) for every elliptic class of the standalone group."""
    if kind == "A":
        return (("cox", tuple(range(rank))),)
    if kind in "BCD":
        out = []
        for lam in partitions(rank):
            if kind == "D" and len(lam) % 2:
                continue
            img = sp.from_cycles(lam.parts, ())
            out.append((lam.parts, sp.reduced_word(kind, rank, img)))
        return tuple(out)
    return tuple(elliptic_words(kind, rank).items())


def _e_matrix(kind: str, rank: int, block: np.ndarray) -> tuple[int, ...]:
    e = classical_simple_roots_e(kind, rank)
    me = np.rint(e @ block @ np.linalg.inv(e)).astype(np.int64)
    if not np.array_equal(me @ e, e @ block):
        raise AssertionError("block is not a signed permutation")
    return sp.from_matrix(me)


def _a_permutation(block: np.ndarray) -> tuple[int, ...]:
    e = classical_simple_roots_e("A", block.shape[0])
    v = e @ block
    k = block.shape[0]
    pi = [int(np.nonzero(v[:, 0] == 1)[0][0])]
    for i in range(k):
        pi.append(int(np.nonzero(v[:, i] == -1)[0][0]))
    return tuple(x + 1 for x in pi)


def identify_elliptic(kind: str, rank: int, block: np.ndarray):
    if kind == "A":
        if fixed_space_dim(block) != 0:
            raise ClassIdentificationError("factor element is not elliptic")
        return "cox"
    if kind in "BCD":
        neg, pos = sp.cycle_type(_e_matrix(kind, rank, block))
        if pos:
            raise ClassIdentificationError("factor element is not elliptic")
        return neg
    rs = root_system(kind, rank)
    sig = (cyclo(block), length_cycle_types(rs, rs.root_permutation(block)))
    try:
        return elliptic_lookup(kind, rank)[sig]
    except KeyError:
        raise ClassIdentificationError(f"no elliptic class of {kind}{rank} matches") from None


def _pairings(cycles, allow_single: bool):
    """Ways of grouping cycles into singles and pairs (only pairs unless allow_single)."""
    cycles = tuple(sorted(cycles, reverse=True))
    if not cycles:
        yield ()
        return
    first, rest = cycles[0], cycles[1:]
    if allow_single:
        for tail in _pairings(rest, allow_single):
            yield ((first,),) + tail
    seen = set()
    for i, c in enumerate(rest):
        if c in seen:
            continue
        seen.add(c)
        for tail in _pairings(rest[:i] + rest[i + 1:], allow_single):
            yield ((first, c),) + tail


def _pair_components(l: int, m: int, tilde: bool):
    tot = l + m
    if tot == 2:
        return [Component("A", 1, 0, tilde)] * 2
    if tot == 3:
        return [Component("A", 3, 0, tilde)]
    if tilde:
        return None
    return [Component("D", tot, m - 1)]


def factor_variants(f_kind: str, rank: int, tilde: bool, ident) -> list[tuple[Component, ...]]:
    """Carter-style names of an elliptic class of one factor (several may apply)."""
    if f_kind == "A":
        return [(Component("A", rank, 0, tilde),)]
    if f_kind in "EFG":
        return [CarterLabel.parse(ident).components]
    out = set()
    for grouping in _pairings(ident, f_kind != "D"):
        comps: list[Component] = []
        ok = True
        for g in grouping:
            if len(g) == 1:
                k = g[0]
                if f_kind == "B":
                    comps.append(Component("A", 1, 0, True) if k == 1 else Component("B", k))
                else:
                    comps.append(Component("A", 1) if k == 1 else Component("B" if k == 2 else "C", k))
            else:
                pc = _pair_components(g[0], g[1], f_kind == "C")
                if pc is None:
                    ok = False
                    break
                comps += pc
        if ok:
            out.add(CarterLabel(tuple(comps)).components)
    return sorted(out)


@dataclass(frozen=True)
class FactorClass:
    """A class of a standalone irreducible factor group."""

    label: object
    word: tuple[int, ...]
    m: int
    cl: bool
    cl_dist: bool

    def __str__(self):
        return str(self.label)


def _d_word(k: int, C: cd.DClassLabel) -> tuple[int, ...]:
    img = sp.from_cycles(C.negative_cycles(), C.positive_cycles())
    if C.split == "II":
        img = sp.flip_last(img)
    if C.split is not None and sp.split_tag(img) != C.split:
        raise AssertionError("split representative carries the wrong tag")
    return sp.reduced_word("D", k, img)


@lru_cache(maxsize=None)
def factor_catalog(kind: str, rank: int) -> tuple[FactorClass, ...]:
    if kind == "A":
        out = []
        for lam in partitions(rank + 1):
            word = sp.reduced_word("A", rank, sp.perm_from_partition(lam.parts))
            out.append(FactorClass(lam, word, len(lam) - 1, True, len(lam) == 1))
        return tuple(out)
    if kind in "BC":
        return tuple(
            FactorClass(
                C,
                sp.reduced_word(kind, rank, sp.from_cycles(C.negative_cycles(), C.positive_cycles())),
                bc.m_value(C),
                bc.in_CL(C),
                bc.in_CL(C) and bc.is_distinguished_CL(C),
            )
            for C in bc.enumerate_classes(rank)
        )
    if kind == "D":
        return tuple(
            FactorClass(
                C,
                _d_word(rank, C),
                cd.m_value(C),
                cd.in_CL_d(C),
                cd.in_CL_d(C) and cd.is_distinguished_CL_d(C),
            )
            for C in cd.enumerate_classes_d(rank)
        )
    ctx = build(kind, rank)
    cl = ctx.cl_classes()
    dist = ctx.cl_dist_classes()
    return tuple(
        FactorClass(c.name, c.word, c.m, c.index in cl, c.index in dist) for c in ctx.classes
    )


@lru_cache(maxsize=None)
def factor_edges(kind: str, rank: int) -> tuple[tuple[int, int], ...]:
    """Elementary elliptic edges of the standalone factor, as catalog indices."""
    if kind == "A":
        return ()
    cat = factor_catalog(kind, rank)
    pos = {c.label: i for i, c in enumerate(cat)}
    if kind in "BC":
        return tuple((pos[a], pos[b]) for a, b in bc.elementary_edges(rank))
    if kind == "D":
        return tuple((pos[a], pos[b]) for a, b in cd.elementary_edges_d(rank))
    return tuple(build(kind, rank).table_edges())


# ---------------------------------------------------------------- registry


@dataclass
class WeylClass:
    index: int
    rep_J: tuple[int, ...]
    idents: tuple
    word: tuple[int, ...]
    m: int
    K_type: str
    variants: frozenset
    name: str = ""
    label: CarterLabel | None = None
    classical: object = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "id": self.index,
            "name": self.name,
            "carter": str(self.label) if self.label is not None else None,
            "classical": self.classical.to_json() if hasattr(self.classical, "to_json") else (
                list(self.classical.parts) if self.classical is not None else None
            ),
            "m": self.m,
            "parabolic": {"J": list(self.rep_J), "type": self.K_type},
            "word": list(self.word),
            **self.extra,
        }


def _variant_key(label: CarterLabel):
    comps = label.components
    longs = sum(1 for c in comps if not c.tilde)
    return (len(comps), -longs, str(label))


class GroupContext:
    """Root system, parabolic representatives and class registry of one Weyl group."""

    def __init__(self, kind: str, n: int):
        self.kind = kind
        self.n = n
        self.name = f"{kind}{n}"
        self.rs = root_system(kind, n)
        self.order = group_order(kind, n)
        self.par = ParabolicData(self.rs)
        self.exceptional = kind in "EFG"
        self.classes: list[WeylClass] = []
        self._key_index: dict[tuple, int] = {}
        self._gram_obj = self.rs.gram.astype(object)
        self._refl_obj = [s.astype(object) for s in self.rs.simple_reflections]
        self._root_gram = (self.rs.roots @ self.rs.gram).astype(object)
        self.reps = sorted(self.par.reps, key=lambda r: (-len(r.J), r.J))
        for rep in self.reps:
            per_factor = [factor_elliptics(f.kind, f.rank) for f in rep.factors]
            for combo in product(*per_factor):
                word: list[int] = []
                for f, (_, w) in zip(rep.factors, combo):
                    word += [f.nodes[i] for i in w]
                variants = set()
                vlists = [
                    factor_variants(f.kind, f.rank, f.tilde, ident)
                    for f, (ident, _) in zip(rep.factors, combo)
                ]
                for choice in product(*vlists):
                    variants.add(CarterLabel(tuple(c for part in choice for c in part)))
                key = (rep.J, tuple(ident for ident, _ in combo))
                cls = WeylClass(
                    index=len(self.classes),
                    rep_J=rep.J,
                    idents=key[1],
                    word=tuple(word),
                    m=n - len(rep.J),
                    K_type=rep.type_name,
                    variants=frozenset(variants),
                )
                self._key_index[key] = cls.index
                self.classes.append(cls)
        self._label_index: dict[CarterLabel, int] = {}
        if kind in "ABCD":
            self._attach_classical()
        else:
            self._resolve_labels()
        self._attach_names()

    # -- basic access

    def __len__(self):
        return len(self.classes)

    def matrix(self, c: int) -> np.ndarray:
        return self.rs.word_to_matrix(self.classes[c].word)

    def element(self, c: int) -> WeylElement:
        return WeylElement.from_word(self.rs, self.classes[c].word)

    def rep(self, J) -> ParabolicRep:
        return self.par.rep(J)

    def fingerprint(self, c: int):
        return fingerprint(self.rs, self.matrix(c))

    # -- identification

    def _generic_fixed_vector(self, m: np.ndarray):
        basis = nullspace(m - np.eye(self.n, dtype=np.int64))
        if not basis:
            return [0] * self.n, 0
        vs = [np.array(v, dtype=object) for v in basis]
        target = np.ones(self.rs.nroots, dtype=bool)
        for v in vs:
            target &= self._root_gram @ v == 0
        for base in (1009, 10007, 100003, 1000003):
            x = sum((base**k) * v for k, v in enumerate(vs))
            if np.array_equal(self._root_gram @ x == 0, target):
                return x, len(vs)
        raise ClassIdentificationError("no generic vector found in the fixed space")

    def reduce(self, m) -> tuple[tuple[int, ...], np.ndarray]:
        """(K', u m u^-1) with u m u^-1 elliptic in W_K' for a standard K'."""
        m = np.asarray(m, dtype=np.int64)
        x, dim = self._generic_fixed_vector(m)
        x = np.array(x, dtype=object)
        u = np.eye(self.n, dtype=np.int64)
        uinv = u.copy()
        while True:
            gx = self._gram_obj @ x
            neg = [i for i in range(self.n) if gx[i] < 0]
            if not neg:
                break
            i = neg[0]
            x = self._refl_obj[i] @ x
            u = self.rs.simple_reflections[i] @ u
            uinv = uinv @ self.rs.simple_reflections[i]
        K = tuple(i for i in range(self.n) if gx[i] == 0)
        if self.n - len(K) != dim:
            raise ClassIdentificationError("fixed space and stabilizer disagree")
        return K, u @ m @ uinv

    def class_of(self, m) -> int:
        if isinstance(m, WeylElement):
            m = m.matrix
        K, m1 = self.reduce(m)
        R = self.par.rep_of[K]
        to, _ = self.par.to_rep[K]
        m2 = to @ m1 @ self.par.from_rep[K]
        rep = self.par.rep(R)
        idents = []
        for f in rep.factors:
            block = m2[np.ix_(f.nodes, f.nodes)]
            if np.any(m2[np.ix_([i for i in range(self.n) if i not in f.nodes], f.nodes)]):
                raise ClassIdentificationError("element does not preserve the factor span")
            idents.append(identify_elliptic(f.kind, f.rank, block))
        key = (R, tuple(idents))
        if key not in self._key_index:
            raise ClassIdentificationError(f"{self.name}: unknown key {key}")
        return self._key_index[key]

    def class_of_word(self, word) -> int:
        return self.class_of(self.rs.word_to_matrix(word))

    # -- parabolic subgroups

    def classes_of_parabolic(self, J) -> list[tuple[tuple[FactorClass, ...], tuple[int, ...]]]:
        """All classes of W_J as (factor classes, ambient word)."""
        factors = components(self.rs.cartan, self.rs.lengths, J)
        out = []
        for combo in product(*[factor_catalog(f.kind, f.rank) for f in factors]):
            out.append((combo, self.embed(factors, [c.word for c in combo])))
        return out

    @staticmethod
    def embed(factors, words) -> tuple[int, ...]:
        word: list[int] = []
        for f, w in zip(factors, words):
            word += [f.nodes[i] for i in w]
        return tuple(word)

    def rho(self, factors, words) -> int:
        return self.class_of_word(self.embed(factors, words))

    def parabolic_edges(self, rep: ParabolicRep) -> list[tuple[int, int, dict]]:
        """Images under inclusion of the elementary elliptic edges of W_J."""
        out = []
        cats = [factor_catalog(f.kind, f.rank) for f in rep.factors]
        ell = [[i for i, c in enumerate(cat) if c.m == 0] for cat in cats]
        for pos, f in enumerate(rep.factors):
            for s, t in factor_edges(f.kind, f.rank):
                others = [ell[q] if q != pos else [None] for q in range(len(rep.factors))]
                for combo in product(*others):
                    src = [cats[q][combo[q]] if q != pos else cats[q][s] for q in range(len(combo))]
                    tgt = [cats[q][combo[q]] if q != pos else cats[q][t] for q in range(len(combo))]
                    a = self.rho(rep.factors, [c.word for c in src])
                    b = self.rho(rep.factors, [c.word for c in tgt])
                    origin = {
                        "J": list(rep.J),
                        "type": rep.type_name,
                        "factor": f.name,
                        "edge": [str(cats[pos][s].label), str(cats[pos][t].label)],
                        "others": [str(c.label) for q, c in enumerate(src) if q != pos],
                    }
                    out.append((a, b, origin))
        return out

    # -- classical labels

    def classical_label_of(self, m):
        m = np.asarray(m, dtype=np.int64)
        if self.kind == "A":
            neg, pos = sp.cycle_type(_a_permutation(m))
            return Partition.of(pos)
        img = _e_matrix(self.kind, self.n, m)
        neg, pos = sp.cycle_type(img)
        if self.kind in "BC":
            return bc.label_from_cycles(self.n, neg, pos)
        r = Partition.of([2 * k for k in neg])
        p = doubled(Partition.of(pos))
        tag = sp.split_tag(img) if cd.is_split_pair(r, p) else None
        return cd.DClassLabel(self.n, r, p, tag)

    def _attach_classical(self):
        seen = {}
        for c in self.classes:
            lab = self.classical_label_of(self.matrix(c.index))
            if lab in seen:
                raise AssertionError(f"{self.name}: classes {seen[lab]} and {c.index} share {lab}")
            seen[lab] = c.index
            c.classical = lab
        self._classical_index = seen

    def index_of_classical(self, label) -> int:
        return self._classical_index[label]

    # -- exceptional labels

    def b_value(self, J) -> int:
        rs = self.rs
        outside = [i for i in range(self.n) if i not in J]
        mask = rs.positive & np.all(rs.roots[:, outside] == 0, axis=1)
        s = rs.pairing[mask].sum(axis=0)
        return int(np.sum((s == 0) | (s == 1))) // 2

    def referenced_labels(self) -> list[CarterLabel]:
        t = self.name
        labs = [e.carter for e in class_table(t)]
        for a, b in elliptic_edge_table(t):
            labs += [a, b]
        labs += [e.carter for e in ws_table(t)]
        if t in ("E7", "E8"):
            labs += [r["label"] for r in primed_provenance(t)]
        out = []
        for lab in labs:
            if lab not in out:
                out.append(lab)
        return out

    def _resolve_labels(self):
        t = self.name
        by_variant: dict[CarterLabel, list[int]] = {}
        for c in self.classes:
            for v in c.variants:
                by_variant.setdefault(v, []).append(c.index)
        prov = {}
        if t in ("E7", "E8"):
            for r in primed_provenance(t):
                prov[r["label"].unprimed()] = (r["label"].prime, r["from"])
        table_b = {e.carter: e.irr.b for e in class_table(t)}
        other = {"′": "″", "″": "′"}
        self.resolution_notes: list[str] = []
        for lab in self.referenced_labels():
            cands = by_variant.get(lab.unprimed(), [])
            if not lab.prime:
                if len(cands) != 1:
                    raise ClassIdentificationError(
                        f"{t}: label {lab} matches {len(cands)} classes"
                    )
                self._label_index[lab] = cands[0]
                continue
            if len(cands) != 2:
                raise ClassIdentificationError(f"{t}: primed label {lab} matches {len(cands)} classes")
            body = lab.unprimed()
            if body in prov:
                p, origin = prov[body]
                hit = [c for c in cands if self.classes[c].K_type == origin]
                if len(hit) != 1:
                    raise ClassIdentificationError(f"{t}: origin {origin} does not single out {lab}")
                chosen = hit[0] if lab.prime == p else next(c for c in cands if c != hit[0])
                self.resolution_notes.append(f"{lab}: by origin {origin}")
            else:
                b = table_b.get(lab)
                if b is None:
                    b = table_b.get(body.with_prime(other[lab.prime]))
                    match = [c for c in cands if self.b_value(self.classes[c].rep_J) != b]
                else:
                    match = [c for c in cands if self.b_value(self.classes[c].rep_J) == b]
                if len(match) != 1:
                    raise ClassIdentificationError(f"{t}: b-value does not single out {lab}")
                chosen = match[0]
                self.resolution_notes.append(f"{lab}: by b-value")
            self._label_index[lab] = chosen
        owners: dict[int, CarterLabel] = {}
        for lab, c in self._label_index.items():
            if c in owners and owners[c] != lab:
                raise ClassIdentificationError(f"{t}: {owners[c]} and {lab} name the same class")
            owners[c] = lab
        for c, lab in owners.items():
            self.classes[c].label = lab

    def index_of_label(self, label) -> int:
        if isinstance(label, str):
            label = resolve_label(self.name, label)
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"{self.name}: no class named {label}") from None

    def _attach_names(self):
        for c in self.classes:
            if c.classical is not None:
                c.name = str(c.classical)
            elif c.label is not None:
                c.name = str(c.label)
            else:
                c.name = str(min(c.variants, key=_variant_key))
        counts: dict[str, list[int]] = {}
        for c in self.classes:
            counts.setdefault(c.name, []).append(c.index)
        for name, idx in counts.items():
            if len(idx) > 1:
                for k, i in enumerate(idx):
                    self.classes[i].name = f"{name}#{k + 1}"

    def by_name(self, name: str) -> int:
        for c in self.classes:
            if c.name == name:
                return c.index
        return self.index_of_label(name)

    # -- CL data

    def cl_entries(self) -> list[tuple[object, int]]:
        """(CL label or table entry, class index) for every member of CL(W)."""
        if self.exceptional:
            return [(e, self.index_of_label(e.carter)) for e in class_table(self.name)]
        out = []
        for c in self.classes:
            lab = c.classical
            if self.kind == "A":
                ok = True
            elif self.kind in "BC":
                ok = bc.in_CL(lab)
            else:
                ok = cd.in_CL_d(lab)
            if ok:
                out.append((lab, c.index))
        return out

    def cl_classes(self) -> set[int]:
        return {i for _, i in self.cl_entries()}

    def cl_dist_classes(self) -> set[int]:
        if self.exceptional:
            return {
                self.index_of_label(e.carter) for e in class_table(self.name) if e.distinguished
            }
        return {i for i in self.cl_classes() if self.classes[i].m == 0}

    def table_edges(self) -> list[tuple[int, int]]:
        if not self.exceptional:
            raise ValueError("table edges exist for exceptional types only")
        return [
            (self.index_of_label(a), self.index_of_label(b))
            for a, b in elliptic_edge_table(self.name)
        ]

    # -- enumeration for small groups

    def class_elements(self, c: int) -> list[np.ndarray]:
        if self.order > ENUMERATION_LIMIT:
            raise ValueError(f"{self.name}: group too large for class enumeration")
        start = self.matrix(c)
        seen = {start.tobytes(): start}
        queue = deque([start])
        gens = self.rs.simple_reflections
        while queue:
            m = queue.popleft()
            for s in gens:
                x = s @ m @ s
                k = x.tobytes()
                if k not in seen:
                    seen[k] = x
                    queue.append(x)
        return list(seen.values())

    def class_size(self, c: int) -> int | None:
        if self.kind in "BC":
            return bc.class_size(self.classes[c].classical)
        if self.kind == "D":
            return cd.class_size_d(self.classes[c].classical)
        if self.order > ENUMERATION_LIMIT:
            return None
        return len(self.class_elements(c))

    def min_length_in_class(self, c: int) -> int:
        return min(self.rs.length(m) for m in self.class_elements(c))

    # -- export

    def to_json(self) -> dict:
        out = []
        for c in self.classes:
            rec = c.to_json()
            rec["fingerprint"] = self.fingerprint(c.index).to_json()
            rec["class_size"] = self.class_size(c.index)
            out.append(rec)
        return {
            "type": self.name,
            "rank": self.n,
            "order": self.order,
            "roots": int(self.rs.nroots),
            "parabolic_reps": [r.to_json() for r in self.reps],
            "classes": out,
        }


@lru_cache(maxsize=None)
def build(kind: str, n: int) -> GroupContext:
    """Context for the irreducible type kind_n (type may also be given as 'E8', n ignored)."""
    return GroupContext(kind, n)


def parse_type(text: str, rank: int | None = None) -> tuple[str, int]:
    text = text.strip().upper()
    kind = text[0]
    if kind not in "ABCDEFG":
        raise ValueError(f"unsupported type {text!r}")
    n = int(text[1:]) if len(text) > 1 else rank
    if n is None:
        raise ValueError("rank is required")
    if rank is not None and n != rank:
        raise ValueError(f"type {text} and rank {rank} disagree")
    return kind, n
