"""Representatives of the elliptic classes of G2, F4, E6, E7, E8.

Each class is realized in one of three ways: a power of the Coxeter element,
a product of Coxeter-type words over a set of roots whose Cartan matrix is
that of the Carter diagram, or (for the remaining E_n(a_k)) a seeded random
walk stopped at the right characteristic polynomial.  Every realization is
checked against the stored characteristic polynomial.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..exceptional_tables.labels import CarterLabel, Component
from . import signed_perm as sp
from .elements import cyclo, length_cycle_types
from .elliptic_data import ELLIPTIC_CHARPOLYS, parse_cyclotomic
from .linalg import cyclotomic
from .rootsystem import root_system

WALK_SEED = 20240611
WALK_STEPS = 400_000
MAX_TEMPLATE_TRIES = 500


def component_word(comp: Component) -> tuple[int, ...]:
    """Word in the standard generators of the component's own Weyl group."""
    k = comp.rank
    if comp.a == 0:
        return tuple(range(k))
    if comp.kind in "BCD":
        j = comp.a
        return sp.reduced_word(comp.kind, k, sp.from_cycles((k - j - 1, j + 1), ()))
    if comp.kind == "E":
        return elliptic_words("E", k)[str(comp)]
    raise ValueError(f"no word for component {comp}")


def _shape(rs, comp: Component):
    sub = root_system(comp.kind, comp.rank)
    top = max(sub.lengths)
    short = min(rs.lengths)
    lens = [rs.long_sq if (x == top and not comp.tilde) else short for x in sub.lengths]
    return sub.cartan, lens


def realize_roots(rs, comps):
    """Yield root-index lists, component by component in standard node order,
    whose pairings reproduce the block-diagonal Cartan matrix of comps."""
    blocks = [_shape(rs, c) for c in comps]
    total = sum(len(lens) for _, lens in blocks)
    cartan = np.zeros((total, total), dtype=np.int64)
    lens: list[int] = []
    at = 0
    for a, ls in blocks:
        k = len(ls)
        cartan[at:at + k, at:at + k] = a
        lens += ls
        at += k

    chosen: list[int] = []

    def rec():
        t = len(chosen)
        if t == total:
            yield list(chosen)
            return
        mask = rs.root_sq == lens[t]
        for s, idx in enumerate(chosen):
            mask &= rs.pairing[idx, :] == cartan[s, t]
        cands = np.nonzero(mask)[0]
        if t == 0:
            # all roots of one length are conjugate
            cands = cands[:1]
        for c in cands:
            chosen.append(int(c))
            yield from rec()
            chosen.pop()

    yield from rec()


def element_from_roots(rs, comps, roots) -> np.ndarray:
    m = np.eye(rs.rank, dtype=np.int64)
    at = 0
    for comp in comps:
        k = comp.rank
        refl = [rs.reflection(r) for r in roots[at:at + k]]
        for i in component_word(comp):
            m = m @ refl[i]
        at += k
    return m


def _whole_type(label: CarterLabel, kind: str, n: int) -> bool:
    c = label.components
    return len(c) == 1 and c[0].kind == kind and c[0].rank == n


def _poly(factors) -> tuple[int, ...]:
    p = np.array([1], dtype=np.int64)
    for d, mult in factors:
        for _ in range(mult):
            p = np.polymul(p, np.array(cyclotomic(d), dtype=np.int64))
    return tuple(int(x) for x in p)


@lru_cache(maxsize=None)
def elliptic_words(kind: str, n: int) -> dict[str, tuple[int, ...]]:
    """Carter label -> reduced word of a representative, in table order."""
    name = f"{kind}{n}"
    rs = root_system(kind, n)
    table = ELLIPTIC_CHARPOLYS[name]
    want = {lab: parse_cyclotomic(s) for lab, s in table}
    labels = {lab: CarterLabel.parse(lab) for lab, _ in table}
    found: dict[str, np.ndarray] = {}

    # powers of the Coxeter element
    c = rs.word_to_matrix(range(n))
    p = np.eye(n, dtype=np.int64)
    ident = p.copy()
    while True:
        p = p @ c
        if np.array_equal(p, ident):
            break
        cp = cyclo(p)
        for lab in want:
            if lab not in found and _whole_type(labels[lab], kind, n) and want[lab] == cp:
                found[lab] = p.copy()

    # root subsystems shaped like the Carter diagram
    for lab, cl in labels.items():
        if lab in found or (_whole_type(cl, kind, n) and cl.components[0].a):
            continue
        for tries, roots in enumerate(realize_roots(rs, cl.components)):
            if tries >= MAX_TEMPLATE_TRIES:
                break
            m = element_from_roots(rs, cl.components, roots)
            if cyclo(m) == want[lab]:
                found[lab] = m
                break

    # seeded random walk for what is left
    left = {lab for lab in want if lab not in found}
    if left:
        polys = {_poly(want[lab]): lab for lab in left}
        rng = np.random.default_rng(WALK_SEED)
        m = ident.copy()
        gens = rs.simple_reflections
        for i in rng.integers(0, n, size=WALK_STEPS):
            m = m @ gens[i]
            key = tuple(int(x) for x in np.rint(np.poly(m.astype(float))))
            lab = polys.get(key)
            if lab is not None and lab not in found and cyclo(m) == want[lab]:
                found[lab] = m.copy()
                if len(found) == len(want):
                    break

    missing = [lab for lab in want if lab not in found]
    if missing:
        raise AssertionError(f"{name}: no representative found for {missing}")
    out = {}
    seen = set()
    for lab, _ in table:
        m = found[lab]
        if cyclo(m) != want[lab]:
            raise AssertionError(f"{name}: {lab} realized with the wrong polynomial")
        sig = (cyclo(m), length_cycle_types(rs, rs.root_permutation(m)))
        if sig in seen:
            raise AssertionError(f"{name}: {lab} not separated from another elliptic class")
        seen.add(sig)
        out[lab] = rs.reduced_word(m)
    return out


@lru_cache(maxsize=None)
def elliptic_lookup(kind: str, n: int) -> dict[tuple, str]:
    """(cyclotomic factors, root cycle type) -> Carter label."""
    rs = root_system(kind, n)
    out = {}
    for lab, word in elliptic_words(kind, n).items():
        m = rs.word_to_matrix(word)
        out[(cyclo(m), length_cycle_types(rs, rs.root_permutation(m)))] = lab
    return out
