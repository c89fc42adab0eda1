"""Signed permutations: representatives for classical labels and reduced words
in the standard generators of A_k, B_k, C_k, D_k.

A signed permutation is a tuple img with img[i] = +-(j+1) when e_i -> +-e_j.
"""

from __future__ import annotations

import numpy as np

from .rootsystem import classical_simple_roots_e


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def to_matrix(img) -> np.ndarray:
    n = len(img)
    m = np.zeros((n, n), dtype=np.int64)
    for i, t in enumerate(img):
        m[abs(t) - 1, i] = 1 if t > 0 else -1
    return m


def from_matrix(m: np.ndarray) -> tuple[int, ...]:
    out = []
    for i in range(m.shape[1]):
        col = m[:, i]
        nz = np.nonzero(col)[0]
        if len(nz) != 1 or abs(col[nz[0]]) != 1:
            raise ValueError("matrix is not a signed permutation")
        out.append(int(nz[0] + 1) * int(col[nz[0]]))
    return tuple(out)


def compose(a, b) -> tuple[int, ...]:
    """a after b."""
    out = []
    for t in b:
        s = a[abs(t) - 1]
        out.append(s if t > 0 else -s)
    return tuple(out)


def inverse(a) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, t in enumerate(a):
        out[abs(t) - 1] = (i + 1) if t > 0 else -(i + 1)
    return tuple(out)


def signed_cycles(img) -> list[tuple[int, int, list[int]]]:
    """(length, sign, coordinates) for every cycle; sign -1 marks a negative cycle."""
    n = len(img)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        coords, sign, i = [], 1, start
        while not seen[i]:
            seen[i] = True
            coords.append(i)
            t = img[i]
            sign *= 1 if t > 0 else -1
            i = abs(t) - 1
        out.append((len(coords), sign, coords))
    return out


def cycle_type(img) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(negative cycle lengths, positive cycle lengths), each decreasing."""
    cyc = signed_cycles(img)
    neg = sorted((k for k, s, _ in cyc if s < 0), reverse=True)
    pos = sorted((k for k, s, _ in cyc if s > 0), reverse=True)
    return tuple(neg), tuple(pos)


def from_cycles(negative, positive) -> tuple[int, ...]:
    """Negative cycles first, then positive ones, on consecutive coordinates."""
    img = []
    a = 0
    for k, sign in [(k, -1) for k in negative] + [(k, 1) for k in positive]:
        for j in range(k - 1):
            img.append(a + j + 2)
        img.append(sign * (a + 1))
        a += k
    return tuple(img)


def flip_last(img) -> tuple[int, ...]:
    """Conjugate by the sign change of the last coordinate."""
    n = len(img)
    f = tuple(range(1, n)) + (-n,)
    return compose(f, compose(img, f))


def sign_changes(img) -> int:
    return sum(1 for t in img if t < 0)


def split_tag(img) -> str:
    """Tag of a W(D_n) element whose cycles are all positive of even length.

    Builds g in W(B_n) with g c g^-1 = img for the tag I representative c and
    reads off the parity of g.
    """
    neg, pos = cycle_type(img)
    if neg or any(k % 2 for k in pos):
        raise ValueError("element is not in a split class")
    canon = from_cycles((), pos)
    n = len(img)
    g = [0] * n
    pool = {}
    for k, _, coords in signed_cycles(img):
        pool.setdefault(k, []).append(coords[0])
    for k, _, coords in signed_cycles(canon):
        b = pool[k].pop(0)
        cur = b + 1
        for a in coords:
            g[a] = cur
            nxt = img[abs(cur) - 1]
            cur = nxt if cur > 0 else -nxt
    return "I" if sign_changes(g) % 2 == 0 else "II"


def _is_positive(v) -> bool:
    for x in v:
        if x:
            return x > 0
    raise ValueError("zero vector")


def reduced_word(kind: str, k: int, img) -> tuple[int, ...]:
    """Word (i1, ..., il) in the standard generators with img = s_i1 ... s_il."""
    simple = classical_simple_roots_e(kind, k)
    gens = [_simple_reflection_e(simple[:, i]) for i in range(k)]
    m = to_matrix(img).copy()
    rec = []
    while True:
        for i in range(k):
            if not _is_positive(m @ simple[:, i]):
                m = m @ gens[i]
                rec.append(i)
                break
        else:
            break
    if not np.array_equal(m, np.eye(len(img), dtype=np.int64)):
        raise AssertionError("descent did not reach the identity")
    return tuple(reversed(rec))


def _simple_reflection_e(alpha) -> np.ndarray:
    a = np.asarray(alpha, dtype=np.int64)
    sq = int(a @ a)
    return np.eye(len(a), dtype=np.int64) - (2 * np.outer(a, a)) // sq


def coxeter_permutation(k: int) -> tuple[int, ...]:
    """(k+1)-cycle in S_{k+1}."""
    return from_cycles((), (k + 1,))


def perm_from_partition(lam) -> tuple[int, ...]:
    return from_cycles((), tuple(lam))
