"""Exact integer linear algebra for small matrices."""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def charpoly(m) -> tuple[int, ...]:
    """Characteristic polynomial det(xI - M), coefficients from x^n down to x^0.

    Faddeev-LeVerrier over Python integers; every division is exact.
    """
    a = [[int(x) for x in row] for row in np.asarray(m)]
    n = len(a)
    coeffs = [1]
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        prev = mk
        mk = [[sum(a[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            mk[i][i] += coeffs[-1]
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("inexact division in charpoly")
        coeffs.append(-tr // k)
    return tuple(coeffs)


def rank(m) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in np.asarray(m)]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == rows:
            break
    return r


def poly_divmod(num, den):
    """Integer polynomial division, den monic; coefficients high to low."""
    num = list(num)
    out = []
    while len(num) >= len(den):
        q = num[0]
        out.append(q)
        for i, d in enumerate(den):
            num[i] -= q * d
        num.pop(0)
    return out, num


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple[int, ...]:
    poly = [1] + [0] * (d - 1) + [-1]
    for e in range(1, d):
        if d % e == 0:
            poly, rem = poly_divmod(poly, cyclotomic(e))
            assert not any(rem)
    return tuple(poly)


def cyclotomic_factors(poly, max_d: int = 60) -> tuple[tuple[int, int], ...]:
    """Write a product of cyclotomic polynomials as ((d, multiplicity), ...)."""
    poly = list(poly)
    out = []
    for d in range(max_d, 0, -1):
        phi = cyclotomic(d)
        mult = 0
        while len(poly) >= len(phi):
            q, rem = poly_divmod(poly, phi)
            if any(rem):
                break
            poly = q
            mult += 1
        if mult:
            out.append((d, mult))
    if poly != [1]:
        raise ValueError("polynomial is not a product of cyclotomic factors")
    return tuple(sorted(out))


def cyclotomic_name(factors) -> str:
    """Compact text such as 'P2^2.P6'."""
    if not factors:
        return "1"
    return ".".join(f"P{d}" + (f"^{m}" if m > 1 else "") for d, m in factors)
