"""Elliptic classes of the exceptional Weyl groups, keyed by Carter label, with
their characteristic polynomials on the reflection representation written as
products of cyclotomic polynomials (P2^2.P6 means Phi_2^2 Phi_6)."""

from __future__ import annotations

import re

ELLIPTIC_CHARPOLYS: dict[str, list[tuple[str, str]]] = {
    "G2": [("G2", "P6"), ("A2", "P3"), ("A1+Ã1", "P2^2")],
    "F4": [
        ("F4", "P12"),
        ("B4", "P8"),
        ("F4(a1)", "P6^2"),
        ("D4", "P2^2.P6"),
        ("C3+A1", "P2^2.P6"),
        ("D4(a1)", "P4^2"),
        ("A3+Ã1", "P2^2.P4"),
        ("Ã2+A2", "P3^2"),
        ("4A1", "P2^4"),
    ],
    "E6": [
        ("E6", "P3.P12"),
        ("E6(a1)", "P9"),
        ("E6(a2)", "P3.P6^2"),
        ("A5+A1", "P2^2.P3.P6"),
        ("3A2", "P3^3"),
    ],
    "E7": [
        ("E7", "P2.P18"),
        ("E7(a1)", "P2.P14"),
        ("E7(a2)", "P2.P6.P12"),
        ("E7(a3)", "P2.P6.P10"),
        ("E7(a4)", "P2.P6^3"),
        ("A7", "P2.P4.P8"),
        ("D6+A1", "P2^3.P10"),
        ("D6(a2)+A1", "P2^3.P6^2"),
        ("D4+3A1", "P2^5.P6"),
        ("A5+A2", "P2.P3^2.P6"),
        ("2A3+A1", "P2^3.P4^2"),
        ("7A1", "P2^7"),
    ],
    "E8": [
        ("E8", "P30"),
        ("E8(a1)", "P24"),
        ("E8(a2)", "P20"),
        ("E8(a3)", "P12^2"),
        ("E8(a4)", "P6.P18"),
        ("E8(a5)", "P15"),
        ("E8(a6)", "P10^2"),
        ("E8(a7)", "P6^2.P12"),
        ("E8(a8)", "P6^4"),
        ("D8", "P2^2.P14"),
        ("D8(a1)", "P4^2.P12"),
        ("D8(a2)", "P2^2.P6.P10"),
        ("D8(a3)", "P8^2"),
        ("A8", "P3.P9"),
        ("A7+A1", "P2^2.P4.P8"),
        ("E7+A1", "P2^2.P18"),
        ("E7(a2)+A1", "P2^2.P6.P12"),
        ("E7(a4)+A1", "P2^2.P6^3"),
        ("E6+A2", "P3^2.P12"),
        ("E6(a2)+A2", "P3^2.P6^2"),
        ("D6+2A1", "P2^4.P10"),
        ("D5(a1)+A3", "P2^2.P4^2.P6"),
        ("2D4", "P2^4.P6^2"),
        ("2D4(a1)", "P4^4"),
        ("D4+4A1", "P2^6.P6"),
        ("A5+A2+A1", "P2^2.P3^2.P6"),
        ("2A4", "P5^2"),
        ("2A3+2A1", "P2^4.P4^2"),
        ("4A2", "P3^4"),
        ("8A1", "P2^8"),
    ],
}

CLASS_COUNTS = {"G2": 6, "F4": 25, "E6": 25, "E7": 60, "E8": 112}


def parse_cyclotomic(s: str) -> tuple[tuple[int, int], ...]:
    out = []
    for piece in s.split("."):
        m = re.fullmatch(r"P(\d+)(?:\^(\d+))?", piece)
        if not m:
            raise ValueError(f"bad cyclotomic product {s!r}")
        out.append((int(m.group(1)), int(m.group(2) or 1)))
    return tuple(sorted(out))
