"""Static tables for the exceptional types, stored line by line as printed.

Each class-table line is a list of (Carter label as printed, degree, b).
"""

from __future__ import annotations

CLASS_LINES: dict[str, list[list[tuple[str, int, int]]]] = {
    "G2": [
        [("G2", 1, 0), ("A2", 2, 1), ("A1+Ã1", 2, 2)],
        [("Ã1", 1, 3)],
        [("A1", 1, 3)],
        [("A0", 1, 6)],
    ],
    "F4": [
        [("F4", 1, 0), ("B4", 4, 1), ("F4(a1)", 9, 2), ("D4(a1)", 12, 4)],
        [("A3+Ã1", 16, 5), ("Ã2+Ã2", 6, 6)],
        [("B3", 8, 3)],
        [("C3", 8, 3)],
        [("A3", 9, 6)],
        [("B2+A1", 9, 6)],
        [("A2+Ã1", 4, 7)],
        [("Ã2+A1", 4, 7)],
        [("B2", 4, 8)],
        [("Ã2", 8, 9)],
        [("A2", 8, 9)],
        [("A1+Ã1", 9, 10)],
        [("2A1", 4, 13)],
        [("A1", 2, 16)],
        [("Ã1", 2, 16)],
        [("A0", 1, 24)],
    ],
    "E6": [
        [("E6", 1, 0), ("E6(a1)", 6, 1), ("E6(a2)", 30, 3)],
        [("D5", 20, 2), ("D5(a1)", 64, 4)],
        [("A5", 15, 4)],
        [("A4+A1", 60, 5)],
        [("2A2+A1", 10, 9)],
        [("D4", 24, 6), ("D4(a1)", 80, 7)],
        [("A4", 81, 6)],
        [("A3+A1", 60, 8)],
        [("A2+2A1", 60, 11)],
        [("2A2", 24, 12)],
        [("A3", 81, 10)],
        [("A2+A1", 64, 13)],
        [("3A1", 15, 16)],
        [("A2", 30, 15)],
        [("2A1", 20, 20)],
        [("A1", 6, 25)],
        [("A0", 1, 36)],
    ],
    "E7": [
        [("E7", 1, 0), ("E7(a1)", 7, 1), ("E7(a2)", 27, 2)],
        [("E7(a3)", 56, 3), ("A7", 189, 5), ("E7(a4)", 315, 7)],
        [("E6", 21, 3), ("E6(a1)", 120, 4), ("E6(a2)", 405, 8)],
        [("D6", 35, 4), ("D6(a1)", 210, 6), ("D6(a2)", 280, 8), ("2A3", 378, 14)],
        [("A6", 105, 6)],
        [("D5+A1", 168, 6), ("D5(a1)+A1", 378, 9)],
        [("(A5+A1)′", 70, 9)],
        [("A4+A2", 210, 10)],
        [("A3+A2+A1", 210, 13)],
        [("D5", 189, 7), ("D5(a1)", 420, 10)],
        [("A5″", 216, 9)],
        [("A4+A1", 512, 11)],
        [("A5′", 105, 12)],
        [("D4+A1", 84, 12), ("D4(a1)+A1", 405, 15)],
        [("A3+A2", 84, 15)],
        [("(A3+2A1)′", 216, 16)],
        [("2A2+A1", 70, 18)],
        [("A2+3A1", 105, 21)],
        [("A4", 420, 13)],
        [("D4", 105, 15), ("D4(a1)", 315, 16)],
        [("(A3+A1)″", 280, 17)],
        [("(A3+A1)′", 189, 20)],
        [("2A2", 168, 21)],
        [("A2+2A1", 189, 22)],
        [("(4A1)′", 15, 28)],
        [("A3", 210, 21)],
        [("A2+A1", 120, 25)],
        [("(3A1)″", 35, 31)],
        [("(3A1)′", 21, 36)],
        [("A2", 56, 30)],
        [("2A1", 27, 37)],
        [("A1", 7, 46)],
        [("A0", 1, 63)],
    ],
    "E8": [
        [("E8", 1, 0), ("E8(a1)", 8, 1), ("E8(a2)", 35, 2), ("E8(a4)", 112, 3)],
        [("E8(a5)", 210, 4), ("D8", 560, 5), ("E8(a3)", 700, 6), ("E8(a7)", 1400, 7)],
        [("E8(a6)", 1400, 8), ("D8(a2)", 3240, 9), ("A8", 2240, 10)],
        [("D8(a3)", 1400, 11), ("A7+A1", 4536, 13), ("E8(a8)", 4480, 16)],
        [("E7", 84, 4), ("E7(a1)", 567, 6), ("E7(a2)", 1344, 8), ("E7(a3)", 2268, 10)],
        [("E7(a4)", 7168, 17), ("A7′", 6075, 14)],
        [("A7″", 175, 12)],
        [("A6+A1", 2835, 14)],
        [("D5+A2", 840, 14), ("D5(a1)+A2", 1344, 19)],
        [("D7", 400, 7), ("D7(a1)", 1050, 10), ("D7(a2)", 4200, 12), ("D4+A3", 4200, 21)],
        [("E6+A1", 448, 9), ("E6(a1)+A1", 4096, 11), ("E6(a2)+A1", 3150, 18)],
        [("A4+A3", 420, 20)],
        [("A4+A2+A1", 2835, 22)],
        [("E6", 525, 12), ("E6(a1)", 2800, 13), ("E6(a2)", 5600, 21)],
        [("A6", 4200, 15)],
        [("D6", 972, 12), ("D6(a1)", 5600, 15), ("D6(a2)", 4200, 18), ("(2A3)′", 3240, 31)],
        [("D5+A1", 3200, 16), ("D5(a1)+A1", 6075, 22)],
        [("(A5+A1)″", 2016, 19)],
        [("A4+A2", 4536, 23)],
        [("A4+2A1", 4200, 24)],
        [("D4+A2", 168, 24), ("D4(a1)+A2", 2240, 28)],
        [("(2A3)″", 840, 26)],
        [("A3+A2+A1", 1400, 29)],
        [("2A2+2A1", 175, 36)],
        [("A5", 3200, 22)],
        [("D5", 2100, 20), ("D5(a1)", 2800, 25)],
        [("A4+A1", 4096, 26)],
        [("D4+A1", 700, 28), ("D4(a1)+A1", 1400, 32)],
        [("A3+A2", 972, 32)],
        [("(A3+2A1)″", 1050, 34)],
        [("2A2+A1", 448, 39)],
        [("A2+3A1", 400, 43)],
        [("D4", 525, 36), ("D4(a1)", 1400, 37)],
        [("A4", 2268, 30)],
        [("A3+A1", 1344, 38)],
        [("2A2", 700, 42)],
        [("A2+2A1", 560, 47)],
        [("(4A1)″", 50, 56)],
        [("A3", 567, 46)],
        [("A2+A1", 210, 52)],
        [("3A1", 84, 64)],
        [("A2", 112, 63)],
        [("2A1", 35, 74)],
        [("A1", 8, 91)],
        [("A0", 1, 120)],
    ],
}

DISTINGUISHED_PREFIX = {"G2": 3, "F4": 6, "E6": 3, "E7": 6, "E8": 14}

# irr-level notes: (degree, subscript as printed, characteristic r)
PER_R_NOTES: dict[str, list[tuple[int, int, int]]] = {
    "G2": [(2, 2, 3)],
    "F4": [(16, 5, 2), (6, 6, 2)],
    "E6": [],
    "E7": [],
    "E8": [(3240, 9, 2), (4536, 11, 2), (1400, 11, 3)],
}

ELLIPTIC_EDGES: dict[str, list[tuple[str, str]]] = {
    "G2": [],
    "F4": [("D4", "B3"), ("C3+A1", "C3"), ("4A1", "3A1")],
    "E6": [("A5+A1", "A5"), ("3A2", "2A2+A1")],
    "E7": [
        ("D6+A1", "D6"),
        ("D6(a2)+A1", "D6(a2)"),
        ("D4+3A1", "D4+2A1"),
        ("A5+A2", "(A5+A1)′"),
        ("2A3+A1", "A3+A2+A1"),
        ("7A1", "6A1"),
    ],
    "E8": [
        ("E7+A1", "E7"),
        ("E7(a2)+A1", "E7(a2)"),
        ("E7(a4)+A1", "E7(a4)"),
        ("E6+A2", "E6+A1"),
        ("E6(a2)+A2", "E6(a2)+A1"),
        ("D8(a1)", "D7"),
        ("D6+2A1", "D6+A1"),
        ("D5(a1)+A3", "D5(a1)+A2"),
        ("2D4", "D4+A3"),
        ("2D4(a1)", "D4(a1)+A3"),
        ("D4+4A1", "D4+3A1"),
        ("A5+A2+A1", "A5+A2"),
        ("A5+A2+A1", "A5+2A1"),
        ("2A4", "A4+A3"),
        ("2A3+2A2", "A3+A2+2A1"),
        ("2A3+2A2", "2A3+A1"),
        ("4A2", "3A2+A1"),
        ("8A1", "7A1"),
    ],
}

# (class, W_s type); the trailing NONPARABOLIC[type] entries are not of the form W_J
WS_TABLE: dict[str, list[tuple[str, str]]] = {
    "G2": [("G2", "A0"), ("A2", "A1"), ("A1+Ã1", "2A1")],
    "F4": [
        ("F4", "A0"),
        ("B4", "A1"),
        ("F4(a1)", "2A1"),
        ("D4(a1)", "A2+A1"),
        ("A3+Ã1", "B2+A1"),
        ("Ã2+Ã2", "A2+A2"),
    ],
    "E6": [("E6", "A0"), ("E6(a1)", "A1"), ("E6(a2)", "3A1")],
    "E7": [
        ("E7", "A0"),
        ("E7(a1)", "A1"),
        ("E7(a2)", "2A1"),
        ("E7(a3)", "3A1"),
        ("A7", "A2+2A1"),
        ("E7(a4)", "2A2+A1"),
    ],
    "E8": [
        ("E8", "A0"),
        ("E8(a1)", "A1"),
        ("E8(a2)", "2A1"),
        ("E8(a4)", "3A1"),
        ("E8(a5)", "4A1"),
        ("D8", "A2+2A1"),
        ("E8(a3)", "A2+3A1"),
        ("E8(a7)", "2A2+A1"),
        ("E8(a6)", "2A2+2A1"),
        ("A8", "A3+A2+A1"),
        ("E8(a8)", "A4+A3"),
        ("D8(a2)", "A3+3A1"),
        ("D8(a3)", "A3+A2+2A1"),
        ("A7+A1", "2A3+A1"),
    ],
}
NONPARABOLIC = {"G2": 1, "F4": 2, "E6": 0, "E7": 0, "E8": 3}

# (primed label, type of the W_J it comes from)
PRIMED_PROVENANCE: dict[str, list[tuple[str, str]]] = {
    "E7": [("(4A1)″", "D4"), ("(A5+A1)″", "E6")],
    "E8": [
        ("A7′", "E7"),
        ("(2A3)′", "D6"),
        ("(A5+A1)′", "E6"),
        ("(A3+2A1)′", "D5"),
        ("(4A1)′", "D4"),
    ],
}

ERRATA = [
    "Line containing 378_14: replace [A3+A2] by [2A3].",
    "Line containing 3200_22: replace [(A5+A1)′] by [(A5+A1)′,A5].",
]

# printed label -> label actually meant, where the printed one names no class of the group
LABEL_CORRECTIONS: dict[str, dict[str, str]] = {
    "F4": {"Ã2+Ã2": "Ã2+A2"},
    "E8": {"2A3+2A2": "2A3+2A1"},
}

# alternative names recorded with a stored label
LABEL_ALIASES: dict[str, dict[str, list[str]]] = {
    "E8": {"D4+A3": ["D6(a2)+A1"]},
}
