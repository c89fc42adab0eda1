from pathlib import Path

import pytest

from weylstrata.exceptional_tables import (
    TABLE_CHECKSUM,
    TYPES,
    CarterLabel,
    checksum,
    class_table,
    elliptic_edge_table,
    per_r_notes,
    primed_provenance,
    render_class_table,
    render_ws_table,
    ws_table,
)

GOLDEN = Path(__file__).parent / "golden"
PREFIX = {"G2": 3, "F4": 6, "E6": 3, "E7": 6, "E8": 14}
SIZES = {"G2": 6, "F4": 20, "E6": 21, "E7": 46, "E8": 75}


@pytest.mark.parametrize("t", TYPES)
def test_render_matches_golden(t):
    assert render_class_table(t) == (GOLDEN / f"table_{t}.txt").read_text(encoding="utf-8")


@pytest.mark.parametrize("t", TYPES)
def test_sizes_and_prefix(t):
    entries = class_table(t)
    assert len(entries) == SIZES[t]
    flags = [e.distinguished for e in entries]
    assert flags == [True] * PREFIX[t] + [False] * (SIZES[t] - PREFIX[t])


def test_known_entries():
    g2 = class_table("G2")
    assert (str(g2[0].carter), str(g2[0].irr)) == ("G2", "1_0")
    assert (str(g2[-1].carter), str(g2[-1].irr)) == ("A0", "1_6")
    f4 = {str(e.carter): e for e in class_table("F4")}
    assert str(f4["D4(a1)"].irr) == "12_4" and f4["D4(a1)"].distinguished
    e8 = {str(e.carter): e for e in class_table("E8")}
    assert str(e8["D8"].irr) == "560_5" and e8["D8"].distinguished


def test_per_r_notes():
    assert per_r_notes("G2") == [{"irr": "2_2", "r": 3, "in_table": True}]
    assert {n["irr"]: n["r"] for n in per_r_notes("F4")} == {"16_5": 2, "6_6": 2}
    e8 = {n["irr"]: n for n in per_r_notes("E8")}
    assert e8["1400_11"]["r"] == 3
    # printed subscript with no matching table entry is kept and flagged
    assert not e8["4536_11"]["in_table"]


def test_edges():
    assert [(str(a), str(b)) for a, b in elliptic_edge_table("F4")] == [
        ("D4", "B3"),
        ("C3+A1", "C3"),
        ("4A1", "3A1"),
    ]
    assert [(str(a), str(b)) for a, b in elliptic_edge_table("E6")] == [
        ("A5+A1", "A5"),
        ("3A2", "2A2+A1"),
    ]
    assert elliptic_edge_table("G2") == []


def test_ws_g2():
    assert render_ws_table("G2").splitlines()[-1] == "[A1+Ã1] ↦ 2A1 (not parabolic)"
    assert sum(not e.is_parabolic for e in ws_table("F4")) == 2
    assert sum(not e.is_parabolic for e in ws_table("E8")) == 3


def test_provenance_only_e7_e8():
    assert primed_provenance("E7")
    with pytest.raises(ValueError):
        primed_provenance("F4")


def test_checksum():
    assert checksum() == TABLE_CHECKSUM


def test_unknown_type():
    with pytest.raises(ValueError):
        class_table("B4")


@pytest.mark.parametrize(
    "text",
    ["E8(a3)", "2A3+A1", "(A5+A1)′", "(4A1)″", "A3+Ã1", "D4+4A1", "A0"],
)
def test_label_roundtrip(text):
    assert str(CarterLabel.parse(text)) == text


def test_label_components_are_canonical():
    assert CarterLabel.parse("Ã2+A2") == CarterLabel.parse("A2+Ã2")
    assert str(CarterLabel.parse("A1+D4")) == "D4+A1"
