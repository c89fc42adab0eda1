"""Exceptional-type tables: class <-> irreducible pairings, distinguished markers,
characteristic notes, elliptic edges, W_s correspondences, primed-label origins."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import data
from .labels import CarterLabel, Component, IrrLabel

TYPES = ("G2", "F4", "E6", "E7", "E8")

__all__ = [
    "TYPES",
    "CarterLabel",
    "Component",
    "IrrLabel",
    "ExcTableEntry",
    "WsEntry",
    "class_table",
    "per_r_notes",
    "elliptic_edge_table",
    "ws_table",
    "primed_provenance",
    "errata",
    "resolve_label",
    "render_class_table",
    "render_ws_table",
    "tables_json",
    "checksum",
    "TABLE_CHECKSUM",
]


def _check_type(t: str) -> str:
    if t not in TYPES:
        raise ValueError(f"no exceptional table for type {t!r}")
    return t


def resolve_label(t: str, printed: str) -> CarterLabel:
    """Carter label meant by a printed label (applies the stored corrections)."""
    fixed = data.LABEL_CORRECTIONS.get(t, {}).get(printed, printed)
    return CarterLabel.parse(fixed)


@dataclass(frozen=True)
class ExcTableEntry:
    printed: str
    carter: CarterLabel
    irr: IrrLabel
    distinguished: bool
    line: int
    r_notes: tuple[dict, ...] = field(default=())
    aliases: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "carter": str(self.carter),
            "printed": self.printed,
            "irr": self.irr.to_json(),
            "distinguished": self.distinguished,
            "r_notes": list(self.r_notes),
            "aliases": list(self.aliases),
        }


def class_table(t: str) -> list[ExcTableEntry]:
    _check_type(t)
    seen: dict[tuple[int, int], int] = {}
    flat = [
        (ln, printed, deg, b)
        for ln, line in enumerate(data.CLASS_LINES[t])
        for printed, deg, b in line
    ]
    counts: dict[tuple[int, int], int] = {}
    for _, _, deg, b in flat:
        counts[(deg, b)] = counts.get((deg, b), 0) + 1
    notes = {(d, s): r for d, s, r in data.PER_R_NOTES[t]}
    out = []
    for idx, (ln, printed, deg, b) in enumerate(flat):
        prime = ""
        if counts[(deg, b)] > 1:
            k = seen.get((deg, b), 0)
            seen[(deg, b)] = k + 1
            prime = ("′", "″")[k]
        r_notes = ()
        if (deg, b) in notes:
            r_notes = ({"single_r": notes[(deg, b)]},)
        out.append(
            ExcTableEntry(
                printed=printed,
                carter=resolve_label(t, printed),
                irr=IrrLabel(deg, b, prime),
                distinguished=idx < data.DISTINGUISHED_PREFIX[t],
                line=ln,
                r_notes=r_notes,
                aliases=tuple(data.LABEL_ALIASES.get(t, {}).get(printed, ())),
            )
        )
    return out


def per_r_notes(t: str) -> list[dict]:
    """Characteristic notes as printed, flagged when no table entry carries the subscript."""
    _check_type(t)
    present = {(e.irr.degree, e.irr.b) for e in class_table(t)}
    out = []
    for deg, sub, r in data.PER_R_NOTES[t]:
        rec = {"irr": f"{deg}_{sub}", "r": r, "in_table": (deg, sub) in present}
        if not rec["in_table"]:
            near = sorted(b for d, b in present if d == deg)
            rec["table_subscripts_for_degree"] = near
        out.append(rec)
    return out


def elliptic_edge_table(t: str) -> list[tuple[CarterLabel, CarterLabel]]:
    _check_type(t)
    return [(resolve_label(t, a), resolve_label(t, b)) for a, b in data.ELLIPTIC_EDGES[t]]


@dataclass(frozen=True)
class WsEntry:
    printed: str
    carter: CarterLabel
    ws: CarterLabel
    is_parabolic: bool

    def render(self) -> str:
        tail = "" if self.is_parabolic else " (not parabolic)"
        return f"[{self.printed}] ↦ {self.ws}{tail}"


def ws_table(t: str) -> list[WsEntry]:
    _check_type(t)
    rows = data.WS_TABLE[t]
    cut = len(rows) - data.NONPARABOLIC[t]
    return [
        WsEntry(printed, resolve_label(t, printed), CarterLabel.parse(ws), i < cut)
        for i, (printed, ws) in enumerate(rows)
    ]


def primed_provenance(t: str) -> list[dict]:
    if t not in ("E7", "E8"):
        raise ValueError("primed-label origins are recorded for E7 and E8 only")
    return [
        {"label": CarterLabel.parse(lab), "from": src}
        for lab, src in data.PRIMED_PROVENANCE[t]
    ]


def errata() -> list[str]:
    return list(data.ERRATA)


def render_class_table(t: str) -> str:
    _check_type(t)
    lines = []
    for line in data.CLASS_LINES[t]:
        lines.append("; ".join(f"[{p}] ↔ {d}_{b}" for p, d, b in line))
    return "\n".join(lines) + "\n"


def render_ws_table(t: str) -> str:
    return "\n".join(e.render() for e in ws_table(t)) + "\n"


def tables_json(t: str) -> dict:
    _check_type(t)
    return {
        "type": t,
        "classes": [e.to_json() for e in class_table(t)],
        "elliptic_edges": [[str(a), str(b)] for a, b in elliptic_edge_table(t)],
        "ws": [
            {"class": e.printed, "ws": str(e.ws), "parabolic": e.is_parabolic}
            for e in ws_table(t)
        ],
        "per_r_notes": per_r_notes(t),
        "primed_provenance": (
            [{"label": str(r["label"]), "from": r["from"]} for r in primed_provenance(t)]
            if t in ("E7", "E8")
            else []
        ),
    }


def checksum() -> str:
    blob = json.dumps(
        {
            "lines": data.CLASS_LINES,
            "prefix": data.DISTINGUISHED_PREFIX,
            "notes": data.PER_R_NOTES,
            "edges": data.ELLIPTIC_EDGES,
            "ws": data.WS_TABLE,
            "nonparabolic": data.NONPARABOLIC,
            "primed": data.PRIMED_PROVENANCE,
        },
        sort_keys=True,
        ensure_ascii=False,
    )
    return hashlib.sha256(blob.encode()).hexdigest()


TABLE_CHECKSUM = "ff9412421ecd7470aa74bc9efad4aa069602d8f31a4561f320596d1c6dad36f7"
