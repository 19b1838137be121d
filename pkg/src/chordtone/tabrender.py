"""ASCII tablature and JSON rendering of a solo line.

Layout rules (normative for the golden files and the web view): six rows
top-down e B G D A E, each row opening with ``<label>|``. Within a
measure every note occupies one cell as wide as the measure's widest fret
number, right-aligned and padded with ``-``; cells are separated by
``--`` and the measure is framed by ``--`` on both sides before its
closing ``|``. A chord-name row sits above the grid, names aligned to
measure starts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .fretboard import FretPosition, pitch_at
from .pathfind import SoloLine

STRING_LABELS = ("e", "B", "G", "D", "A", "E")  # top row to bottom row
FORMAT_VERSION = 1


@dataclass(frozen=True)
class TabDocument:
    """Rendered tablature: chord-name row plus six equal-length string rows."""

    chord_row: str
    string_rows: tuple[str, ...]

    @property
    def text(self) -> str:
        return "\n".join((self.chord_row, *self.string_rows)) + "\n"


def _measure_cells(
    line: SoloLine, start: int, end: int
) -> tuple[int, list[FretPosition]]:
    notes = [line.slots[slot] for slot in range(start, end)]
    width = max(len(str(p.fret)) for p in notes)
    return width, notes


def render_tab(line: SoloLine) -> TabDocument:
    """Render a solo line as fixed-grid ASCII tablature."""
    row_bodies: list[list[str]] = [[] for _ in range(6)]
    measure_starts: list[int] = []
    cursor = 2  # past the "X|" row prefix
    for start, end in line.chord_boundaries:
        width, notes = _measure_cells(line, start, end)
        measure_starts.append(cursor)
        for row in range(6):
            string_idx = 5 - row
            cells = [
                str(p.fret).rjust(width, "-") if p.string_idx == string_idx
                else "-" * width
                for p in notes
            ]
            row_bodies[row].append("--" + "--".join(cells) + "--")
        cursor += len(row_bodies[0][-1]) + 1

    string_rows = tuple(
        STRING_LABELS[row] + "|" + "|".join(row_bodies[row]) + "|" for row in range(6)
    )

    chord_cells = [" "] * len(string_rows[0])
    pen = 0
    for name, start in zip(line.chords, measure_starts):
        at = max(start, pen)
        for offset, ch in enumerate(name):
            if at + offset < len(chord_cells):
                chord_cells[at + offset] = ch
        pen = at + len(name) + 1
    chord_row = "".join(chord_cells).rstrip()

    return TabDocument(chord_row=chord_row, string_rows=string_rows)


def render_json(line: SoloLine) -> dict:
    """Structured document for the line; key order is part of the format."""
    return {
        "formatVersion": FORMAT_VERSION,
        "chords": list(line.chords),
        "npm": line.npm,
        "notes": [
            {
                "slot": slot,
                "stringIdx": p.string_idx,
                "fret": p.fret,
                "midi": pitch_at(p),
                "chordIndex": slot // line.npm,
            }
            for slot, p in enumerate(line.slots)
        ],
        "totalCost": line.total_cost,
    }


def json_text(line: SoloLine) -> str:
    return json.dumps(render_json(line), indent=2) + "\n"


def line_from_json(doc: dict) -> SoloLine:
    """Rebuild a solo line from a :func:`render_json` document."""
    npm = doc["npm"]
    notes = sorted(doc["notes"], key=lambda n: n["slot"])
    slots = tuple(FretPosition(n["stringIdx"], n["fret"]) for n in notes)
    chord_count = len(doc["chords"])
    return SoloLine(
        slots=slots,
        chord_boundaries=tuple((k * npm, (k + 1) * npm) for k in range(chord_count)),
        chords=tuple(doc["chords"]),
        npm=npm,
        total_cost=doc["totalCost"],
    )
