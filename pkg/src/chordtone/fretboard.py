"""Six-string, 22-fret fretboard model and the fret-wise distance metric.

String 0 is the lowest-pitched string (low E, open = MIDI 40); fret 0 is
the open string, so the grid has 6 x 23 = 138 playable cells. Crossing a
string costs ``string_change_penalty`` fret-equivalents per string.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRangeError

OPEN_TUNING = (40, 45, 50, 55, 59, 64)  # E A D G B e
STRING_COUNT = 6
MAX_FRET = 22
CELL_COUNT = STRING_COUNT * (MAX_FRET + 1)

MIN_MIDI = OPEN_TUNING[0]  # open low E
MAX_MIDI = OPEN_TUNING[-1] + MAX_FRET  # high e, top fret


@dataclass(frozen=True, order=True)
class FretPosition:
    """One cell of the grid: (string index, fret)."""

    string_idx: int
    fret: int

    def in_bounds(self) -> bool:
        return 0 <= self.string_idx < STRING_COUNT and 0 <= self.fret <= MAX_FRET


@dataclass(frozen=True)
class DistanceConfig:
    """Weighting of string crossings relative to fret moves."""

    string_change_penalty: float = 2.0

    def __post_init__(self):
        if self.string_change_penalty < 0:
            raise ValueError("string_change_penalty must be >= 0")


_DEFAULT_DISTANCE = DistanceConfig()


def pitch_at(pos: FretPosition) -> int:
    """MIDI note number sounded at a grid position."""
    if not pos.in_bounds():
        raise OutOfRangeError(f"position {pos} outside the 6x23 grid")
    return OPEN_TUNING[pos.string_idx] + pos.fret


def positions_of_pitch(midi: int) -> list[FretPosition]:
    """Every grid position sounding the exact MIDI pitch, by (string, fret)."""
    found = []
    for string_idx, open_midi in enumerate(OPEN_TUNING):
        fret = midi - open_midi
        if 0 <= fret <= MAX_FRET:
            found.append(FretPosition(string_idx, fret))
    return found


def positions_of_pitch_class(pc: int) -> list[FretPosition]:
    """Every grid position whose pitch class equals ``pc``, by (string, fret)."""
    pc %= 12
    found = []
    for string_idx, open_midi in enumerate(OPEN_TUNING):
        for fret in range(MAX_FRET + 1):
            if (open_midi + fret) % 12 == pc:
                found.append(FretPosition(string_idx, fret))
    return found


def fret_distance(
    p1: FretPosition, p2: FretPosition, cfg: DistanceConfig | None = None
) -> float:
    """Weighted L1 distance on the grid: |dfret| + penalty * |dstring|."""
    cfg = cfg or _DEFAULT_DISTANCE
    return abs(p1.fret - p2.fret) + cfg.string_change_penalty * abs(
        p1.string_idx - p2.string_idx
    )
