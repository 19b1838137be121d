"""Arpeggio shape generation under a fret-stretch limit.

A shape realizes a chord's tones in one ascending single-octave stack:
tone k sounds at root pitch + cumulative interval. Starting from each root
position, the next tone may sit on the same string at a higher fret or on
any higher string, and the whole shape must span at most ``max_stretch``
frets. Shapes are padded/cycled into fixed-length pattern nodes for graph
construction.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache

from .chords import ChordSymbol
from .errors import NoShapesError, PatternTooShortError
from .fretboard import (
    OPEN_TUNING,
    MAX_FRET,
    STRING_COUNT,
    FretPosition,
    pitch_at,
    positions_of_pitch_class,
)


@dataclass(frozen=True)
class StretchConfig:
    """Maximum fret span a hand covers within one shape."""

    max_stretch: int = 4

    def __post_init__(self):
        if self.max_stretch < 0:
            raise ValueError("max_stretch must be >= 0")


_DEFAULT_STRETCH = StretchConfig()


def shape_fingerprint(quality_name: str, positions: tuple[FretPosition, ...]) -> str:
    """Stable id for a shape pattern: quality plus offsets from the root.

    Transposing the same pattern to another root keeps the fingerprint, so
    preference counters attach to the pattern, not the absolute position.
    """
    root = positions[0]
    offsets = ",".join(
        f"{p.string_idx - root.string_idx}:{p.fret - root.fret}" for p in positions
    )
    digest = hashlib.sha1(f"{quality_name};{offsets}".encode("ascii")).hexdigest()
    return digest[:16]


@dataclass(frozen=True)
class ArpeggioShape:
    """A playable position sequence for one chord, root first, pitch ascending."""

    chord: ChordSymbol
    positions: tuple[FretPosition, ...]
    fingerprint: str

    @classmethod
    def from_positions(
        cls, chord: ChordSymbol, positions: tuple[FretPosition, ...]
    ) -> "ArpeggioShape":
        return cls(chord, positions, shape_fingerprint(chord.quality.name, positions))


@dataclass(frozen=True)
class PatternNode:
    """A fixed-length tone pattern; one graph node.

    ``positions`` is the assembly order only: weighting treats the node as
    an unordered position set. ``id`` is -1 until the graph assigns one.
    """

    id: int
    chord_index: int
    positions: tuple[FretPosition, ...]
    shape_ref: str

    def min_fret(self) -> int:
        return min(p.fret for p in self.positions)


@lru_cache(maxsize=1024)
def _shape_position_tuples(
    root_pc: int, intervals: tuple[int, ...], max_stretch: int
) -> tuple[tuple[FretPosition, ...], ...]:
    """Enumerate all valid shape position tuples for a (root, stack, stretch)."""
    shapes: set[tuple[FretPosition, ...]] = set()

    def extend(
        sequence: list[FretPosition],
        targets: list[int],
        lo_fret: int,
        hi_fret: int,
    ) -> None:
        if not targets:
            shapes.add(tuple(sequence))
            return
        midi = targets[0]
        prev = sequence[-1]
        for string_idx in range(prev.string_idx, STRING_COUNT):
            fret = midi - OPEN_TUNING[string_idx]
            if not 0 <= fret <= MAX_FRET:
                continue
            if string_idx == prev.string_idx and fret <= prev.fret:
                continue
            lo, hi = min(lo_fret, fret), max(hi_fret, fret)
            if hi - lo > max_stretch:
                continue
            sequence.append(FretPosition(string_idx, fret))
            extend(sequence, targets[1:], lo, hi)
            sequence.pop()

    for root in positions_of_pitch_class(root_pc):
        root_midi = pitch_at(root)
        targets = []
        total = 0
        for step in intervals:
            total += step
            targets.append(root_midi + total)
        extend([root], targets, root.fret, root.fret)

    return tuple(sorted(shapes))


def generate_shapes(
    chord: ChordSymbol, cfg: StretchConfig | None = None
) -> list[ArpeggioShape]:
    """All playable shapes for a chord, sorted by root position then layout."""
    cfg = cfg or _DEFAULT_STRETCH
    tuples = _shape_position_tuples(
        chord.root % 12, chord.quality.intervals, cfg.max_stretch
    )
    if not tuples:
        raise NoShapesError(
            f"no playable shape for {chord.display()} within {cfg.max_stretch} frets"
        )
    return [ArpeggioShape.from_positions(chord, positions) for positions in tuples]


def expand_patterns(
    shape: ArpeggioShape, npm: int, chord_index: int = 0
) -> list[PatternNode]:
    """Expand one shape into its pattern node of ``npm`` positions.

    With npm equal to the tone count this is the identity; longer patterns
    cycle through the shape. Shorter patterns would drop chord tones and
    are rejected.
    """
    tone_count = len(shape.positions)
    if npm < tone_count:
        raise PatternTooShortError(
            f"npm={npm} cannot hold the {tone_count} tones of {shape.chord.display()}"
        )
    positions = tuple(shape.positions[k % tone_count] for k in range(npm))
    return [
        PatternNode(
            id=-1,
            chord_index=chord_index,
            positions=positions,
            shape_ref=shape.fingerprint,
        )
    ]
