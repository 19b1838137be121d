"""Chord symbols, tertian qualities, and progression parsing.

A chord token is ``<A-G>[#|b]<quality>`` where the note letter is
case-sensitive and the quality token is case-insensitive. Qualities are
stored as the semitone steps between successive chord tones (stacked
thirds), e.g. ``min7 = (3, 4, 3)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    EmptyInputError,
    EmptyProgressionError,
    UnknownQualityError,
    UnknownRootError,
)

# Canonical pitch-class spellings, sharps only; C = 0.
NOTE_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")

_LETTER_TO_PC = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
_ACCIDENTALS = {"#": 1, "b": -1}

# Canonical quality name -> interval stack. Triads and sevenths only; every
# step is a minor or major third.
QUALITY_INTERVALS: dict[str, tuple[int, ...]] = {
    "maj7": (4, 3, 4),
    "min7": (3, 4, 3),
    "7": (4, 3, 3),
    "m7b5": (3, 3, 4),
    "dim7": (3, 3, 3),
    "maj": (4, 3),
    "min": (3, 4),
}

# Lowercased alias -> canonical name.
_QUALITY_ALIASES = {
    "m7": "min7",
    "-7": "min7",
    "min7b5": "m7b5",
    "o7": "dim7",
    "m": "min",
}

_TOKEN_SPLIT = re.compile(r"[,\s]+")


@dataclass(frozen=True)
class ChordQuality:
    """A chord type named by its canonical token and interval stack."""

    name: str
    intervals: tuple[int, ...]

    def __post_init__(self):
        if not all(step in (3, 4) for step in self.intervals):
            raise ValueError(f"non-tertian interval stack: {self.intervals}")
        if len(self.intervals) not in (2, 3):
            raise ValueError(f"only triads and sevenths supported: {self.intervals}")

    @property
    def tone_count(self) -> int:
        return len(self.intervals) + 1


@dataclass(frozen=True)
class ChordSymbol:
    """A parsed chord: root pitch class plus quality."""

    root: int
    quality: ChordQuality
    source_text: str = field(compare=False, default="")

    @property
    def tone_count(self) -> int:
        return self.quality.tone_count

    def display(self) -> str:
        """Canonical spelling, re-parseable by :func:`parse_chord_symbol`."""
        return NOTE_NAMES[self.root % 12] + self.quality.name


Progression = list[ChordSymbol]


def quality_from_token(token: str) -> ChordQuality:
    """Resolve a (case-insensitive) quality token to its interval stack."""
    key = token.lower()
    key = _QUALITY_ALIASES.get(key, key)
    intervals = QUALITY_INTERVALS.get(key)
    if intervals is None:
        raise UnknownQualityError(f"unknown chord quality {token!r}")
    return ChordQuality(key, intervals)


def parse_chord_symbol(text: str) -> ChordSymbol:
    """Parse one chord token such as ``Amin7``, ``Bb7``, or ``F#m7b5``."""
    token = text.strip()
    if not token:
        raise EmptyInputError("empty chord token")
    letter = token[0]
    pc = _LETTER_TO_PC.get(letter)
    if pc is None:
        raise UnknownRootError(f"unknown root note {letter!r} in {token!r}")
    rest = token[1:]
    if rest[:1] in _ACCIDENTALS:
        pc = (pc + _ACCIDENTALS[rest[:1]]) % 12
        rest = rest[1:]
    quality = quality_from_token(rest)
    return ChordSymbol(root=pc, quality=quality, source_text=token)


def chord_tones(chord: ChordSymbol) -> list[int]:
    """Pitch classes of the chord in stack order, root first."""
    tones = [chord.root % 12]
    for step in chord.quality.intervals:
        tones.append((tones[-1] + step) % 12)
    return tones


def parse_progression(text: str) -> Progression:
    """Parse a comma- and/or whitespace-separated chord progression.

    Empty tokens (e.g. from ``Amin7,,D7``) are skipped. Token order is
    preserved and repeats are allowed.
    """
    tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    if not tokens:
        raise EmptyProgressionError("progression contains no chords")
    chords = []
    for index, token in enumerate(tokens):
        try:
            chords.append(parse_chord_symbol(token))
        except (UnknownRootError, UnknownQualityError, EmptyInputError) as exc:
            raise type(exc)(f"token {index} ({token!r}): {exc}", token_index=index) from exc
    return chords
