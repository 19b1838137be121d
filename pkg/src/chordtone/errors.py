"""Exception hierarchy shared across the engine, CLI, and service."""


class ChordToneError(Exception):
    """Base class for every error raised by this package."""


class ChordParseError(ChordToneError):
    """Base class for chord/progression parsing failures.

    ``token_index`` is the zero-based position of the offending token when
    the error was raised while parsing a progression, else ``None``.
    """

    def __init__(self, message: str, token_index: int | None = None):
        super().__init__(message)
        self.token_index = token_index


class EmptyInputError(ChordParseError):
    """A chord token was empty or blank."""


class UnknownRootError(ChordParseError):
    """The note letter is outside A-G."""


class UnknownQualityError(ChordParseError):
    """The quality token is not in the supported vocabulary."""


class EmptyProgressionError(ChordParseError):
    """The progression contained no chord tokens."""


class OutOfRangeError(ChordToneError):
    """A fretboard position is outside the 6-string, 22-fret grid."""


class NoShapesError(ChordToneError):
    """No playable arpeggio shape exists for a chord under the stretch limit."""


class PatternTooShortError(ChordToneError):
    """Requested pattern length is smaller than the chord's tone count."""


class EmptyLayerError(ChordToneError):
    """A progression chord produced no graph nodes.

    Carries which chord failed so callers can point at it.
    """

    def __init__(self, message: str, chord_index: int, chord_text: str):
        super().__init__(message)
        self.chord_index = chord_index
        self.chord_text = chord_text


class NoPathError(ChordToneError):
    """No source-to-sink path exists; signals a corrupted graph."""


class PreferenceFileError(ChordToneError):
    """The preference file could not be read or written."""
