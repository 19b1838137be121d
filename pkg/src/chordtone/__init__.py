"""Chord-tone soloing line generator for guitar.

Parses a chord progression, enumerates playable arpeggio shapes per
chord, connects them in a layered weighted graph, extracts the shortest
path, and renders the ordered line as ASCII tablature or JSON.
"""

from .arpeggio import (
    ArpeggioShape,
    PatternNode,
    StretchConfig,
    expand_patterns,
    generate_shapes,
    shape_fingerprint,
)
from .chords import (
    ChordQuality,
    ChordSymbol,
    NOTE_NAMES,
    QUALITY_INTERVALS,
    chord_tones,
    parse_chord_symbol,
    parse_progression,
)
from .fretboard import (
    DistanceConfig,
    FretPosition,
    OPEN_TUNING,
    fret_distance,
    pitch_at,
    positions_of_pitch,
    positions_of_pitch_class,
)
from .graph import (
    RandomSourceNode,
    ToneGraph,
    WeightConfig,
    build_graph,
    edge_weight,
    graph_dump,
    source_weight,
)
from .pathfind import SoloLine, TonePath, assemble_line, shortest_path
from .pipeline import GenerationResult, GenerationSettings, generate
from .prefs import PreferenceStore
from .tabrender import TabDocument, line_from_json, render_json, render_tab

__version__ = "0.1.0"

__all__ = [
    "ArpeggioShape",
    "ChordQuality",
    "ChordSymbol",
    "DistanceConfig",
    "FretPosition",
    "GenerationResult",
    "GenerationSettings",
    "NOTE_NAMES",
    "OPEN_TUNING",
    "PatternNode",
    "PreferenceStore",
    "QUALITY_INTERVALS",
    "RandomSourceNode",
    "SoloLine",
    "StretchConfig",
    "TabDocument",
    "ToneGraph",
    "TonePath",
    "WeightConfig",
    "assemble_line",
    "build_graph",
    "chord_tones",
    "edge_weight",
    "expand_patterns",
    "fret_distance",
    "generate",
    "generate_shapes",
    "graph_dump",
    "line_from_json",
    "parse_chord_symbol",
    "parse_progression",
    "pitch_at",
    "positions_of_pitch",
    "positions_of_pitch_class",
    "render_json",
    "render_tab",
    "shape_fingerprint",
    "shortest_path",
    "source_weight",
]
