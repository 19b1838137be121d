"""One-call orchestration of the full generation pipeline.

Shared by the CLI and the HTTP service so both surfaces behave
identically: parse, build the graph, query, assemble, render. A single
seed drives both the randomized start position (when enabled) and the
slot shuffle, which makes any run replayable from its echoed seed.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass

from .arpeggio import PatternNode, StretchConfig
from .chords import parse_progression
from .fretboard import DistanceConfig
from .graph import PreferenceCounts, ToneGraph, WeightConfig, build_graph
from .pathfind import SoloLine, TonePath, assemble_line, shortest_path
from .tabrender import TabDocument, render_json, render_tab


@dataclass(frozen=True)
class GenerationSettings:
    progression_text: str
    npm: int = 4
    stretch: int = 4
    seed: int | None = None
    randomize_start: bool = False
    string_change_penalty: float = 2.0
    coeff_transition: float = 1.0
    coeff_hand_move: float = 0.0
    coeff_preference: float = 0.0
    preference_unit: float = 1.0

    def weight_config(self) -> WeightConfig:
        return WeightConfig(
            distance=DistanceConfig(self.string_change_penalty),
            coeff_transition=self.coeff_transition,
            coeff_hand_move=self.coeff_hand_move,
            coeff_preference=self.coeff_preference,
            preference_unit=self.preference_unit,
        )


@dataclass(frozen=True)
class GenerationResult:
    graph: ToneGraph
    path: TonePath
    line: SoloLine
    tab: TabDocument
    document: dict
    seed_used: int

    @property
    def chosen_nodes(self) -> list[PatternNode]:
        return [self.graph.node(node_id) for node_id in self.path.node_ids]


def generate(
    settings: GenerationSettings, prefs: PreferenceCounts | None = None
) -> GenerationResult:
    """Run the whole pipeline for one request."""
    progression = parse_progression(settings.progression_text)
    if settings.seed is not None:
        seed_used = settings.seed
    elif settings.randomize_start:
        seed_used = secrets.randbits(32)
    else:
        seed_used = 0
    graph = build_graph(
        progression,
        npm=settings.npm,
        stretch=StretchConfig(settings.stretch),
        weights=settings.weight_config(),
        prefs=prefs,
        randomize_seed=seed_used if settings.randomize_start else None,
    )
    path = shortest_path(graph)
    line = assemble_line(path, graph, seed_used)
    return GenerationResult(
        graph=graph,
        path=path,
        line=line,
        tab=render_tab(line),
        document=render_json(line),
        seed_used=seed_used,
    )
