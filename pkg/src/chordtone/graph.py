"""Layered source-to-sink graph over pattern nodes with transition weights.

Every node of chord k connects to every node of chord k+1. An edge weight
is a clamped linear combination of three metrics: the minimum fret-wise
distance between the two position sets, the hand-position travel between
shape anchors (lowest frets), and the destination shape's net dislike
count. Source/sink edges weigh 0 unless a randomized start position is
drawn, in which case source edges carry the distance from that position.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Mapping

import numpy as np

from .arpeggio import PatternNode, StretchConfig, expand_patterns, generate_shapes
from .chords import ChordSymbol
from .errors import EmptyLayerError, NoShapesError
from .fretboard import (
    CELL_COUNT,
    MAX_FRET,
    DistanceConfig,
    FretPosition,
    fret_distance,
)
from .kernels import min_distance_matrix

PreferenceCounts = Mapping[str, tuple[int, int]]  # fingerprint -> (likes, dislikes)


@dataclass(frozen=True)
class WeightConfig:
    """Coefficients of the edge-weight combination; all terms clamp at 0."""

    distance: DistanceConfig = DistanceConfig()
    coeff_transition: float = 1.0
    coeff_hand_move: float = 0.0
    coeff_preference: float = 0.0
    preference_unit: float = 1.0

    def __post_init__(self):
        for name in ("coeff_transition", "coeff_hand_move", "coeff_preference",
                     "preference_unit"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")


_DEFAULT_WEIGHTS = WeightConfig()


@dataclass(frozen=True)
class RandomSourceNode:
    """A single random start position biasing the first chord's choice."""

    position: FretPosition

    @classmethod
    def draw(cls, seed: int) -> "RandomSourceNode":
        cell = random.Random(seed).randrange(CELL_COUNT)
        return cls(FretPosition(cell // (MAX_FRET + 1), cell % (MAX_FRET + 1)))


def _net_dislikes(prefs: PreferenceCounts | None, shape_ref: str) -> int:
    if not prefs:
        return 0
    likes, dislikes = prefs.get(shape_ref, (0, 0))
    return dislikes - likes


def edge_weight(
    c1: PatternNode,
    c2: PatternNode,
    cfg: WeightConfig | None = None,
    prefs: PreferenceCounts | None = None,
) -> float:
    """Weight of the edge from node ``c1`` into node ``c2``."""
    cfg = cfg or _DEFAULT_WEIGHTS
    w1 = min(
        fret_distance(i, j, cfg.distance) for i in c1.positions for j in c2.positions
    )
    w2 = abs(c1.min_fret() - c2.min_fret())
    w3 = cfg.preference_unit * _net_dislikes(prefs, c2.shape_ref)
    return max(
        0.0,
        cfg.coeff_transition * w1 + cfg.coeff_hand_move * w2 + cfg.coeff_preference * w3,
    )


def source_weight(
    src: RandomSourceNode, c1: PatternNode, cfg: WeightConfig | None = None
) -> float:
    """Distance from the random start position to the nearest tone of ``c1``."""
    cfg = cfg or _DEFAULT_WEIGHTS
    return min(fret_distance(src.position, i, cfg.distance) for i in c1.positions)


@dataclass
class ToneGraph:
    """Layered DAG: source (id 0), one layer per chord, sink (last id)."""

    progression: tuple[ChordSymbol, ...]
    npm: int
    layers: list[list[PatternNode]]
    edges: list[tuple[int, int, float]]
    sink_id: int
    source: RandomSourceNode | None
    weights: WeightConfig
    source_id: int = 0
    _nodes_by_id: dict[int, PatternNode] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._nodes_by_id = {n.id: n for layer in self.layers for n in layer}

    def node(self, node_id: int) -> PatternNode:
        return self._nodes_by_id[node_id]

    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def out_edges(self) -> dict[int, list[tuple[int, float]]]:
        adjacency: dict[int, list[tuple[int, float]]] = {}
        for u, v, w in self.edges:
            adjacency.setdefault(u, []).append((v, w))
        return adjacency

    def in_edges(self) -> dict[int, list[tuple[int, float]]]:
        adjacency: dict[int, list[tuple[int, float]]] = {}
        for u, v, w in self.edges:
            adjacency.setdefault(v, []).append((u, w))
        return adjacency


def _layer_arrays(layer: list[PatternNode]) -> tuple[np.ndarray, np.ndarray]:
    strings = np.array(
        [[p.string_idx for p in n.positions] for n in layer], dtype=np.int64
    )
    frets = np.array([[p.fret for p in n.positions] for n in layer], dtype=np.int64)
    return strings, frets


def _pair_weights(
    layer_a: list[PatternNode],
    layer_b: list[PatternNode],
    cfg: WeightConfig,
    prefs: PreferenceCounts | None,
) -> np.ndarray:
    strings_a, frets_a = _layer_arrays(layer_a)
    strings_b, frets_b = _layer_arrays(layer_b)
    w1 = min_distance_matrix(
        strings_a, frets_a, strings_b, frets_b, cfg.distance.string_change_penalty
    )
    min_a = frets_a.min(axis=1)
    min_b = frets_b.min(axis=1)
    w2 = np.abs(min_a[:, None] - min_b[None, :]).astype(np.float64)
    w3 = np.array(
        [cfg.preference_unit * _net_dislikes(prefs, n.shape_ref) for n in layer_b],
        dtype=np.float64,
    )
    combined = (
        cfg.coeff_transition * w1
        + cfg.coeff_hand_move * w2
        + cfg.coeff_preference * w3[None, :]
    )
    return np.maximum(combined, 0.0)


def build_graph(
    progression: list[ChordSymbol],
    npm: int,
    stretch: StretchConfig | None = None,
    weights: WeightConfig | None = None,
    prefs: PreferenceCounts | None = None,
    randomize_seed: int | None = None,
) -> ToneGraph:
    """Build the full layered graph for a progression.

    ``randomize_seed`` draws the random start position; left ``None``,
    source edges weigh 0 and the build is fully deterministic. ``prefs``
    is a point-in-time snapshot of like/dislike counters.
    """
    if not progression:
        raise EmptyLayerError("empty progression", chord_index=0, chord_text="")
    stretch = stretch or StretchConfig()
    weights = weights or _DEFAULT_WEIGHTS

    layers: list[list[PatternNode]] = []
    next_id = 1  # 0 is the source
    for chord_index, chord in enumerate(progression):
        try:
            shapes = generate_shapes(chord, stretch)
        except NoShapesError as exc:
            raise EmptyLayerError(
                f"chord {chord.display()!r} (index {chord_index}): {exc}",
                chord_index=chord_index,
                chord_text=chord.display(),
            ) from exc
        layer = []
        for shape in shapes:
            for node in expand_patterns(shape, npm, chord_index):
                layer.append(replace(node, id=next_id))
                next_id += 1
        layers.append(layer)
    sink_id = next_id

    source = RandomSourceNode.draw(randomize_seed) if randomize_seed is not None else None

    edges: list[tuple[int, int, float]] = []
    for node in layers[0]:
        w = source_weight(source, node, weights) if source is not None else 0.0
        edges.append((0, node.id, w))
    for layer_a, layer_b in zip(layers, layers[1:]):
        matrix = _pair_weights(layer_a, layer_b, weights, prefs)
        for i, node_a in enumerate(layer_a):
            row = matrix[i]
            for j, node_b in enumerate(layer_b):
                edges.append((node_a.id, node_b.id, float(row[j])))
    for node in layers[-1]:
        edges.append((node.id, sink_id, 0.0))

    return ToneGraph(
        progression=tuple(progression),
        npm=npm,
        layers=layers,
        edges=edges,
        sink_id=sink_id,
        source=source,
        weights=weights,
    )


def graph_dump(g: ToneGraph) -> dict:
    """JSON-ready diagnostic dump: node lists plus weighted edge triples."""
    return {
        "formatVersion": 1,
        "npm": g.npm,
        "chords": [c.display() for c in g.progression],
        "source": {
            "id": g.source_id,
            "position": (
                [g.source.position.string_idx, g.source.position.fret]
                if g.source
                else None
            ),
        },
        "sink": {"id": g.sink_id},
        "layers": [
            [
                {
                    "id": n.id,
                    "chordIndex": n.chord_index,
                    "shapeRef": n.shape_ref,
                    "positions": [[p.string_idx, p.fret] for p in n.positions],
                }
                for n in layer
            ]
            for layer in g.layers
        ],
        "edges": [[u, v, w] for u, v, w in g.edges],
    }
