"""Shortest-path query and ordered line assembly.

Dijkstra finds the cheapest source-to-sink path (ties resolved toward
smaller node ids). The chosen nodes are unordered tone sets, so assembly
pins each boundary's closest cross pair to adjacent slots - last slot of
the earlier measure, first slot of the later one - and shuffles the
remaining tones of each measure with a seeded generator.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .errors import NoPathError
from .fretboard import FretPosition, fret_distance
from .graph import ToneGraph


@dataclass(frozen=True)
class TonePath:
    """One pattern node per chord layer, plus the traversed edge cost."""

    node_ids: tuple[int, ...]
    total_cost: float


@dataclass(frozen=True)
class SoloLine:
    """The ordered note line: npm slots per chord."""

    slots: tuple[FretPosition, ...]
    chord_boundaries: tuple[tuple[int, int], ...]
    chords: tuple[str, ...]
    npm: int
    total_cost: float


def shortest_path(g: ToneGraph) -> TonePath:
    """Minimum-cost source-to-sink path through the layered graph."""
    adjacency = g.out_edges()
    dist: dict[int, float] = {g.source_id: 0.0}
    done: set[int] = set()
    heap: list[tuple[float, int]] = [(0.0, g.source_id)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == g.sink_id:
            break
        for v, w in adjacency.get(u, ()):
            nd = d + w
            if nd < dist.get(v, float("inf")):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    if g.sink_id not in dist:
        raise NoPathError("sink unreachable; graph is malformed")

    # Walk back from the sink, preferring the smallest-id predecessor among
    # those on a cheapest path.
    incoming = g.in_edges()
    path_rev = []
    node = g.sink_id
    while node != g.source_id:
        best = None
        for u, w in incoming[node]:
            if u in dist and dist[u] + w == dist[node]:
                if best is None or u < best:
                    best = u
        if best is None:
            raise NoPathError(f"no predecessor reconstructs node {node}")
        if best != g.source_id:
            path_rev.append(best)
        node = best
    node_ids = tuple(reversed(path_rev))
    return TonePath(node_ids=node_ids, total_cost=dist[g.sink_id])


def _transition_pair(
    from_positions: list[FretPosition],
    to_positions: list[FretPosition],
    g: ToneGraph,
    exclude: FretPosition | None,
) -> tuple[FretPosition, FretPosition]:
    """Closest cross pair, lexicographic tie-break, optional source exclusion."""
    candidates = [p for p in from_positions if p != exclude] or from_positions
    best_key = None
    best_pair = None
    for i in sorted(set(candidates)):
        for j in sorted(set(to_positions)):
            d = fret_distance(i, j, g.weights.distance)
            key = (d, (i.string_idx, i.fret), (j.string_idx, j.fret))
            if best_key is None or key < best_key:
                best_key, best_pair = key, (i, j)
    assert best_pair is not None
    return best_pair


def assemble_line(path: TonePath, g: ToneGraph, seed: int) -> SoloLine:
    """Order the chosen nodes' tones into the final line.

    Boundary transition tones land in fixed slots first; an incoming
    transition owns a measure's first slot, and the outgoing tone is then
    re-picked among the node's other distinct positions (unless it only
    has one). Leftover tones fill the free slots in seeded-shuffle order.
    """
    nodes = [g.node(node_id) for node_id in path.node_ids]
    npm = g.npm
    rng = random.Random(seed)

    first_fixed: list[FretPosition | None] = [None] * len(nodes)
    last_fixed: list[FretPosition | None] = [None] * len(nodes)
    for k in range(len(nodes) - 1):
        exclude = None
        if first_fixed[k] is not None and len(set(nodes[k].positions)) > 1:
            exclude = first_fixed[k]
        i_star, j_star = _transition_pair(
            list(nodes[k].positions), list(nodes[k + 1].positions), g, exclude
        )
        last_fixed[k] = i_star
        first_fixed[k + 1] = j_star

    slots: list[FretPosition | None] = [None] * (npm * len(nodes))
    for k, node in enumerate(nodes):
        start = k * npm
        remaining = list(node.positions)
        if first_fixed[k] is not None:
            slots[start] = first_fixed[k]
            remaining.remove(first_fixed[k])
        if last_fixed[k] is not None:
            slots[start + npm - 1] = last_fixed[k]
            remaining.remove(last_fixed[k])
        rng.shuffle(remaining)
        free = [s for s in range(start, start + npm) if slots[s] is None]
        for slot, position in zip(free, remaining):
            slots[slot] = position

    assert all(s is not None for s in slots)
    return SoloLine(
        slots=tuple(slots),  # type: ignore[arg-type]
        chord_boundaries=tuple((k * npm, (k + 1) * npm) for k in range(len(nodes))),
        chords=tuple(c.source_text or c.display() for c in g.progression),
        npm=npm,
        total_cost=path.total_cost,
    )
