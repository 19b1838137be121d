"""Benchmark the layer-pair weight kernel: numba JIT vs pure numpy.

Runs the same min-distance matrix on synthetic node batches of growing
size, then times a full graph build for a realistic progression under
both backends. Invoke directly:

    python benchmarks/bench_kernels.py
"""

import os
import timeit

import numpy as np

from chordtone import kernels
from chordtone.chords import parse_progression
from chordtone.graph import build_graph


def synthetic_batch(rng, nodes, per_node):
    strings = rng.integers(0, 6, size=(nodes, per_node), dtype=np.int64)
    frets = rng.integers(0, 23, size=(nodes, per_node), dtype=np.int64)
    return strings, frets


def bench_matrix(backend, strings_a, frets_a, strings_b, frets_b, repeat=5):
    def call():
        kernels.min_distance_matrix(
            strings_a, frets_a, strings_b, frets_b, 2.0, backend=backend
        )

    call()  # warm (JIT compile / cache load)
    return min(timeit.repeat(call, number=1, repeat=repeat))


def bench_build(backend, progression_text, npm, repeat=3):
    progression = parse_progression(progression_text)
    os.environ[kernels.ENV_FLAG] = backend

    def call():
        build_graph(progression, npm=npm)

    call()
    best = min(timeit.repeat(call, number=1, repeat=repeat))
    del os.environ[kernels.ENV_FLAG]
    return best


def main():
    backends = ["numpy"]
    if kernels.HAS_NUMBA:
        backends.insert(0, "numba")
    else:
        print("numba not installed; benchmarking numpy only")

    rng = np.random.default_rng(1)
    print(f"{'case':<28}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")

    for nodes, per_node in [(32, 4), (64, 8), (128, 8), (256, 8), (256, 16)]:
        strings_a, frets_a = synthetic_batch(rng, nodes, per_node)
        strings_b, frets_b = synthetic_batch(rng, nodes, per_node)
        times = [
            bench_matrix(b, strings_a, frets_a, strings_b, frets_b) for b in backends
        ]
        label = f"matrix {nodes}x{nodes}, P={per_node}"
        row = "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        speedup = f"{times[-1] / times[0]:>9.1f}x" if len(times) == 2 else ""
        print(f"{label:<28}{row}{speedup}")

    # 12-bar blues in A with sevenths, a realistic long progression
    blues = ("A7, A7, A7, A7, D7, D7, A7, A7, E7, D7, A7, E7")
    for npm in (4, 8):
        times = [bench_build(b, blues, npm) for b in backends]
        label = f"build 12-bar blues, npm={npm}"
        row = "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        speedup = f"{times[-1] / times[0]:>9.1f}x" if len(times) == 2 else ""
        print(f"{label:<28}{row}{speedup}")


if __name__ == "__main__":
    main()
