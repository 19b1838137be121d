"""Command-line interface for one-shot line generation.

The rendered artifact is the only thing written to stdout; diagnostics go
to stderr. Exit codes: 0 success, 2 progression parse error, 3 generation
error (no playable shapes / pattern too short), 4 preference-file I/O
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    ChordParseError,
    EmptyLayerError,
    NoShapesError,
    PatternTooShortError,
    PreferenceFileError,
)
from .graph import graph_dump
from .pipeline import GenerationSettings, generate
from .prefs import PreferenceStore
from .tabrender import json_text

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GENERATION = 3
EXIT_PREFS_IO = 4


def _non_negative(text: str) -> float:
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordtone",
        description="Generate a chord-tone soloing line as guitar tablature.",
    )
    parser.add_argument(
        "--progression",
        help="chord progression, e.g. 'Amin7, D7' (read from stdin when omitted)",
    )
    parser.add_argument("--npm", type=_positive_int, default=4,
                        help="notes per measure (default 4)")
    parser.add_argument("--stretch", type=_positive_int, default=4,
                        help="max fret span per shape (default 4)")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for shuffling and the randomized start")
    parser.add_argument("--randomize-start", action="store_true",
                        help="bias the line toward a random neck position")
    parser.add_argument("--penalty", type=_non_negative, default=2.0,
                        help="string-change penalty in fret units (default 2)")
    parser.add_argument("--coeff-transition", type=_non_negative, default=1.0,
                        help="weight of the transition-distance metric (default 1)")
    parser.add_argument("--coeff-hand-move", type=_non_negative, default=0.0,
                        help="weight of the hand-travel metric (default 0)")
    parser.add_argument("--coeff-preference", type=_non_negative, default=0.0,
                        help="weight of the like/dislike metric (default 0)")
    parser.add_argument("--preference-unit", type=_non_negative, default=1.0,
                        help="fret-equivalents added per net dislike (default 1)")
    parser.add_argument("--format", choices=("tab", "json", "graph-dump"),
                        default="tab", help="output format (default tab)")
    parser.add_argument("--prefs-file", default=None,
                        help="JSON preference file fed into the preference metric")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    progression_text = args.progression
    if progression_text is None:
        progression_text = sys.stdin.read()

    prefs = None
    if args.prefs_file:
        try:
            prefs = PreferenceStore(args.prefs_file).snapshot()
        except PreferenceFileError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PREFS_IO

    settings = GenerationSettings(
        progression_text=progression_text,
        npm=args.npm,
        stretch=args.stretch,
        seed=args.seed,
        randomize_start=args.randomize_start,
        string_change_penalty=args.penalty,
        coeff_transition=args.coeff_transition,
        coeff_hand_move=args.coeff_hand_move,
        coeff_preference=args.coeff_preference,
        preference_unit=args.preference_unit,
    )

    try:
        result = generate(settings, prefs=prefs)
    except ChordParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (EmptyLayerError, NoShapesError, PatternTooShortError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GENERATION

    if args.randomize_start and args.seed is None:
        print(f"seed: {result.seed_used}", file=sys.stderr)

    if args.format == "tab":
        sys.stdout.write(result.tab.text)
    elif args.format == "json":
        sys.stdout.write(json_text(result.line))
    else:
        sys.stdout.write(json.dumps(graph_dump(result.graph), indent=2) + "\n")
    return EXIT_OK


def entrypoint() -> None:  # console-script wrapper
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
