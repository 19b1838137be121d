import pytest

from chordtone.arpeggio import (
    StretchConfig,
    expand_patterns,
    generate_shapes,
    shape_fingerprint,
)
from chordtone.chords import chord_tones, parse_chord_symbol
from chordtone.errors import NoShapesError, PatternTooShortError
from chordtone.fretboard import FretPosition, pitch_at
from oracles import QUALITY_TABLE, brute_force_shapes

AMIN7 = parse_chord_symbol("Amin7")
D7 = parse_chord_symbol("D7")


def as_tuples(shapes):
    return {tuple((p.string_idx, p.fret) for p in s.positions) for s in shapes}


def test_paper_walkthrough_shape_present():
    shapes = as_tuples(generate_shapes(AMIN7, StretchConfig(4)))
    assert ((0, 5), (0, 8), (1, 7), (2, 5)) in shapes


def test_worked_example_shapes_present():
    assert ((0, 5), (1, 3), (2, 2), (2, 5)) in as_tuples(
        generate_shapes(AMIN7, StretchConfig(4))
    )
    assert ((1, 5), (2, 4), (2, 7), (3, 5)) in as_tuples(
        generate_shapes(D7, StretchConfig(4))
    )


def test_oracle_equivalence_worked_example_chords():
    # Counts pinned from the brute-force enumeration.
    amin7 = as_tuples(generate_shapes(AMIN7, StretchConfig(4)))
    assert amin7 == brute_force_shapes(9, (3, 4, 3), 4)
    assert len(amin7) == 25
    d7 = as_tuples(generate_shapes(D7, StretchConfig(4)))
    assert d7 == brute_force_shapes(2, (4, 3, 3), 4)
    assert len(d7) == 22


def test_zero_stretch_has_no_min7_shape():
    assert brute_force_shapes(9, (3, 4, 3), 0) == set()
    with pytest.raises(NoShapesError):
        generate_shapes(AMIN7, StretchConfig(0))


def test_shape_invariants():
    for chord in (AMIN7, D7, parse_chord_symbol("Cmaj"), parse_chord_symbol("Fdim7")):
        tones = chord_tones(chord)
        for shape in generate_shapes(chord, StretchConfig(4)):
            positions = shape.positions
            assert len(positions) == chord.tone_count
            midis = [pitch_at(p) for p in positions]
            assert midis == sorted(midis) and len(set(midis)) == len(midis)
            assert [m % 12 for m in midis] == tones
            frets = [p.fret for p in positions]
            assert max(frets) - min(frets) <= 4
            strings = [p.string_idx for p in positions]
            assert all(a <= b for a, b in zip(strings, strings[1:]))
            assert pitch_at(positions[0]) % 12 == chord.root


def test_monotonic_in_stretch():
    def shapes_at(stretch):
        try:
            return as_tuples(generate_shapes(AMIN7, StretchConfig(stretch)))
        except NoShapesError:
            return set()

    for d in range(0, 6):
        assert shapes_at(d) <= shapes_at(d + 1)
        assert shapes_at(d) == brute_force_shapes(9, (3, 4, 3), d)


def test_deterministic_order_and_dedup():
    first = generate_shapes(AMIN7, StretchConfig(4))
    second = generate_shapes(AMIN7, StretchConfig(4))
    assert first == second
    tuples = [tuple(s.positions) for s in first]
    assert len(tuples) == len(set(tuples))
    assert tuples == sorted(tuples)
    roots = [(s.positions[0].string_idx, s.positions[0].fret) for s in first]
    assert roots == sorted(roots)


def test_expand_identity():
    shape = generate_shapes(AMIN7, StretchConfig(4))[0]
    nodes = expand_patterns(shape, 4, chord_index=2)
    assert len(nodes) == 1
    node = nodes[0]
    assert node.positions == shape.positions
    assert node.chord_index == 2
    assert node.shape_ref == shape.fingerprint


def test_expand_cycles():
    shape = generate_shapes(AMIN7, StretchConfig(4))[0]
    (node,) = expand_patterns(shape, 8)
    assert len(node.positions) == 8
    for position in shape.positions:
        assert node.positions.count(position) == 2
    assert node.positions[:4] == shape.positions
    # triad cycling wraps mid-pattern
    triad_shape = generate_shapes(parse_chord_symbol("Cmaj"), StretchConfig(4))[0]
    (triad_node,) = expand_patterns(triad_shape, 4)
    assert triad_node.positions == triad_shape.positions + triad_shape.positions[:1]


def test_expand_too_short():
    shape = generate_shapes(AMIN7, StretchConfig(4))[0]
    with pytest.raises(PatternTooShortError):
        expand_patterns(shape, 3)


def test_pattern_positions_are_chord_tones():
    for chord in (AMIN7, D7):
        tones = set(chord_tones(chord))
        for shape in generate_shapes(chord, StretchConfig(4)):
            for node in expand_patterns(shape, 7):
                assert {pitch_at(p) % 12 for p in node.positions} <= tones


def test_fingerprint_transposition_invariant():
    base = (FretPosition(0, 5), FretPosition(0, 8), FretPosition(1, 7), FretPosition(2, 5))
    up_two = tuple(FretPosition(p.string_idx, p.fret + 2) for p in base)
    assert shape_fingerprint("min7", base) == shape_fingerprint("min7", up_two)
    assert shape_fingerprint("min7", base) != shape_fingerprint("7", base)
    shifted_strings = tuple(FretPosition(p.string_idx + 1, p.fret) for p in base)
    assert shape_fingerprint("min7", base) == shape_fingerprint("min7", shifted_strings)


def test_fingerprints_are_16_hex_chars():
    for shape in generate_shapes(D7, StretchConfig(4)):
        assert len(shape.fingerprint) == 16
        assert all(c in "0123456789abcdef" for c in shape.fingerprint)


def test_stretch_config_validation():
    with pytest.raises(ValueError):
        StretchConfig(-1)
    assert StretchConfig().max_stretch == 4
