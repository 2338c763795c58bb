"""Executable correspondences: the 1-to-2 map and both stretch bijections."""
import pytest

from hexdomino import (
    CLASS_PRESETS,
    CapExceeded,
    Tile,
    Tiling,
    enumerate_single_strip,
    enumerate_tilings,
    fibonacci_comb,
    lemma2_from_single,
    lemma2_to_single,
    lemma3_from_single,
    lemma3_to_single,
    parse_tokens,
    tetranacci,
    thm2_map,
    thm2_verify,
    to_tokens,
)


def single_tokens(single):
    return " ".join(f"{t.kind}{t.location}" for t in single.tiles)


def test_single_strip_counts():
    assert sum(1 for _ in enumerate_single_strip(0)) == 1
    assert sum(1 for _ in enumerate_single_strip(2)) == 2
    assert sum(1 for _ in enumerate_single_strip(5)) == 8
    for length in range(15):
        assert sum(1 for _ in enumerate_single_strip(length)) == fibonacci_comb(length)


def test_single_strip_golden_order_n3():
    assert [single_tokens(s) for s in enumerate_single_strip(3)] == [
        "S1 S2 S3",
        "S1 D3",
        "D2 S3",
    ]


def test_single_strip_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_single_strip(25))


def test_thm2_map_square_case():
    first, second = thm2_map(parse_tokens("S1 S2 S3 S4 S5 S6", 6))
    assert to_tokens(first) == "S1 S2 S3 S4 S5 S6 S7"
    assert to_tokens(second) == "S1 S2 S3 S4 S5 I7"


def test_thm2_map_inclined_case():
    first, second = thm2_map(parse_tokens("S1 S2 S3 S4 I6", 6))
    assert to_tokens(first) == "S1 S2 S3 S4 I6 S7"
    assert to_tokens(second) == "S1 S2 S3 S4 S6 H7"


def test_thm2_map_stacked_horizontal_case():
    first, second = thm2_map(parse_tokens("S1 S2 H5 H6", 6))
    assert to_tokens(first) == "S1 S2 H5 H6 S7"
    assert (second.length, to_tokens(second)) == (2, "S1 S2")


def test_thm2_map_horizontal_over_square_case():
    first, second = thm2_map(parse_tokens("S1 S2 S3 S5 H6", 6))
    assert to_tokens(first) == "S1 S2 S3 S5 H6 S7"
    assert to_tokens(second) == "S1 S2 S3 H6 H7"


def test_thm2_map_rejects_short_inputs():
    with pytest.raises(ValueError):
        thm2_map(parse_tokens("S1 S2 S3", 3))


def test_thm2_outputs_never_collide():
    seen = set()
    for tiling in enumerate_tilings(8):
        first, second = thm2_map(tiling)
        for out in (first, second):
            key = (out.length, to_tokens(out))
            assert key not in seen
            seen.add(key)
    assert len(seen) == 2 * tetranacci(8)


def test_thm2_verify_pinned_sizes():
    report = thm2_verify(6)
    assert report.ok
    assert (report.inputs, report.outputs, report.expected_total) == (15, 30, 30)
    assert report.by_length == {6: tetranacci(6), 1: tetranacci(1)}
    assert thm2_verify(9).outputs == 216
    assert thm2_verify(12).ok


def test_thm2_verify_range_guard():
    with pytest.raises(ValueError):
        thm2_verify(5)
    with pytest.raises(ValueError):
        thm2_verify(4, extended=True)


def test_thm2_verify_extension_holds_at_n5():
    # below the stated range, but the stacked case lands on the empty tiling
    report = thm2_verify(5, extended=True)
    assert report.ok
    assert report.outputs == 16


def test_lemma2_examples():
    assert single_tokens(lemma2_to_single(parse_tokens("S1 S2 S3", 3))) == "S1 S2 S3"
    assert single_tokens(lemma2_to_single(parse_tokens("I2 I4", 4))) == "D2 D4"
    assert single_tokens(lemma2_to_single(parse_tokens("S1 I3 S4", 4))) == "S1 D3 S4"


def test_lemma2_rejects_horizontal():
    with pytest.raises(ValueError):
        lemma2_to_single(parse_tokens("H3 H4", 4))


def test_lemma2_round_trip_and_image():
    for n in range(13):
        image = set()
        domain = 0
        for tiling in enumerate_tilings(n, CLASS_PRESETS["no-horizontal"]):
            domain += 1
            single = lemma2_to_single(tiling)
            assert lemma2_from_single(single) == tiling
            image.add(single)
        assert len(image) == domain == fibonacci_comb(n)
        assert image == set(enumerate_single_strip(n))


def test_lemma3_examples():
    assert single_tokens(lemma3_to_single(parse_tokens("I2 I4 I6", 6))) == "S1 S2 S3"
    assert single_tokens(lemma3_to_single(parse_tokens("H3 H4 I6", 6))) == "D2 S3"


def test_lemma3_rejects_squares_and_odd_length():
    with pytest.raises(ValueError):
        lemma3_to_single(parse_tokens("S1 S2", 2))
    with pytest.raises(ValueError):
        lemma3_to_single(parse_tokens("S1 I3", 3))


def test_lemma3_parity_assertions():
    # impossible-for-valid-input states trip assertions, not soft errors
    with pytest.raises(AssertionError):
        lemma3_to_single(Tiling.of(4, [Tile(3, "H"), Tile(4, "I")]))
    with pytest.raises(AssertionError):
        lemma3_to_single(Tiling.of(4, [Tile(3, "I"), Tile(4, "I")]))


def test_all_domino_tilings_never_use_left_inclined():
    for n in range(0, 9):
        for tiling in enumerate_tilings(2 * n, CLASS_PRESETS["no-squares"]):
            assert all(tile.tile_class != "left-inclined" for tile in tiling.tiles)


def test_lemma3_round_trip_and_image():
    for n in range(9):
        image = set()
        domain = 0
        for tiling in enumerate_tilings(2 * n, CLASS_PRESETS["no-squares"]):
            domain += 1
            single = lemma3_to_single(tiling)
            assert single.length == n
            assert lemma3_from_single(single) == tiling
            image.add(single)
        assert len(image) == domain == fibonacci_comb(n)
        assert image == set(enumerate_single_strip(n))


def test_lemma_inverses_from_single_side():
    for n in range(9):
        for single in enumerate_single_strip(n):
            assert lemma2_to_single(lemma2_from_single(single)) == single
            assert lemma3_to_single(lemma3_from_single(single)) == single
