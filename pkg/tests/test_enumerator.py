"""Enumeration engine: canonical order, restricted families, partitions, crossings."""
import pytest

from hexdomino import (
    CLASS_PRESETS,
    DOMINO_CLASSES,
    HORIZONTAL,
    LEFT_INCLINED,
    SQUARE,
    CapExceeded,
    classify_diagonal,
    count_by_enumeration,
    enumerate_tilings,
    first_tile_of_class,
    histogram_by_descriptor,
    max_cells,
    parse_tokens,
    partition_by_first,
    tetranacci,
    thm3_expected_histogram,
    to_tokens,
    validate,
)

GOLDEN_N4 = [
    "S1 S2 S3 S4",
    "S1 S2 I4",
    "S1 I3 S4",
    "S1 S3 H4",
    "I2 S3 S4",
    "I2 I4",
    "S2 H3 S4",
    "H3 H4",
]


def test_golden_order_n4():
    assert [to_tokens(t) for t in enumerate_tilings(4)] == GOLDEN_N4


def test_table_counts():
    assert [count_by_enumeration(n) for n in range(9)] == [1, 1, 2, 4, 8, 15, 29, 56, 108]


def test_length_zero_is_exactly_the_empty_tiling():
    tilings = list(enumerate_tilings(0))
    assert len(tilings) == 1
    assert tilings[0].tiles == ()


def test_restricted_family_counts():
    assert count_by_enumeration(4, CLASS_PRESETS["squares-right"]) == 4
    assert count_by_enumeration(6, CLASS_PRESETS["no-squares"]) == 3
    assert count_by_enumeration(7, CLASS_PRESETS["no-squares"]) == 0
    # horizontal-free counts are Fibonacci: 8 at length 5, 13 at length 6
    assert count_by_enumeration(5, CLASS_PRESETS["no-horizontal"]) == 8
    assert count_by_enumeration(6, CLASS_PRESETS["no-horizontal"]) == 13


def test_every_enumerated_tiling_validates_and_is_unique():
    for n in range(9):
        seen = set()
        for tiling in enumerate_tilings(n):
            assert validate(tiling) == []
            key = to_tokens(tiling)
            assert key not in seen
            seen.add(key)
        assert len(seen) == tetranacci(n)


def test_enumeration_is_deterministic():
    first = [to_tokens(t) for t in enumerate_tilings(7)]
    second = [to_tokens(t) for t in enumerate_tilings(7)]
    assert first == second


def test_count_agrees_with_enumeration_length():
    for preset in CLASS_PRESETS.values():
        for n in range(8):
            assert count_by_enumeration(n, preset) == sum(1 for _ in enumerate_tilings(n, preset))


def test_pruned_enumeration_equals_filtered_full_enumeration():
    for name, preset in CLASS_PRESETS.items():
        for n in range(10):
            pruned = [to_tokens(t) for t in enumerate_tilings(n, preset)]
            filtered = [
                to_tokens(t)
                for t in enumerate_tilings(n)
                if all(tile.tile_class in preset for tile in t.tiles)
            ]
            assert pruned == filtered, f"{name} at n={n}"


def test_class_set_validation():
    with pytest.raises(ValueError):
        count_by_enumeration(4, frozenset())
    with pytest.raises(ValueError):
        count_by_enumeration(4, {"slanted"})
    with pytest.raises(ValueError):
        count_by_enumeration(-1)


def test_partition_by_first_domino_n5():
    groups = partition_by_first(5, DOMINO_CLASSES)
    assert groups == {None: 1, 2: 4, 3: 5, 4: 3, 5: 2}


def test_partition_horizontal_or_left_pin():
    groups = partition_by_first(6, {HORIZONTAL, LEFT_INCLINED})
    assert groups[4] == 3


def test_partition_totals_and_agreement_with_direct_scan():
    for classes in (DOMINO_CLASSES, frozenset({SQUARE}), frozenset({HORIZONTAL})):
        for n in range(9):
            groups = partition_by_first(n, classes)
            assert sum(groups.values()) == tetranacci(n)
            direct: dict = {}
            for tiling in enumerate_tilings(n):
                key = first_tile_of_class(tiling, classes)
                direct[key] = direct.get(key, 0) + 1
            assert groups == direct


def test_classify_diagonal_examples():
    assert classify_diagonal(parse_tokens("I2 I4", 4)).key == "breakable"
    assert classify_diagonal(parse_tokens("S1 I3 S4", 4)).key == "inclined"
    assert classify_diagonal(parse_tokens("H3 H4", 4)).key == "both-horizontals"
    assert classify_diagonal(parse_tokens("S2 H3 S4", 4)).key == "low-horizontal:square"
    assert classify_diagonal(parse_tokens("S1 S3 H4", 4)).key == "high-horizontal:square"


def test_classify_diagonal_horizontal_subcases():
    # d=3: lone crossing H@4, cell 3 itself under a (non-crossing) horizontal
    assert classify_diagonal(parse_tokens("H3 H4 S5 S6", 6)).key == "low-horizontal:horizontal"
    # d=3: lone crossing H@5, cell 4 under the non-crossing H@6
    assert classify_diagonal(parse_tokens("S1 S2 H5 H6", 6)).key == "high-horizontal:horizontal"
    # exhaustive cross-check over all length-6 tilings against the closed terms
    observed: dict = {}
    for tiling in enumerate_tilings(6):
        key = classify_diagonal(tiling).key
        observed[key] = observed.get(key, 0) + 1
    assert observed == thm3_expected_histogram(3)


def test_classify_rejects_odd_length():
    with pytest.raises(ValueError):
        classify_diagonal(parse_tokens("S1 S2 S3", 3))


def test_histogram_n2_exact():
    hist = {d.key: v for d, v in histogram_by_descriptor(2).items()}
    assert hist.get("breakable") == 4
    assert hist.get("inclined") == 1
    assert hist.get("both-horizontals") == 1
    assert hist.get("low-horizontal:square") == 1
    assert hist.get("high-horizontal:square") == 1
    assert hist.get("low-horizontal:horizontal", 0) == 0
    assert hist.get("high-horizontal:horizontal", 0) == 0


def test_histogram_total_is_t2n():
    assert sum(histogram_by_descriptor(4).values()) == 108
    for n in range(6):
        assert sum(histogram_by_descriptor(n).values()) == tetranacci(2 * n)


def test_histogram_matches_closed_terms():
    for n in range(2, 6):
        observed = {d.key: v for d, v in histogram_by_descriptor(n).items()}
        expected = thm3_expected_histogram(n)
        for key, value in expected.items():
            assert observed.get(key, 0) == value, f"{key} at n={n}"


def test_cap_default_and_violation():
    assert max_cells() == 24
    with pytest.raises(CapExceeded):
        list(enumerate_tilings(25))
    with pytest.raises(CapExceeded):
        count_by_enumeration(25)
    with pytest.raises(CapExceeded):
        partition_by_first(25, DOMINO_CLASSES)
    with pytest.raises(CapExceeded):
        histogram_by_descriptor(13)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("HEXDOMINO_MAX_N", "10")
    assert max_cells() == 10
    with pytest.raises(CapExceeded):
        count_by_enumeration(11)
    assert count_by_enumeration(10) == tetranacci(10)


def test_cap_env_rejects_garbage(monkeypatch):
    monkeypatch.setenv("HEXDOMINO_MAX_N", "plenty")
    with pytest.raises(ValueError):
        max_cells()


def test_cap_argument_overrides_env():
    assert count_by_enumeration(6, cap=6) == 29
    with pytest.raises(CapExceeded):
        count_by_enumeration(7, cap=6)
