"""Brute-force enumeration of double-strip tilings, with class restrictions.

Enumeration recurses on the lowest uncovered cell c.  At most one cell beyond
the frontier can already be covered: placing Horizontal@(c+2) covers c and c+2
while leaving c+1 free, and no other move skips a cell.  The recursion state
is therefore just (c, flag) where the flag says "cell c+1 is already covered".
Canonical order tries Square@c, then Inclined@(c+1), then Horizontal@(c+2).

Counting and partition walks share the same recursion but never materialize
tilings, which keeps exhaustive oracles affordable at the 24-cell default cap
(about 3.9 million tilings).
"""
from __future__ import annotations

import os
from collections.abc import Iterator
from dataclasses import dataclass

from .strip_model import (
    ALL_CLASSES,
    HORIZONTAL,
    LEFT_INCLINED,
    RIGHT_INCLINED,
    SQUARE,
    Tile,
    Tiling,
)

DEFAULT_MAX_CELLS = 24
MAX_CELLS_ENV = "HEXDOMINO_MAX_N"

CLASS_PRESETS: dict[str, frozenset[str]] = {
    "all": ALL_CLASSES,
    "no-horizontal": frozenset({SQUARE, RIGHT_INCLINED, LEFT_INCLINED}),
    "no-squares": frozenset({RIGHT_INCLINED, LEFT_INCLINED, HORIZONTAL}),
    "squares-right": frozenset({SQUARE, RIGHT_INCLINED}),
}


class CapExceeded(ValueError):
    """Raised when an enumeration request exceeds the configured cell cap."""


def max_cells() -> int:
    """Enumeration cap in cells; override with the HEXDOMINO_MAX_N variable."""
    raw = os.environ.get(MAX_CELLS_ENV)
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_CELLS_ENV} must be an integer, got {raw!r}") from None


def _check_size(n: int, cap: int | None) -> None:
    if n < 0:
        raise ValueError(f"strip length must be >= 0, got {n}")
    limit = max_cells() if cap is None else cap
    if n > limit:
        raise CapExceeded(f"strip length {n} exceeds the enumeration cap {limit}")


def _class_set(classes) -> frozenset[str]:
    class_set = frozenset(classes)
    if not class_set:
        raise ValueError("tile class set must be non-empty")
    unknown = class_set - ALL_CLASSES
    if unknown:
        raise ValueError(f"unknown tile classes {sorted(unknown)}")
    return class_set


def enumerate_tilings(n: int, classes=ALL_CLASSES, cap: int | None = None) -> Iterator[Tiling]:
    """Yield every tiling of the n-cell strip using allowed tile classes only.

    Canonical order; each tiling appears exactly once.  Restriction prunes at
    choice time rather than filtering a full enumeration afterwards.
    """
    _check_size(n, cap)
    class_set = _class_set(classes)
    allow_square = SQUARE in class_set
    allow_horizontal = HORIZONTAL in class_set
    tiles: list[Tile] = []

    def walk(c: int, next_covered: bool) -> Iterator[Tiling]:
        if c > n:
            yield Tiling.of(n, tiles)
            return
        if allow_square:
            tiles.append(Tile(c, "S"))
            yield from walk(c + 2 if next_covered else c + 1, False)
            tiles.pop()
        if not next_covered and c + 1 <= n:
            inclined = RIGHT_INCLINED if (c + 1) % 2 == 0 else LEFT_INCLINED
            if inclined in class_set:
                tiles.append(Tile(c + 1, "I"))
                yield from walk(c + 2, False)
                tiles.pop()
        if allow_horizontal and c + 2 <= n:
            tiles.append(Tile(c + 2, "H"))
            yield from walk(c + 3, False) if next_covered else walk(c + 1, True)
            tiles.pop()

    return walk(1, False)


def count_by_enumeration(n: int, classes=ALL_CLASSES, cap: int | None = None) -> int:
    """Number of tilings, by walking the full enumeration tree (no DP)."""
    _check_size(n, cap)
    class_set = _class_set(classes)
    allow_square = SQUARE in class_set
    allow_horizontal = HORIZONTAL in class_set
    allow_right = RIGHT_INCLINED in class_set
    allow_left = LEFT_INCLINED in class_set

    def walk(c: int, next_covered: bool) -> int:
        if c > n:
            return 1
        total = 0
        if allow_square:
            total += walk(c + 2, False) if next_covered else walk(c + 1, False)
        if not next_covered and c + 1 <= n:
            if allow_right if (c + 1) % 2 == 0 else allow_left:
                total += walk(c + 2, False)
        if allow_horizontal and c + 2 <= n:
            total += walk(c + 3, False) if next_covered else walk(c + 1, True)
        return total

    return walk(1, False)


def partition_by_first(n: int, classes, cap: int | None = None) -> dict[int | None, int]:
    """Group all tilings of the n-cell strip by the first tile of given classes.

    Keys are the minimal location of a tile whose class lies in `classes`, or
    None when no such tile occurs.  Counts sum to the unrestricted total.
    Placement order can disagree with location order (a horizontal placed at
    the frontier lands above a later square), so the walk folds a running
    minimum instead of taking the first placement.
    """
    _check_size(n, cap)
    class_set = _class_set(classes)
    track_square = SQUARE in class_set
    track_horizontal = HORIZONTAL in class_set
    track_right = RIGHT_INCLINED in class_set
    track_left = LEFT_INCLINED in class_set
    groups: dict[int | None, int] = {}

    def fold(best: int | None, location: int) -> int:
        return location if best is None else min(best, location)

    def walk(c: int, next_covered: bool, best: int | None) -> None:
        if c > n:
            groups[best] = groups.get(best, 0) + 1
            return
        walk(c + 2 if next_covered else c + 1, False, fold(best, c) if track_square else best)
        if not next_covered and c + 1 <= n:
            tracked = track_right if (c + 1) % 2 == 0 else track_left
            walk(c + 2, False, fold(best, c + 1) if tracked else best)
        if c + 2 <= n:
            h_best = fold(best, c + 2) if track_horizontal else best
            if next_covered:
                walk(c + 3, False, h_best)
            else:
                walk(c + 1, True, h_best)
        return

    walk(1, False, None)
    return groups


BREAKABLE = "breakable"
INCLINED_CROSS = "inclined"
BOTH_HORIZONTALS = "both-horizontals"
LOW_HORIZONTAL = "low-horizontal"
HIGH_HORIZONTAL = "high-horizontal"


@dataclass(frozen=True)
class CrossingDescriptor:
    """How the middle diagonal of an even-length tiling is crossed.

    kind is one of breakable / inclined / both-horizontals / low-horizontal /
    high-horizontal.  For a lone crossing horizontal, `sub` records the kind
    (square or horizontal) of the tile at cell d (low) or d+1 (high), the
    sub-conditioning of the diagonal-decomposition argument.
    """
    kind: str
    sub: str | None = None

    @property
    def key(self) -> str:
        return self.kind if self.sub is None else f"{self.kind}:{self.sub}"


def classify_diagonal(tiling: Tiling) -> CrossingDescriptor:
    """Classify the middle diagonal d = n of a valid 2n-cell tiling.

    The only tiles that can cross diagonal d are Inclined@(d+1),
    Horizontal@(d+1), and Horizontal@(d+2); an inclined crossing excludes both
    horizontals because they would collide on cell d or d+1.
    """
    if tiling.length % 2 != 0:
        raise ValueError(f"classify_diagonal needs an even length, got {tiling.length}")
    d = tiling.length // 2
    by_location = {t.location: t for t in tiling.tiles}

    def covers(cell: int) -> Tile:
        for tile in tiling.tiles:
            if tile.location >= cell and cell in _tile_cells(tile):
                return tile
        raise AssertionError(f"cell {cell} uncovered in a supposedly valid tiling")

    inclined = by_location.get(d + 1)
    if inclined is not None and inclined.kind == "I":
        return CrossingDescriptor(INCLINED_CROSS)
    low = by_location.get(d + 1)
    high = by_location.get(d + 2)
    has_low = low is not None and low.kind == "H"
    has_high = high is not None and high.kind == "H"
    if has_low and has_high:
        return CrossingDescriptor(BOTH_HORIZONTALS)
    if has_low:
        kind = covers(d).kind
        assert kind in ("S", "H")
        return CrossingDescriptor(LOW_HORIZONTAL, "square" if kind == "S" else "horizontal")
    if has_high:
        kind = covers(d + 1).kind
        assert kind in ("S", "H")
        return CrossingDescriptor(HIGH_HORIZONTAL, "square" if kind == "S" else "horizontal")
    return CrossingDescriptor(BREAKABLE)


def _tile_cells(tile: Tile) -> tuple[int, ...]:
    if tile.kind == "S":
        return (tile.location,)
    if tile.kind == "I":
        return (tile.location - 1, tile.location)
    return (tile.location - 2, tile.location)


def histogram_by_descriptor(n: int, cap: int | None = None) -> dict[CrossingDescriptor, int]:
    """Crossing-descriptor counts over all tilings of the 2n-cell strip."""
    if n < 0:
        raise ValueError(f"half-length must be >= 0, got {n}")
    histogram: dict[CrossingDescriptor, int] = {}
    for tiling in enumerate_tilings(2 * n, cap=cap):
        descriptor = classify_diagonal(tiling)
        histogram[descriptor] = histogram.get(descriptor, 0) + 1
    return histogram
