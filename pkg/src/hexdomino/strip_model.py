"""Hexagonal double-strip geometry: cells, tiles, tilings, diagonals.

The strip has n cells numbered 1..n; odd cells form the lower row, even cells
the upper row.  Two cells are adjacent when their indices differ by 1 (between
rows) or by 2 (within a row).  A tile is identified by its kind and location,
the greatest cell it covers:

    Square     S@k covers {k}          (k >= 1)
    Inclined   I@k covers {k-1, k}     (k >= 2; right-inclined iff k even)
    Horizontal H@k covers {k-2, k}     (k >= 3; both cells in one row)

Diagonal d separates cells {1..d} from {d+1..n}; it is breakable when no tile
covers cells on both sides.
"""
from __future__ import annotations

from dataclasses import dataclass

SQUARE = "square"
RIGHT_INCLINED = "right-inclined"
LEFT_INCLINED = "left-inclined"
HORIZONTAL = "horizontal"
ALL_CLASSES = frozenset({SQUARE, RIGHT_INCLINED, LEFT_INCLINED, HORIZONTAL})
DOMINO_CLASSES = frozenset({RIGHT_INCLINED, LEFT_INCLINED, HORIZONTAL})

_MIN_LOCATION = {"S": 1, "I": 2, "H": 3}


class ParseError(ValueError):
    """Raised by parse_tokens on malformed or non-tiling input."""


class UnbreakableError(ValueError):
    """Raised by split_at when a tile crosses the requested diagonal."""


@dataclass(frozen=True, order=True)
class Tile:
    location: int
    kind: str  # "S", "I", or "H"

    def __post_init__(self) -> None:
        if self.kind not in _MIN_LOCATION:
            raise ValueError(f"unknown tile kind {self.kind!r}")
        if self.location < _MIN_LOCATION[self.kind]:
            raise ValueError(
                f"{self.kind} tile location must be >= {_MIN_LOCATION[self.kind]}, "
                f"got {self.location}"
            )

    @property
    def tile_class(self) -> str:
        if self.kind == "S":
            return SQUARE
        if self.kind == "H":
            return HORIZONTAL
        return RIGHT_INCLINED if self.location % 2 == 0 else LEFT_INCLINED

    def __str__(self) -> str:
        return f"{self.kind}{self.location}"


def cells_of(tile: Tile) -> frozenset[int]:
    """The set of cells the tile covers."""
    if tile.kind == "S":
        return frozenset({tile.location})
    if tile.kind == "I":
        return frozenset({tile.location - 1, tile.location})
    return frozenset({tile.location - 2, tile.location})


@dataclass(frozen=True)
class Tiling:
    length: int
    tiles: tuple[Tile, ...]

    @classmethod
    def of(cls, length: int, tiles) -> "Tiling":
        """Canonical constructor: sorts tiles by ascending location."""
        return cls(length, tuple(sorted(tiles, key=lambda t: t.location)))


def validate(tiling: Tiling) -> list[str]:
    """Return the list of invariant violations; empty means the tiling is valid.

    Each violation names the offending cell or tile.
    """
    violations: list[str] = []
    if tiling.length < 0:
        return [f"length {tiling.length} is negative"]
    locations = [t.location for t in tiling.tiles]
    if locations != sorted(locations):
        violations.append("tiles are not in ascending location order")
    seen_locations: set[int] = set()
    covered: dict[int, Tile] = {}
    for tile in tiling.tiles:
        if tile.location in seen_locations:
            violations.append(f"duplicate location {tile.location}")
        seen_locations.add(tile.location)
        for cell in cells_of(tile):
            if cell > tiling.length:
                violations.append(f"tile {tile} covers cell {cell} beyond length {tiling.length}")
            elif cell in covered:
                violations.append(f"cell {cell} covered by both {covered[cell]} and {tile}")
            else:
                covered[cell] = tile
    for cell in range(1, tiling.length + 1):
        if cell not in covered:
            violations.append(f"cell {cell} uncovered")
    return violations


def to_tokens(tiling: Tiling) -> str:
    """Space-separated `S<k>`/`I<k>`/`H<k>` tokens in ascending k; "" for n = 0."""
    return " ".join(str(t) for t in tiling.tiles)


def parse_tokens(text: str, expected_length: int) -> Tiling:
    """Inverse of to_tokens; validates the result against expected_length."""
    tiles: list[Tile] = []
    for word in text.split():
        kind, digits = word[:1], word[1:]
        if kind not in _MIN_LOCATION or not digits.isdigit():
            raise ParseError(f"malformed token {word!r}")
        try:
            tiles.append(Tile(int(digits), kind))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    for a, b in zip(tiles, tiles[1:]):
        if a.location >= b.location:
            raise ParseError(
                f"locations must be strictly ascending, got {a} before {b}"
            )
    tiling = Tiling(expected_length, tuple(tiles))
    violations = validate(tiling)
    if violations:
        raise ParseError("; ".join(violations))
    return tiling


def tile_at(tiling: Tiling, cell: int) -> Tile:
    """The unique tile covering the given cell of a valid tiling."""
    if not 1 <= cell <= tiling.length:
        raise ValueError(f"cell {cell} out of range 1..{tiling.length}")
    for tile in tiling.tiles:
        if cell in cells_of(tile):
            return tile
    raise ValueError(f"cell {cell} is uncovered")


def is_breakable(tiling: Tiling, d: int) -> bool:
    """True iff no tile covers both a cell <= d and a cell > d."""
    if not 0 <= d <= tiling.length:
        raise ValueError(f"diagonal {d} out of range 0..{tiling.length}")
    for tile in tiling.tiles:
        cells = cells_of(tile)
        if min(cells) <= d < max(cells):
            return False
    return True


def split_at(tiling: Tiling, d: int) -> tuple[Tiling, Tiling]:
    """Split a tiling at a breakable diagonal into length-d and length-(n-d) parts.

    Suffix cells are re-indexed by subtracting d; shape legality depends only
    on index distances, so shifted tiles stay well formed even though row
    membership flips when d is odd.
    """
    if not is_breakable(tiling, d):
        raise UnbreakableError(f"diagonal {d} is not breakable")
    prefix = tuple(t for t in tiling.tiles if t.location <= d)
    suffix = tuple(Tile(t.location - d, t.kind) for t in tiling.tiles if t.location > d)
    return Tiling(d, prefix), Tiling(tiling.length - d, suffix)


def first_tile_of_class(tiling: Tiling, classes) -> int | None:
    """Minimal location among tiles whose class is in `classes`, or None.

    `classes` is any iterable drawn from {square, right-inclined,
    left-inclined, horizontal}.
    """
    class_set = frozenset(classes)
    unknown = class_set - ALL_CLASSES
    if unknown:
        raise ValueError(f"unknown tile classes {sorted(unknown)}")
    locations = [t.location for t in tiling.tiles if t.tile_class in class_set]
    return min(locations) if locations else None


_RENDER_LETTER = {SQUARE: "S", RIGHT_INCLINED: "R", LEFT_INCLINED: "L", HORIZONTAL: "H"}


def render_ascii(tiling: Tiling) -> str:
    """Two-line rendering: upper row (even cells) above lower row (odd cells).

    Each cell shows the covering tile's class letter and location, e.g. [R2].
    """
    covering: dict[int, Tile] = {}
    for tile in tiling.tiles:
        for cell in cells_of(tile):
            covering[cell] = tile
    def row(cells: range) -> str:
        return " ".join(
            f"[{_RENDER_LETTER[covering[c].tile_class]}{covering[c].location}]" for c in cells
        )
    upper = row(range(2, tiling.length + 1, 2))
    lower = row(range(1, tiling.length + 1, 2))
    return f"{upper}\n{lower}"
