"""Young diagrams in rotated coordinates.

A partition is given by its column heights ``[h_1, h_2, ...]`` (weakly
decreasing).  The box in row ``r`` of column ``s`` (both 1-based) becomes the
cell ``(c, j) = (s - r, r + s - 2)``: the top box is ``(0, 0)``, a step to the
SW neighbour adds ``(-1, 1)`` and a step to the SE neighbour adds ``(1, 1)``.
``c`` is the column index in the rotated picture and ``j`` the depth.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class DiagramError(ValueError):
    """Raised for malformed partitions or cells outside a diagram."""


class Cell(NamedTuple):
    c: int
    j: int

    def __add__(self, other):  # type: ignore[override]
        return Cell(self.c + other[0], self.j + other[1])


STANDARD_CLASSES = ("internal", "external")
MIXED_CLASSES = ("central", "right-medial", "left-medial", "right-peripheral", "left-peripheral")
GROWTH_TYPES = ("I_alpha", "I_beta", "II_alpha", "II_beta", "III", "IV", "X")


@dataclass(frozen=True)
class CellClass:
    standard_class: str
    mixed_class: str
    growth_type: str


@dataclass(frozen=True)
class YoungDiagram:
    heights: tuple[int, ...]

    def __post_init__(self):
        h = tuple(self.heights)
        if not h:
            raise DiagramError("a partition needs at least one column")
        if any(not isinstance(x, int) or x < 1 for x in h):
            raise DiagramError(f"column heights must be positive integers: {list(h)}")
        if any(a < b for a, b in zip(h, h[1:])):
            raise DiagramError(f"column heights must be weakly decreasing: {list(h)}")
        object.__setattr__(self, "heights", h)

    @classmethod
    def from_partition(cls, heights: Iterable[int]) -> "YoungDiagram":
        return cls(tuple(heights))

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        """Parse the ``"4,4,2"`` text format."""
        parts = [p.strip() for p in text.strip().strip("[]()").split(",") if p.strip()]
        try:
            heights = [int(p) for p in parts]
        except ValueError as exc:
            raise DiagramError(f"cannot parse diagram {text!r}") from exc
        return cls.from_partition(heights)

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset(
            Cell(s - r, r + s - 2)
            for s, h in enumerate(self.heights, start=1)
            for r in range(1, h + 1)
        )

    @cached_property
    def basis(self) -> tuple[Cell, ...]:
        """Cells in the canonical (lexicographic) basis order."""
        return tuple(sorted(self.cells))

    @cached_property
    def index(self) -> dict[Cell, int]:
        return {cell: k for k, cell in enumerate(self.basis)}

    @property
    def n(self) -> int:
        return sum(self.heights)

    @property
    def c_l(self) -> int:
        return 1 - self.heights[0]

    @property
    def c_r(self) -> int:
        return len(self.heights) - 1

    @cached_property
    def columns(self) -> dict[int, tuple[int, ...]]:
        """Depths of the cells of each column, top to bottom."""
        cols: dict[int, list[int]] = {}
        for c, j in self.basis:
            cols.setdefault(c, []).append(j)
        return {c: tuple(js) for c, js in cols.items()}

    def top(self, c: int) -> int:
        return self.columns[c][0]

    def bottom(self, c: int) -> int:
        return self.columns[c][-1]

    @property
    def b_0(self) -> int:
        return self.bottom(0)

    @property
    def central_count(self) -> int:
        """Number of cells in the central column (side of the Durfee square)."""
        return len(self.columns[0])

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self.cells

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return ",".join(map(str, self.heights))

    def to_dict(self) -> dict:
        return {"heights": list(self.heights), "cells": [list(c) for c in self.basis]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "YoungDiagram":
        d = cls.from_partition(data["heights"])
        if "cells" in data and sorted(map(tuple, data["cells"])) != list(d.basis):
            raise DiagramError("cell list does not match heights")
        return d

    def require(self, cell) -> Cell:
        cell = Cell(*cell)
        if cell not in self.cells:
            raise DiagramError(f"cell {tuple(cell)} is not in diagram [{self}]")
        return cell


def from_partition(heights: Sequence[int]) -> YoungDiagram:
    return YoungDiagram.from_partition(heights)


def is_internal(d: YoungDiagram, cell) -> bool:
    c, j = d.require(cell)
    return (c + 1, j + 1) in d


def mixed_class(c: int) -> str:
    if c == 0:
        return "central"
    if c == 1:
        return "right-medial"
    if c == -1:
        return "left-medial"
    return "right-peripheral" if c > 1 else "left-peripheral"


def growth_type(d: YoungDiagram, cell) -> str:
    """Type I-IV / X of a cell; thresholds compare against b_0/2 and b_0/4 exactly."""
    i, j = d.require(cell)
    half, quarter = Fraction(d.b_0, 2), Fraction(d.b_0, 4)
    if i == 0:
        return "I_alpha" if j <= half else "I_beta"
    if abs(i) == 1:
        return "II_alpha" if j <= half else "II_beta"
    if abs(i) > quarter:
        return "III"
    if j - abs(i) > half:
        return "IV"
    return "X"


def classify(d: YoungDiagram, cell) -> CellClass:
    cell = d.require(cell)
    return CellClass(
        standard_class="internal" if is_internal(d, cell) else "external",
        mixed_class=mixed_class(cell.c),
        growth_type=growth_type(d, cell),
    )


# -- cell sets -------------------------------------------------------------


def rectangle(d: YoungDiagram, sw, ne) -> frozenset[Cell]:
    """Cells between the SW corner ``sw`` and the NE corner ``ne``."""
    (i1, j1), (i2, j2) = sw, ne
    if i1 > i2 or i1 + j1 < i2 + j2:
        raise DiagramError(f"{tuple(ne)} is not NNE of {tuple(sw)}")
    return frozenset(
        cell for cell in d.cells if i1 <= cell.c <= i2 and i2 + j2 <= cell.c + cell.j <= i1 + j1
    )


def accessible_rectangles(d: YoungDiagram, cell) -> list[frozenset[Cell]]:
    """Accessible rectangles A_1, A_2, ... of an external cell ``(i, j)``.

    A_1 is the part of column i+1 strictly above depth j (it may be empty;
    its NW corner is then the lattice point ``(i+1, |i+1|)``).  Each later
    rectangle has SE corner NW(A_m) + (-1, -1) and is pushed to the diagram
    boundary: up its own column and down-left along its SW diagonal.  The
    list ends when the next SE corner falls outside the diagram.
    """
    i, j = d.require(cell)
    if is_internal(d, (i, j)):
        raise DiagramError(f"cell {(i, j)} is internal")
    first = frozenset(Cell(i + 1, l) for l in range(abs(i + 1), j, 2) if (i + 1, l) in d)
    rects = [first]
    nw = Cell(i + 1, abs(i + 1))
    while True:
        se = nw + (-1, -1)
        if se not in d:
            return rects
        rect, nw = _pushed_rectangle(d, se)
        rects.append(rect)


def _pushed_rectangle(d: YoungDiagram, se: Cell) -> tuple[frozenset[Cell], Cell]:
    k0, l0 = se
    top = l0
    while (k0, top - 2) in d:
        top -= 2
    sw = se
    while sw + (-1, 1) in d:
        sw = sw + (-1, 1)
    lo, hi = k0 + top, k0 + l0
    rect = frozenset(c for c in d.cells if sw.c <= c.c <= k0 and lo <= c.c + c.j <= hi)
    return rect, Cell(sw.c, lo - sw.c)


@dataclass(frozen=True)
class Ray:
    """Cells of a ray, listed from the seed outwards."""

    cells: tuple[Cell, ...]

    @property
    def top(self) -> Cell:
        return min(self.cells, key=lambda c: c.j)

    @property
    def bottom(self) -> Cell:
        return max(self.cells, key=lambda c: c.j)

    def __iter__(self):
        return iter(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def as_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)


# left and right rays climb the NW and NE diagonals; vertical rays go down
_RAY_STEPS = {"left": (-1, -1), "right": (1, -1), "vertical": (0, 2)}


def ray(d: YoungDiagram, cell, direction: str) -> Ray:
    """Maximal run of cells of ``d`` from ``cell`` along a ray.

    ``left`` is {k <= i, k - l = i - j}, ``right`` is {k >= i, k + l = i + j}
    and ``vertical`` is {k = i, l >= j}.  Each is contiguous in a Young
    diagram, so the run is walked cell by cell from the seed.
    """
    start = d.require(cell)
    try:
        step = _RAY_STEPS[direction]
    except KeyError:
        raise DiagramError(f"unknown ray direction {direction!r}") from None
    out = [start]
    while out[-1] + step in d:
        out.append(out[-1] + step)
    return Ray(tuple(out))


def try_square(d: YoungDiagram, j: int) -> frozenset[Cell]:
    """The V-shaped set {(0, j), (+-1, j-1), ..., (+-j/2, j/2)}."""
    if j < 0 or j % 2 or (0, j) not in d:
        raise DiagramError(f"(0, {j}) is not a central cell of [{d}]")
    cells = {Cell(0, j)}
    for m in range(1, j // 2 + 1):
        cells.add(Cell(m, j - m))
        cells.add(Cell(-m, j - m))
    return frozenset(cells)


def _alternate(d: YoungDiagram, first: Ray, first_kind: str, side: int, diagonal: str) -> list[Ray]:
    """Extend a ray family alternating between a diagonal and the vertical.

    After a vertical ray the next (diagonal) ray is seeded at its bottom
    shifted by ``(side, 1)``; after a diagonal ray the next (vertical) ray is
    seeded at its top shifted the same way.  The family stops at the first
    seed outside the diagram.
    """
    out, kind = [first], first_kind
    while True:
        if kind == "vertical":
            seed, kind = out[-1].bottom + (side, 1), diagonal
        else:
            seed, kind = out[-1].top + (side, 1), "vertical"
        if seed not in d:
            return out
        out.append(ray(d, seed, kind))


def accessible_sets_medial(d: YoungDiagram, cell) -> list[frozenset[Cell]]:
    """Accessible sets A_0, A_1, ... of a medial cell (1, j) or (-1, j).

    For (1, j): A_0 is the left ray of (0, j-1), then vertical and left rays
    alternate, stepping one column left each time.  Left-medial cells use
    the mirror image of the construction.
    """
    i, j = d.require(cell)
    if abs(i) != 1:
        raise DiagramError(f"cell {(i, j)} is not medial")
    if i == -1:
        sets = accessible_sets_medial(_mirror(d), (1, j))
        return [frozenset(Cell(-c, l) for c, l in s) for s in sets]
    first = ray(d, (0, j - 1), "left")
    return [r.as_set() for r in _alternate(d, first, "left", -1, "left")]


def accessible_sets_origin(d: YoungDiagram) -> tuple[list[frozenset[Cell]], list[frozenset[Cell]]]:
    """The B_m (leftwards) and C_m (rightwards) families of the origin cell.

    Both start with the vertical ray of (0, 0); B continues with left rays,
    C with right rays.
    """
    first = ray(d, (0, 0), "vertical")
    b = _alternate(d, first, "vertical", -1, "left")
    c = _alternate(d, first, "vertical", 1, "right")
    return [r.as_set() for r in b], [r.as_set() for r in c]


def _mirror(d: YoungDiagram) -> YoungDiagram:
    """Conjugate partition: reflects the rotated picture through c = 0."""
    conj = [sum(1 for h in d.heights if h >= r) for r in range(1, d.heights[0] + 1)]
    return YoungDiagram(tuple(conj))
