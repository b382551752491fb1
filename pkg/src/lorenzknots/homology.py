"""Homological monodromy of Lorenz knots as products of transvections.

Cycles are integer vectors over the cell basis of a diagram (one core curve
per cell).  Both the standard surface and the mixed surface have the same
intersection table, so one form serves both; what differs is the order in
which the Dehn twists are applied.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from . import linalg
from .braid import NotAKnotError, is_knot
from .diagram import Cell, DiagramError, YoungDiagram

# <e_a | e_b> for b = a + offset
_PLUS = ((1, 1), (0, -2), (-1, 1))
_MINUS = ((1, -1), (0, 2), (-1, -1))


def pairing(a, b) -> int:
    """Intersection number of two core curves, from their cells."""
    off = (b[0] - a[0], b[1] - a[1])
    if off in _PLUS:
        return 1
    if off in _MINUS:
        return -1
    return 0


class CycleVector(Mapping[Cell, int]):
    """Sparse integer combination of cell classes; zero coefficients are dropped."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Cell, int] = defaultdict(int)
        for cell, x in items:
            acc[Cell(*cell)] += x
        self._coeffs = {c: x for c, x in acc.items() if x}

    @classmethod
    def of(cls, cells: Iterable, sign: int = 1) -> "CycleVector":
        return cls((c, sign) for c in cells)

    def __getitem__(self, cell) -> int:
        return self._coeffs.get(Cell(*cell), 0)

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self._coeffs))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __add__(self, other: "CycleVector") -> "CycleVector":
        return CycleVector(list(self.items()) + list(other.items()))

    def __sub__(self, other: "CycleVector") -> "CycleVector":
        return self + (-other)

    def __neg__(self) -> "CycleVector":
        return CycleVector((c, -x) for c, x in self.items())

    def __rmul__(self, k: int) -> "CycleVector":
        return CycleVector((c, k * x) for c, x in self.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, CycleVector):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        return " ".join(f"{x:+d}[{c},{j}]" for (c, j), x in self.items())

    @property
    def support(self) -> frozenset[Cell]:
        return frozenset(self._coeffs)

    def l1(self) -> int:
        return sum(abs(x) for x in self._coeffs.values())

    def to_dense(self, d: YoungDiagram) -> list[int]:
        out = [0] * d.n
        for cell, x in self._coeffs.items():
            if cell not in d.index:
                raise DiagramError(f"cell {tuple(cell)} is not in diagram [{d}]")
            out[d.index[cell]] = x
        return out

    @classmethod
    def from_dense(cls, d: YoungDiagram, v: Iterable[int]) -> "CycleVector":
        return cls(zip(d.basis, v))

    def to_list(self) -> list[list[int]]:
        return [[c, j, x] for (c, j), x in self.items()]


def basis_vector(d: YoungDiagram, cell) -> CycleVector:
    return CycleVector({d.require(cell): 1})


@dataclass(frozen=True)
class IntersectionForm:
    diagram: YoungDiagram
    matrix: tuple[tuple[int, ...], ...]

    def __call__(self, a: CycleVector, b: CycleVector) -> int:
        return sum(x * y * pairing(ca, cb) for ca, x in a.items() for cb, y in b.items())

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


def intersection_form(d: YoungDiagram) -> IntersectionForm:
    basis = d.basis
    return IntersectionForm(d, tuple(tuple(pairing(a, b) for b in basis) for a in basis))


def transvection(d: YoungDiagram, cell, v: CycleVector, inverse: bool = False) -> CycleVector:
    """Positive Dehn twist along ``cell`` (or its inverse) acting on ``v``."""
    a = d.require(cell)
    k = sum(x * pairing(c, a) for c, x in v.items())
    if not k:
        return v
    return v + CycleVector({a: -k if inverse else k})


# -- twist orders -----------------------------------------------------------


def standard_twist_order(d: YoungDiagram) -> list[Cell]:
    """Application order: columns right to left, each column bottom to top."""
    return [Cell(c, j) for c in range(d.c_r, d.c_l - 1, -1) for j in reversed(d.columns[c])]


def mixed_inverse_twist_order(d: YoungDiagram) -> list[Cell]:
    """Application order of the inverse twists composing h^-1 on the mixed surface.

    Central column first, then the left columns -1 .. c_l, then the right
    columns 1 .. c_r, every column top to bottom.  Left and right twists
    commute with each other, so only the position of the central block
    matters.
    """
    order = [Cell(0, j) for j in d.columns[0]]
    order += [Cell(c, j) for c in range(-1, d.c_l - 1, -1) for j in d.columns[c]]
    order += [Cell(c, j) for c in range(1, d.c_r + 1) for j in d.columns[c]]
    return order


def apply_twists(d: YoungDiagram, order: Iterable, v: CycleVector, inverse: bool = False) -> CycleVector:
    for cell in order:
        v = transvection(d, cell, v, inverse)
    return v


def twist_product_matrix(d: YoungDiagram, order: Iterable, inverse: bool = False) -> linalg.Matrix:
    """Matrix whose column k is the image of basis cell k under the twist sequence."""
    idx = d.index
    m = linalg.identity(d.n)
    for cell in order:
        a = d.require(cell)
        row_a = m[idx[a]]
        for off in _PLUS + _MINUS:
            nb = Cell(a.c - off[0], a.j - off[1])  # cells whose pairing with a is nonzero
            if nb not in idx:
                continue
            k = pairing(nb, a)
            if inverse:
                k = -k
            row_nb = m[idx[nb]]
            for col, x in enumerate(row_nb):
                if x:
                    row_a[col] += k * x
    return m


@dataclass(frozen=True)
class MonodromyMatrix:
    diagram: YoungDiagram
    rows: tuple[tuple[int, ...], ...]
    surface: str  # "standard" | "mixed"
    direction: str  # "forward" | "inverse"

    @property
    def n(self) -> int:
        return len(self.rows)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def image(self, v: CycleVector) -> CycleVector:
        return CycleVector.from_dense(self.diagram, linalg.matvec(self.rows, v.to_dense(self.diagram)))

    def power_image(self, v: CycleVector, t: int) -> CycleVector:
        for _ in range(t):
            v = self.image(v)
        return v

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "surface": self.surface,
            "direction": self.direction,
            "basis": [list(c) for c in self.diagram.basis],
            "rows": self.as_lists(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        head = ",".join(f"{c}:{j}" for c, j in self.diagram.basis)
        lines = ["basis," + head]
        for cell, row in zip(self.diagram.basis, self.rows):
            lines.append(f"{cell.c}:{cell.j}," + ",".join(map(str, row)))
        return "\n".join(lines) + "\n"


def _require_knot(d: YoungDiagram, allow_links: bool) -> None:
    if not allow_links and not is_knot(d):
        raise NotAKnotError(f"closure of [{d}] is a link, not a knot")


def standard_monodromy(d: YoungDiagram, allow_links: bool = False) -> MonodromyMatrix:
    _require_knot(d, allow_links)
    m = twist_product_matrix(d, standard_twist_order(d))
    return MonodromyMatrix(d, tuple(map(tuple, m)), "standard", "forward")


def mixed_inverse_monodromy(d: YoungDiagram, allow_links: bool = False) -> MonodromyMatrix:
    _require_knot(d, allow_links)
    m = twist_product_matrix(d, mixed_inverse_twist_order(d), inverse=True)
    return MonodromyMatrix(d, tuple(map(tuple, m)), "mixed", "inverse")


def mixed_monodromy(d: YoungDiagram, allow_links: bool = False) -> MonodromyMatrix:
    """Forward mixed monodromy, as the exact integer inverse of h^-1."""
    inv = mixed_inverse_monodromy(d, allow_links)
    m = linalg.exact_inverse(inv.as_lists())
    return MonodromyMatrix(d, tuple(map(tuple, m)), "mixed", "forward")


def mixed_forward_twist_order(d: YoungDiagram) -> list[Cell]:
    """Twist order of the forward mixed monodromy: reverse of the inverse order."""
    return list(reversed(mixed_inverse_twist_order(d)))


def monodromy(d: YoungDiagram, surface: str = "standard", inverse: bool = False) -> MonodromyMatrix:
    if surface == "standard":
        m = standard_monodromy(d)
        if inverse:
            inv = twist_product_matrix(d, reversed(standard_twist_order(d)), inverse=True)
            return MonodromyMatrix(d, tuple(map(tuple, inv)), "standard", "inverse")
        return m
    if surface == "mixed":
        return mixed_inverse_monodromy(d) if inverse else mixed_monodromy(d)
    raise ValueError(f"unknown surface {surface!r}")
