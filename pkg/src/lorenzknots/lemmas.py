"""Closed-form images of basis cycles, checked against the twist matrices.

Every oracle here is assembled from the cell-set constructors of
:mod:`lorenzknots.diagram` only; the matrices are used solely on the other
side of the comparison.  Check names:

standard surface
    ``internal-shift``        h([i,j]) = [i+1, j+1] for internal cells
    ``external-rectangles``   h([i,j]) = sum over accessible rectangles, signs (-1)^m
mixed surface, inverse monodromy
    ``peripheral-shift``      h^-1 moves a peripheral cell one step towards the centre
    ``central-step``          h^-1([0,j] + [-1,j-1] + [1,j-1]) = [0,j-2]
    ``try-square-step``       h^-1(E_j) = E_{j-2}
    ``medial-rays``           h^-1 of a medial cell via alternating rays
    ``central-rays``          h^-1([0,j]), j >= 2, via the medial ray families
    ``origin-rays``           h^-1([0,0]) via the B and C families
    ``origin-square``         h^-2([0,0]) obtained by applying the closed forms termwise
    ``medial-square``         h^-2 of a right-medial cell: at most n cells, coefficients
                              +-1, support on or left of the NW diagonal through (0, j-1)
trajectories (type labels use the coordinate b_0)
    ``trajectory-III``, ``trajectory-IV``, ``trajectory-V_alpha``,
    ``trajectory-V_beta``, ``trajectory-origin``

:func:`published_forms` evaluates four statements exactly as printed in the
source material; they are known to fail and are reported separately.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable

from .diagram import (
    Cell,
    DiagramError,
    YoungDiagram,
    accessible_rectangles,
    accessible_sets_medial,
    accessible_sets_origin,
    growth_type,
    is_internal,
    try_square,
)
from .homology import CycleVector, basis_vector, mixed_inverse_monodromy, standard_monodromy


@dataclass(frozen=True)
class LemmaCheck:
    lemma: str
    cell: tuple[int, int] | None
    passed: bool
    expected: str
    actual: str

    def to_dict(self) -> dict:
        out = asdict(self)
        out["pass"] = out.pop("passed")
        out["cell"] = list(self.cell) if self.cell is not None else None
        return out


def _alternating(sets: Iterable[Iterable[Cell]], first_sign: int, start: int = 0, shift=(0, 0)) -> CycleVector:
    acc = CycleVector()
    for m, s in enumerate(sets):
        if m >= start:
            sign = first_sign if (m - start) % 2 == 0 else -first_sign
            acc = acc + CycleVector.of((c + shift for c in s), sign)
    return acc


# -- closed forms -------------------------------------------------------------


def standard_image(d: YoungDiagram, cell) -> CycleVector:
    """Closed-form image of a basis cycle under the standard monodromy."""
    i, j = d.require(cell)
    if is_internal(d, (i, j)):
        return basis_vector(d, (i + 1, j + 1))
    return _alternating(accessible_rectangles(d, (i, j)), -1)


def medial_inverse_image(d: YoungDiagram, cell) -> CycleVector:
    return _alternating(accessible_sets_medial(d, cell), 1)


def central_inverse_image(d: YoungDiagram, j: int) -> CycleVector:
    """Closed form for h^-1([0, j]) with j >= 2."""
    if j < 2:
        raise DiagramError("central closed form needs j >= 2")
    d.require((0, j))
    out = -CycleVector.of(try_square(d, j - 2))
    for side in (1, -1):
        out = out + _alternating(accessible_sets_medial(d, (side, j - 1)), 1, start=1)
    return out


def origin_inverse_image(d: YoungDiagram) -> CycleVector:
    b, c = accessible_sets_origin(d)
    return CycleVector.of(b[0]) + _alternating(b, -1, start=1) + _alternating(c, -1, start=1)


def inverse_image(d: YoungDiagram, cell) -> CycleVector:
    """Closed-form image of a basis cycle under the inverse mixed monodromy."""
    i, j = d.require(cell)
    if i >= 2:
        return basis_vector(d, (i - 1, j - 1))
    if i <= -2:
        return basis_vector(d, (i + 1, j - 1))
    if abs(i) == 1:
        return medial_inverse_image(d, (i, j))
    if j == 0:
        return origin_inverse_image(d)
    return central_inverse_image(d, j)


def inverse_image_of(d: YoungDiagram, v: CycleVector) -> CycleVector:
    """Extend :func:`inverse_image` linearly."""
    out = CycleVector()
    for cell, x in v.items():
        out = out + x * inverse_image(d, cell)
    return out


def oracle_image(d: YoungDiagram, cell, lemma: str) -> CycleVector:
    """Right-hand side of the named closed form for ``cell``.

    Raises :class:`DiagramError` when the cell is not of the class the
    closed form applies to.
    """
    i, j = d.require(cell)
    if lemma == "internal-shift":
        if not is_internal(d, (i, j)):
            raise DiagramError(f"cell {(i, j)} is external")
        return basis_vector(d, (i + 1, j + 1))
    if lemma == "external-rectangles":
        return _alternating(accessible_rectangles(d, (i, j)), -1)
    if lemma == "peripheral-shift":
        if abs(i) < 2:
            raise DiagramError(f"cell {(i, j)} is not peripheral")
        return inverse_image(d, (i, j))
    if lemma == "central-step":
        if i != 0 or j < 2:
            raise DiagramError(f"cell {(i, j)} is not a central cell below the origin")
        return basis_vector(d, (0, j - 2))
    if lemma == "try-square-step":
        if i != 0 or j < 2:
            raise DiagramError(f"cell {(i, j)} is not a central cell below the origin")
        return CycleVector.of(try_square(d, j - 2))
    if lemma == "medial-rays":
        if abs(i) != 1:
            raise DiagramError(f"cell {(i, j)} is not medial")
        return medial_inverse_image(d, (i, j))
    if lemma == "central-rays":
        if i != 0 or j < 2:
            raise DiagramError(f"cell {(i, j)} is not a central cell below the origin")
        return central_inverse_image(d, j)
    if lemma == "origin-rays":
        if (i, j) != (0, 0):
            raise DiagramError("the origin closed form only applies to (0, 0)")
        return origin_inverse_image(d)
    if lemma == "origin-square":
        if (i, j) != (0, 0):
            raise DiagramError("the origin closed form only applies to (0, 0)")
        return inverse_image_of(d, origin_inverse_image(d))
    if lemma == "medial-square":
        if i != 1:
            raise DiagramError(f"cell {(i, j)} is not right-medial")
        return inverse_image_of(d, medial_inverse_image(d, (i, j)))
    raise ValueError(f"unknown closed form {lemma!r}")


# -- type bookkeeping -----------------------------------------------------------


def try_square_decomposition(d: YoungDiagram, v: CycleVector) -> dict:
    """Rewrite ``v`` over the basis where each central cell (0, j) is replaced
    by its try square.  Keys are cells, or ``("E", j)`` for try squares."""
    out: dict = {}
    for j in sorted({c.j for c in v.support if c.c == 0}, reverse=True):
        x = v[(0, j)]
        out[("E", j)] = x
        v = v - x * CycleVector.of(try_square(d, j))
    out.update(v.items())
    return out


def basis_type(d: YoungDiagram, key) -> str:
    if key[0] == "E":
        return "V_alpha" if key[1] <= Fraction(d.b_0, 2) else "V_beta"
    return growth_type(d, key)


# -- verification ---------------------------------------------------------------


def _check(name, cell, expected, actual) -> LemmaCheck:
    return LemmaCheck(name, tuple(cell) if cell is not None else None, expected == actual, repr(expected), repr(actual))


def verify_lemmas(d: YoungDiagram) -> list[LemmaCheck]:
    """Compare every applicable closed form with the twist matrices of ``d``."""
    h = standard_monodromy(d)
    hinv = mixed_inverse_monodromy(d)
    out: list[LemmaCheck] = []
    quarter, half = Fraction(d.b_0, 4), Fraction(d.b_0, 2)

    for cell in d.basis:
        e = basis_vector(d, cell)
        name = "internal-shift" if is_internal(d, cell) else "external-rectangles"
        out.append(_check(name, cell, oracle_image(d, cell, name), h.image(e)))

    for cell in d.basis:
        i, j = cell
        e = basis_vector(d, cell)
        once = hinv.image(e)
        if abs(i) >= 2:
            out.append(_check("peripheral-shift", cell, oracle_image(d, cell, "peripheral-shift"), once))
        elif abs(i) == 1:
            out.append(_check("medial-rays", cell, oracle_image(d, cell, "medial-rays"), once))
        elif j == 0:
            out.append(_check("origin-rays", cell, oracle_image(d, cell, "origin-rays"), once))
            out.append(_check("origin-square", cell, oracle_image(d, cell, "origin-square"), hinv.image(once)))
        else:
            out.append(_check("central-rays", cell, oracle_image(d, cell, "central-rays"), once))
            step = e + basis_vector(d, (-1, j - 1)) + basis_vector(d, (1, j - 1))
            out.append(_check("central-step", cell, oracle_image(d, cell, "central-step"), hinv.image(step)))
            square = CycleVector.of(try_square(d, j))
            out.append(_check("try-square-step", cell, oracle_image(d, cell, "try-square-step"), hinv.image(square)))
        if i == 1:
            out.append(_medial_square_check(d, cell, hinv.image(once)))

    # trajectories of peripheral cells and try squares
    for cell in d.basis:
        i, j = cell
        kind = growth_type(d, cell)
        if kind in ("III", "IV"):
            t = abs(i) - 1
            v = hinv.power_image(basis_vector(d, cell), t)
            target = Cell(1 if i > 0 else -1, j - t)
            ok = v == basis_vector(d, target)
            if kind == "III":
                ok = ok and t >= quarter
            else:
                ok = ok and t <= quarter and target.j > half
            out.append(
                LemmaCheck(f"trajectory-{kind}", tuple(cell), ok, f"{target} after {t} steps", repr(v))
            )
        if i == 0:
            t = j // 2
            v = hinv.power_image(CycleVector.of(try_square(d, j)), t)
            label = "V_alpha" if j <= half else "V_beta"
            ok = v == basis_vector(d, (0, 0)) and (t <= quarter if label == "V_alpha" else t >= quarter)
            out.append(LemmaCheck(f"trajectory-{label}", tuple(cell), ok, f"[0,0] after {t} steps", repr(v)))

    if d.b_0 >= 2:
        out.append(_origin_trajectory_check(d, hinv.power_image(basis_vector(d, (0, 0)), 2)))
    return out


def _medial_square_check(d: YoungDiagram, cell: Cell, actual: CycleVector) -> LemmaCheck:
    i, j = cell
    expected = oracle_image(d, cell, "medial-square")
    ok = (
        expected == actual
        and actual.l1() <= d.n
        and all(abs(x) == 1 for x in actual.values())
        and all(k - l <= 1 - j for k, l in actual.support)
    )
    return LemmaCheck("medial-square", tuple(cell), ok, repr(expected), repr(actual))


def _origin_trajectory_check(d: YoungDiagram, v: CycleVector) -> LemmaCheck:
    parts = try_square_decomposition(d, v)
    weight = {"III": 0, "V_beta": 0}
    for key, x in parts.items():
        kind = basis_type(d, key)
        weight[kind] = weight.get(kind, 0) + abs(x)
    ok = set(weight) == {"III", "V_beta"} and weight["V_beta"] <= 1 and weight["III"] <= d.n
    return LemmaCheck("trajectory-origin", (0, 0), ok, "at most one V_beta plus at most n of type III", repr(weight))


def failures(checks: Iterable[LemmaCheck]) -> list[LemmaCheck]:
    return [c for c in checks if not c.passed]


def report_json(checks: Iterable[LemmaCheck]) -> str:
    return json.dumps([c.to_dict() for c in checks], indent=1)


# -- formulas as printed -----------------------------------------------------------


def published_forms(d: YoungDiagram) -> list[LemmaCheck]:
    """Evaluate three printed formulas that disagree with the matrices.

    ``printed-origin-square``: h^-2([0,0]) = -E_{b_0} + sum_{m>=2} (-1)^m B_m
    shifted by (1,-1) + sum_{m>=2} (-1)^m C_m shifted by (-1,-1).
    ``printed-medial-square``: h^-2([1,j]) = sum_{m>=2} (-1)^{m+1} A_m(1,j-2)
    + sum_{m>=2} (-1)^m A_m(1,j) shifted by (1,-1).
    ``printed-medial-types``: for a medial cell, h^-2 is a sum of at most n
    cycles of type III (or IV when j <= b_0/2) in the try-square basis.
    ``printed-origin-types``: h^-2([0,0]) contains exactly one try square of
    type V_beta, all other terms being of type III.
    """
    hinv = mixed_inverse_monodromy(d)
    out: list[LemmaCheck] = []
    b, c = accessible_sets_origin(d)
    printed = (
        -CycleVector.of(try_square(d, d.b_0))
        + _alternating(b, 1, start=2, shift=(1, -1))
        + _alternating(c, 1, start=2, shift=(-1, -1))
    )
    square = hinv.power_image(basis_vector(d, (0, 0)), 2)
    out.append(_check("printed-origin-square", (0, 0), printed, square))
    if d.b_0 >= 2:
        kinds = [basis_type(d, key) for key, x in try_square_decomposition(d, square).items() if x]
        ok = kinds.count("V_beta") == 1 and set(kinds) <= {"III", "V_beta"}
        out.append(LemmaCheck("printed-origin-types", (0, 0), ok, "exactly one V_beta plus type III", repr(kinds)))
    for cell in d.basis:
        i, j = cell
        if abs(i) != 1:
            continue
        actual = hinv.power_image(basis_vector(d, cell), 2)
        if i == 1:
            printed = _alternating(accessible_sets_medial(d, cell), 1, start=2, shift=(1, -1))
            if j >= 3:
                printed = printed + _alternating(accessible_sets_medial(d, (1, j - 2)), -1, start=2)
            out.append(_check("printed-medial-square", cell, printed, actual))
        allowed = ("III", "IV") if j <= Fraction(d.b_0, 2) else ("III",)
        parts = try_square_decomposition(d, actual)
        kinds = sorted({basis_type(d, key) for key, x in parts.items() if x})
        ok = all(k in allowed for k in kinds) and sum(abs(x) for x in parts.values()) <= d.n
        out.append(LemmaCheck("printed-medial-types", tuple(cell), ok, f"types within {allowed}", repr(kinds)))
    return out
