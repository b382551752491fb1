"""Lorenz braids read off Young diagrams."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce

from .diagram import YoungDiagram


class BraidError(ValueError):
    pass


class NotAKnotError(BraidError):
    """The closure of the braid has more than one component."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        signs = tuple(int(x) for x in self.signs) or (1,) * len(letters)
        if self.strands < 1:
            raise BraidError("a braid needs at least one strand")
        if len(signs) != len(letters):
            raise BraidError("letters and signs differ in length")
        if any(s not in (1, -1) for s in signs):
            raise BraidError("signs must be +1 or -1")
        bad = [x for x in letters if not 1 <= x <= self.strands - 1]
        if bad:
            raise BraidError(f"generator index {bad[0]} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "signs", signs)

    @classmethod
    def from_signed(cls, strands: int, signed: list[int]) -> "BraidWord":
        return cls(strands, tuple(abs(x) for x in signed), tuple(1 if x > 0 else -1 for x in signed))

    @property
    def signed_letters(self) -> tuple[int, ...]:
        return tuple(s * x for x, s in zip(self.letters, self.signs))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(f"s{x}" if s > 0 else f"S{x}" for x, s in zip(self.letters, self.signs))

    def to_text(self) -> str:
        """Text format: a strand-count header followed by the word."""
        return f"strands {self.strands}\n{self}\n"

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("strands"):
            raise BraidError("missing 'strands s' header")
        strands = int(lines[0].split()[1])
        signed = []
        for tok in " ".join(lines[1:]).split():
            if tok[0] not in "sS":
                raise BraidError(f"bad letter {tok!r}")
            signed.append(int(tok[1:]) * (1 if tok[0] == "s" else -1))
        return cls.from_signed(strands, signed)

    def to_dict(self) -> dict:
        out = {"strands": self.strands, "letters": list(self.letters)}
        if any(s < 0 for s in self.signs):
            out["signs"] = list(self.signs)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "BraidWord":
        return cls(data["strands"], tuple(data["letters"]), tuple(data.get("signs", ())))


@dataclass(frozen=True)
class KnotInvariants:
    genus: int
    braid_index: int
    components: int
    crossings: int
    strands: int


def lorenz_braid(d: YoungDiagram) -> BraidWord:
    """Positive braid with one crossing at every corner vertex of every cell.

    Vertex ``(x, depth)`` gives the generator ``c_r + 2 - x``; letters are
    emitted depth by depth, by increasing index within a depth (letters of
    one depth commute).
    """
    vertices = set()
    for c, j in d.cells:
        vertices.update(((c, j - 1), (c - 1, j), (c + 1, j), (c, j + 1)))
    ordered = sorted(vertices, key=lambda v: (v[1], d.c_r + 2 - v[0]))
    strands = d.c_r - d.c_l + 4
    return BraidWord(strands, tuple(d.c_r + 2 - x for x, _ in ordered))


def closure_permutation(w: BraidWord) -> tuple[int, ...]:
    """Permutation (0-based, as a tuple ``p`` with ``p[start] = end``) of the strands."""
    pos = list(range(w.strands))  # pos[k] = strand currently at position k
    for x in w.letters:
        pos[x - 1], pos[x] = pos[x], pos[x - 1]
    perm = [0] * w.strands
    for end, start in enumerate(pos):
        perm[start] = end
    return tuple(perm)


def cycles(perm: tuple[int, ...]) -> list[list[int]]:
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc, k = [], start
        while k not in seen:
            seen.add(k)
            cyc.append(k)
            k = perm[k]
        out.append(cyc)
    return out


def components(w: BraidWord) -> int:
    return len(cycles(closure_permutation(w)))


def is_knot(d: YoungDiagram) -> bool:
    return components(lorenz_braid(d)) == 1


def invariants(d: YoungDiagram) -> KnotInvariants:
    w = lorenz_braid(d)
    ncomp = components(w)
    if ncomp != 1:
        raise NotAKnotError(f"closure of [{d}] has {ncomp} components")
    if d.n % 2:
        raise BraidError(f"knot diagram [{d}] has an odd number of cells")
    euler = len(w) - w.strands + 1
    if euler != d.n:
        raise BraidError(f"2g from the braid ({euler}) disagrees with the cell count ({d.n})")
    return KnotInvariants(
        genus=d.n // 2,
        braid_index=d.central_count + 1,
        components=1,
        crossings=len(w),
        strands=w.strands,
    )


def compose(*words: BraidWord) -> BraidWord:
    """Concatenate braid words on the same strand count."""

    def cat(a: BraidWord, b: BraidWord) -> BraidWord:
        if a.strands != b.strands:
            raise BraidError("strand counts differ")
        return BraidWord(a.strands, a.letters + b.letters, a.signs + b.signs)

    return reduce(cat, words)
