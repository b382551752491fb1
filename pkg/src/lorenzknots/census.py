"""Batch experiments: partition enumeration and sampling, per-knot census
records, and root clouds of random-braid Burau determinants.

Every random draw comes from a Philox stream keyed by ``(seed, index)``, so a
sample depends only on its own index and the outputs do not depend on how
the work is scheduled.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache, partial
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from . import __version__
from .braid import BraidWord, invariants, is_knot
from .diagram import YoungDiagram
from .polynomial import PolynomialError, alexander
from .spectra import BoundError, RootFindingError, annulus_verdict, fmt, r_invariant, roots

MAX_ROOT_DEGREE = 400
SIGNED_LETTER_RULE = "uniform over the 2(s-1) signed letters"


class SizeError(ValueError):
    pass


# -- partitions ---------------------------------------------------------------


@lru_cache(maxsize=None)
def partition_count(n: int, largest: int | None = None) -> int:
    """Number of partitions of n with every part at most ``largest``."""
    if largest is None or largest > n:
        largest = n
    if n == 0:
        return 1
    if largest <= 0:
        return 0
    return partition_count(n, largest - 1) + partition_count(n - largest, largest)


def partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n as weakly decreasing tuples, lexicographically ascending."""
    out: list[tuple[int, ...]] = []

    def rec(rest: int, cap: int, prefix: tuple[int, ...]):
        if rest == 0:
            out.append(prefix)
            return
        for k in range(1, min(rest, cap) + 1):
            rec(rest - k, k, prefix + (k,))

    rec(n, n, ())
    return sorted(out)


def enumerate_diagrams(max_cells: int, knots_only: bool = False) -> Iterator[YoungDiagram]:
    """All diagrams with 1..max_cells cells: by size, then lexicographically."""
    if max_cells < 1:
        raise ValueError("max_cells must be at least 1")
    for n in range(1, max_cells + 1):
        for p in partitions(n):
            d = YoungDiagram(p)
            if not knots_only or is_knot(d):
                yield d


def rng_for(seed: int, index: int = 0) -> np.random.Generator:
    """Independent Philox stream for task ``index`` of a run seeded by ``seed``."""
    if not 0 <= seed < 2**64 or not 0 <= index < 2**64:
        raise ValueError("seed and index must fit in 64 bits")
    return np.random.Generator(np.random.Philox(key=seed + (index << 64)))


def _uniform_below(rng: np.random.Generator, m: int) -> int:
    if m < 2**62:
        return int(rng.integers(0, m))
    bits = m.bit_length()
    while True:
        words = rng.integers(0, 2**32, size=(bits + 31) // 32, dtype=np.uint64)
        x = 0
        for w in words:
            x = (x << 32) | int(w)
        x >>= 32 * len(words) - bits
        if x < m:
            return x


def unrank_partition(n: int, rank: int) -> tuple[int, ...]:
    """The partition of n at position ``rank`` when ordered by largest part."""
    if not 0 <= rank < partition_count(n):
        raise ValueError("rank out of range")
    parts: list[int] = []
    cap = n
    while n:
        for k in range(1, min(n, cap) + 1):
            c = partition_count(n - k, k)
            if rank < c:
                parts.append(k)
                n, cap = n - k, k
                break
            rank -= c
    return tuple(parts)


def sample_diagram(cells: int, seed: int, index: int = 0) -> YoungDiagram:
    """Uniformly random diagram with ``cells`` cells (exact, via partition counts)."""
    if cells < 1:
        raise ValueError("cells must be at least 1")
    rng = rng_for(seed, index)
    return YoungDiagram(unrank_partition(cells, _uniform_below(rng, partition_count(cells))))


def sample_knots(count: int, max_cells: int, seed: int, min_cells: int = 2) -> list[YoungDiagram]:
    """``count`` knot diagrams: draw a size uniformly in [min_cells, max_cells],
    then a uniform partition of that size; links are rejected and redrawn."""
    out, index = [], 0
    while len(out) < count:
        rng = rng_for(seed, index)
        size = int(rng.integers(min_cells, max_cells + 1))
        d = YoungDiagram(unrank_partition(size, _uniform_below(rng, partition_count(size))))
        index += 1
        if is_knot(d):
            out.append(d)
    return out


def _parallel_map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _header(command: str, **params) -> str:
    body = " ".join(f"{k}={v}" for k, v in params.items())
    return f"# lorenzknots {__version__} {command} {body}".rstrip() + "\n"


# -- census -------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusRecord:
    heights: tuple[int, ...]
    n: int
    is_knot: bool
    g: int | None = None
    b: int | None = None
    alexander: tuple[int, ...] | None = None
    m: float | None = None
    r: float | None = None
    all_inside: bool | None = None
    bound: float | None = None
    moduli: tuple[float, ...] = field(default=(), repr=False)
    error: str = ""

    def to_dict(self) -> dict:
        out = asdict(self)
        out["heights"] = list(self.heights)
        out["alexander"] = list(self.alexander) if self.alexander is not None else None
        out["moduli"] = list(self.moduli)
        return out


CENSUS_COLUMNS = ("heights", "n", "g", "b", "knot", "alexander", "m", "r", "inside", "bound", "error")


def census_record(d: YoungDiagram) -> CensusRecord:
    """Full pipeline for one diagram; failures are captured in ``error``."""
    if not is_knot(d):
        return CensusRecord(d.heights, d.n, False)
    try:
        inv = invariants(d)
        delta = alexander(d, "charpoly")
        rs = roots(delta)
        verdict = annulus_verdict(rs, inv.genus, inv.braid_index)
        return CensusRecord(
            d.heights,
            d.n,
            True,
            inv.genus,
            inv.braid_index,
            delta.coeffs,
            rs.max_modulus,
            r_invariant(inv.genus, inv.braid_index, rs.max_modulus),
            verdict.all_inside,
            verdict.upper,
            tuple(abs(z) for z in rs.roots),
        )
    except (PolynomialError, RootFindingError, BoundError, ArithmeticError, ValueError) as exc:
        return CensusRecord(d.heights, d.n, True, error=f"{type(exc).__name__}: {exc}")


def census_report(diagrams: Iterable[YoungDiagram], jobs: int = 1) -> list[CensusRecord]:
    return _parallel_map(census_record, list(diagrams), jobs)


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return fmt(x)
    return str(x)


def census_csv(records: Sequence[CensusRecord], **params) -> str:
    buf = io.StringIO()
    buf.write(_header("census", **params))
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CENSUS_COLUMNS)
    for rec in records:
        w.writerow(
            [
                " ".join(map(str, rec.heights)),
                rec.n,
                _cell(rec.g),
                _cell(rec.b),
                _cell(rec.is_knot),
                " ".join(map(str, rec.alexander)) if rec.alexander is not None else "",
                _cell(rec.m),
                _cell(rec.r),
                _cell(rec.all_inside),
                _cell(rec.bound),
                rec.error,
            ]
        )
    return buf.getvalue()


def census_json(records: Sequence[CensusRecord], **params) -> str:
    return json.dumps({"tool": f"lorenzknots {__version__}", "params": params, "records": [r.to_dict() for r in records]})


# -- Burau spectra ---------------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumSample:
    sample_id: int
    strands: int
    length: int
    letters: tuple[int, ...]
    signs: tuple[int, ...]
    determinant: tuple[int, ...]  # det(Burau - I) with the unit t^k cleared
    alexander: tuple[int, ...]  # determinant / (1 + t + ... + t^(s-1))
    roots: tuple[complex, ...]
    degenerate: bool = False

    def word(self) -> BraidWord:
        return BraidWord(self.strands, self.letters, self.signs)


def random_word(strands: int, length: int, seed: int, index: int, positive_only: bool) -> BraidWord:
    if strands < 2:
        raise ValueError("need at least two strands")
    if length < 1:
        raise ValueError("length must be at least 1")
    rng = rng_for(seed, index)
    k = strands - 1
    if positive_only:
        letters = rng.integers(1, strands, size=length)
        return BraidWord(strands, tuple(int(x) for x in letters))
    draws = rng.integers(0, 2 * k, size=length)
    return BraidWord(strands, tuple(int(x) % k + 1 for x in draws), tuple(1 if x < k else -1 for x in draws))


def spectrum_of_word(w: BraidWord, sample_id: int = 0) -> SpectrumSample:
    """Zeroes of the Alexander polynomial of the closure of ``w``.

    det(Burau - I) always carries the factor 1 + t + ... + t^(s-1), whose
    roots of unity say nothing about the braid; it is divided out exactly.
    """
    from .polynomial import IntPolynomial, burau_determinant

    det = burau_determinant(w).to_polynomial()
    head = (sample_id, w.strands, len(w), w.letters, w.signs, det.coeffs)
    if not det:
        return SpectrumSample(*head, (), (), True)
    delta = det.exact_div(IntPolynomial((1,) * w.strands))
    if delta.degree > MAX_ROOT_DEGREE:
        raise SizeError(f"polynomial degree {delta.degree} exceeds {MAX_ROOT_DEGREE}")
    zs = roots(delta).roots if delta.degree >= 1 else ()
    return SpectrumSample(*head, delta.coeffs, zs)


def _spectrum_task(index: int, strands: int, length: int, seed: int, positive_only: bool) -> SpectrumSample:
    return spectrum_of_word(random_word(strands, length, seed, index, positive_only), index)


def burau_spectrum(
    strands: int, length: int, count: int, seed: int, positive_only: bool = True, jobs: int = 1
) -> list[SpectrumSample]:
    task = partial(_spectrum_task, strands=strands, length=length, seed=seed, positive_only=positive_only)
    return _parallel_map(task, list(range(count)), jobs)


def spectrum_csv(samples: Sequence[SpectrumSample], **params) -> str:
    buf = io.StringIO()
    buf.write(_header("burau-spectrum", **params))
    if not params.get("positive", True):
        buf.write(f"# letters: {SIGNED_LETTER_RULE}\n")
    degenerate = [s.sample_id for s in samples if s.degenerate]
    if degenerate:
        buf.write(f"# degenerate samples (zero determinant): {' '.join(map(str, degenerate))}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["sample_id", "re", "im"])
    for s in samples:
        for z in s.roots:
            w.writerow([s.sample_id, fmt(z.real), fmt(z.imag)])
    return buf.getvalue()
