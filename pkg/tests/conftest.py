from functools import lru_cache

from hypothesis import strategies as st

from lorenzknots.census import enumerate_diagrams


@lru_cache(maxsize=None)
def small_knots(max_cells: int = 12) -> tuple:
    return tuple(enumerate_diagrams(max_cells, knots_only=True))


@lru_cache(maxsize=None)
def small_diagrams(max_cells: int = 10) -> tuple:
    return tuple(enumerate_diagrams(max_cells))


def knot_diagrams(max_cells: int = 12):
    return st.sampled_from(small_knots(max_cells))


def diagrams(max_cells: int = 10):
    return st.sampled_from(small_diagrams(max_cells))
