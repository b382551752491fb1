import json
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from lorenzknots.braid import BraidWord, is_knot
from lorenzknots.census import (
    burau_spectrum,
    census_csv,
    census_json,
    census_record,
    census_report,
    enumerate_diagrams,
    partition_count,
    partitions,
    random_word,
    sample_diagram,
    sample_knots,
    spectrum_csv,
    spectrum_of_word,
    unrank_partition,
)
from lorenzknots.diagram import from_partition


def test_partition_counts():
    assert [partition_count(n) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert partition_count(60) == 966467
    assert sum(partition_count(k) for k in range(1, 13)) == 271


def test_enumeration_order():
    assert [str(d) for d in enumerate_diagrams(3)] == ["1", "1,1", "2", "1,1,1", "2,1", "3"]
    assert len(list(enumerate_diagrams(12))) == 271
    assert all(is_knot(d) for d in enumerate_diagrams(8, knots_only=True))


@given(st.integers(1, 25))
def test_unrank_is_a_bijection(n):
    ranked = {unrank_partition(n, r) for r in range(partition_count(n))}
    assert ranked == set(partitions(n))


def test_sampling_determinism():
    assert sample_diagram(30, seed=5, index=3) == sample_diagram(30, seed=5, index=3)
    assert sample_diagram(1, seed=9) == from_partition([1])
    assert sample_knots(5, 40, seed=2) == sample_knots(5, 40, seed=2)


def test_sampling_is_uniform():
    counts = Counter(sample_diagram(4, seed=11, index=i).heights for i in range(10_000))
    assert len(counts) == 5
    # chi-squared with 4 degrees of freedom; 18.47 is the 0.1% critical value
    chi2 = sum((c - 2000) ** 2 / 2000 for c in counts.values())
    assert chi2 < 18.47


def test_sample_knots_are_knots():
    ds = sample_knots(10, 30, seed=1)
    assert len(ds) == 10 and all(is_knot(d) and 2 <= d.n <= 30 for d in ds)


def test_census_record_of_442():
    rec = census_record(from_partition([4, 4, 2]))
    assert (rec.g, rec.b, len(rec.moduli)) == (5, 3, 10)
    assert rec.all_inside and not rec.error
    assert any(abs(m - 1) > 1e-6 for m in rec.moduli)


def test_census_record_of_torus_knot():
    rec = census_record(from_partition([2, 1, 1]))
    assert all(abs(m - 1) <= 1e-8 for m in rec.moduli)


def test_census_of_link():
    rec = census_record(from_partition([2, 1]))
    assert not rec.is_knot and rec.g is None


def test_census_outputs():
    recs = census_report(enumerate_diagrams(6))
    text = census_csv(recs, max_cells=6)
    lines = text.splitlines()
    assert lines[0].startswith("# lorenzknots") and "max_cells=6" in lines[0]
    assert lines[1].startswith("heights,n,g,b")
    assert len(lines) == 2 + len(recs)
    data = json.loads(census_json(recs, max_cells=6))
    assert len(data["records"]) == len(recs)


def test_census_parallel_matches_serial():
    ds = list(enumerate_diagrams(9, knots_only=True))
    assert census_report(ds, jobs=2) == census_report(ds, jobs=1)


def test_random_words():
    w = random_word(4, 50, seed=3, index=0, positive_only=True)
    assert len(w) == 50 and set(w.signs) == {1}
    m = random_word(4, 200, seed=3, index=0, positive_only=False)
    assert set(m.signs) == {1, -1}
    assert random_word(4, 50, seed=3, index=1, positive_only=True) != w


def test_trefoil_spectrum():
    s = spectrum_of_word(BraidWord(2, (1, 1, 1)))
    assert len(s.roots) == 2
    assert all(abs(abs(z) - 1) < 1e-12 for z in s.roots)


def test_spectrum_determinism_and_csv():
    a = burau_spectrum(3, 40, 3, seed=7)
    b = burau_spectrum(3, 40, 3, seed=7, jobs=2)
    assert a == b
    text = spectrum_csv(a, strands=3)
    assert text.splitlines()[1] == "sample_id,re,im"
    mixed = spectrum_csv(burau_spectrum(3, 20, 2, seed=7, positive_only=False), positive=False)
    assert "# letters:" in mixed
