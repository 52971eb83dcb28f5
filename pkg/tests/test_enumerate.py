"""
Tests for molr.enumerate - candidate generation, seeding, level extension,
filters, budgets, workers and the counting cross-checks.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

import pytest

from molr import expected
from molr.config import EnumerationSettings
from molr.core import MolrSet, is_valid_molr
from molr.enumerate import (
    FILTER_STEPWISE_HOMOGENEOUS,
    FILTER_STEPWISE_TRANSITIVE,
    POPULATIONS,
    count_normalized_labeled,
    enumerate_cell,
    enumerate_levels,
    enumerate_table,
    extend_frontier,
    is_unimodal,
    orbit_sum,
    rect_extensions,
    row_extensions,
    seed_classes,
    stepwise_flags,
    summarize,
    trisotopism_count,
    trivial_frontier,
    unimodality_notes,
)
from molr.errors import BadDimensions, BudgetExceeded
from molr.galois import galois_mols, stepwise_truncation
from molr.perms import identity
from molr.records import read_records
from molr.status import EnumerationStatus
from molr.symmetry import canonical_key


def _last(n, t, k, **kwargs):
    frontier = None
    for frontier in enumerate_levels(n, t, k, **kwargs):
        pass
    return frontier


def _check_table(table):
    key = (table.n, table.t)
    assert table.isotopism_counts() == expected.ISOTOPISM_COUNTS[key]
    assert table.paratopism_counts() == expected.PARATOPISM_COUNTS[key]
    for k, cell in table.per_k.items():
        assert cell.regularity() == expected.REGULARITY[key][k]
        for population in POPULATIONS:
            assert cell.histograms[population] == expected.histogram(table.n, table.t, k, population)


# ---------------------------------------------------------------------------
# TestCandidates
# ---------------------------------------------------------------------------


class TestCandidates:
    def test_row_extensions_of_a_single_row(self):
        m = MolrSet.from_grids([(identity(3),)], 3)
        children = list(row_extensions(m))
        assert len(children) == 2
        assert {c.grids[0][1] for c in children} == {(1, 2, 0), (2, 0, 1)}

    def test_row_extensions_are_valid(self):
        m = galois_mols(5).restrict_rows([0, 1])
        children = list(row_extensions(m))
        assert children
        for child in children:
            assert child.k == 3
            assert is_valid_molr(child.grids)

    def test_full_squares_have_no_row_extension(self, mols4):
        assert list(row_extensions(mols4)) == []

    def test_rect_extensions(self):
        ident = identity(4)
        m = MolrSet.from_grids([(ident, (1, 0, 3, 2))], 4)
        seconds = {c.grids[1][1] for c in rect_extensions(m)}
        assert seconds == {(2, 3, 0, 1), (2, 3, 1, 0), (3, 2, 0, 1), (3, 2, 1, 0)}


# ---------------------------------------------------------------------------
# TestSeeds
# ---------------------------------------------------------------------------


class TestSeeds:
    @pytest.mark.parametrize("n,t,count", [(4, 1, 2), (4, 2, 3), (4, 3, 2), (5, 1, 2), (5, 2, 5), (5, 4, 3)])
    def test_seed_counts(self, n, t, count):
        assert len(seed_classes(n, t)) == count

    def test_no_seeds_past_n_minus_one(self):
        assert len(seed_classes(4, 4)) == 0

    def test_seeds_are_sorted_and_stepwise(self):
        f = seed_classes(5, 2)
        assert f.keys() == sorted(f.keys())
        for rec in f.classes:
            assert rec.flags.stepwise_homogeneous == rec.flags.homogeneous
            assert rec.flags.stepwise_transitive == rec.flags.transitive

    def test_bad_dimensions(self):
        with pytest.raises(BadDimensions):
            seed_classes(1, 1)

    def test_trivial_frontier(self):
        f = trivial_frontier(5, 3)
        assert (f.k, len(f)) == (1, 1)
        assert f.classes[0].aut_order == 6 * 120


# ---------------------------------------------------------------------------
# TestPipeline
# ---------------------------------------------------------------------------


class TestPipeline:
    @pytest.mark.parametrize("n", [4, 5])
    def test_tables_match_reference(self, n, serial_settings):
        for _, t in expected.table_keys(n):
            _check_table(enumerate_table(n, t, settings=serial_settings))

    def test_levels_are_yielded_in_order(self):
        ks = [f.k for f in enumerate_levels(4, 2, 4)]
        assert ks == [1, 2, 3, 4]

    def test_extend_frontier_past_n(self, serial_settings):
        f = _last(4, 3, 4)
        with pytest.raises(BadDimensions):
            extend_frontier(f, settings=serial_settings)

    def test_unknown_filter(self):
        with pytest.raises(ValueError):
            list(enumerate_levels(4, 2, 3, filter="bogus"))

    @pytest.mark.parametrize("k", [0, 5])
    def test_k_out_of_range(self, k):
        with pytest.raises(BadDimensions):
            list(enumerate_levels(4, 2, k))

    def test_worker_count_does_not_change_results(self):
        serial = _last(5, 2, 3, settings=EnumerationSettings(workers=1))
        parallel = _last(5, 2, 3, settings=EnumerationSettings(workers=2, chunk_size=1))
        assert parallel.keys() == serial.keys()
        assert [r.aut_order for r in parallel.classes] == [r.aut_order for r in serial.classes]

    @pytest.mark.parametrize("chunk_size", [1, 3, 50])
    def test_parallel_runs_agree_level_by_level(self, chunk_size):
        serial = list(enumerate_levels(5, 2, 4, settings=EnumerationSettings(workers=1)))
        parallel = list(enumerate_levels(
            5, 2, 4, settings=EnumerationSettings(workers=2, chunk_size=chunk_size),
        ))
        assert [f.k for f in parallel] == [f.k for f in serial]
        for a, b in zip(serial, parallel):
            assert a.keys() == b.keys()
            assert [r.representative for r in a.classes] == [r.representative for r in b.classes]
            assert [r.flags for r in a.classes] == [r.flags for r in b.classes]

    def test_budget_exceeded_during_seeding(self):
        with pytest.raises(BudgetExceeded) as exc:
            _last(5, 2, 3, settings=EnumerationSettings(budget=1))
        assert exc.value.level == 2

    def test_budget_exceeded_on_a_later_level(self):
        with pytest.raises(BudgetExceeded) as exc:
            _last(5, 2, 3, settings=EnumerationSettings(budget=5))
        assert exc.value.level == 3

    @pytest.mark.parametrize("filter,count", [
        (FILTER_STEPWISE_TRANSITIVE, 1),
        (FILTER_STEPWISE_HOMOGENEOUS, 2),
    ])
    def test_filtered_runs(self, filter, count, serial_settings):
        cell, frontier = enumerate_cell(5, 2, 5, filter=filter, settings=serial_settings)
        assert cell.total() == count
        assert frontier.filters[-1] == filter

    def test_level_dir_receives_every_level(self, tmp_path):
        settings = EnumerationSettings(level_dir=str(tmp_path))
        _last(4, 2, 4, settings=settings)
        for k, count in expected.ISOTOPISM_COUNTS[(4, 2)].items():
            path = tmp_path / f"molr_n4_t2_k{k}.txt"
            assert len(read_records(str(path))) == count

    def test_status_tracks_levels(self, serial_settings):
        status = EnumerationStatus()
        calls = []
        enumerate_cell(4, 2, 4, settings=serial_settings, status=status,
                       on_progress=lambda: calls.append(1))
        snap = status.snapshot()
        assert snap["status"] == "completed"
        assert snap["level_counts"] == {2: 3, 3: 2, 4: 1}
        assert calls

    def test_summarize_without_paratopism(self):
        cell = summarize(_last(4, 2, 3), paratopism=False)
        assert cell.paratopism is None
        assert cell.histograms["all"] == {8: 1, 24: 1}

    @pytest.mark.slow
    @pytest.mark.parametrize("t", [4, 5])
    def test_order_six_tables(self, t):
        _check_table(enumerate_table(6, t))

    @pytest.mark.slow
    def test_order_seven_six_mols(self):
        _check_table(enumerate_table(7, 6))


# ---------------------------------------------------------------------------
# TestStepwise
# ---------------------------------------------------------------------------


class TestStepwise:
    def test_galois_squares_are_stepwise_transitive(self):
        assert stepwise_flags(galois_mols(4)) == (True, True)

    def test_homogeneous_but_not_stepwise(self):
        m = galois_mols(5).subset([0, 1, 2])
        assert stepwise_flags(m) == (False, False)

    def test_two_row_sets_follow_their_flags(self):
        m = galois_mols(5).restrict_rows([0, 1])
        assert stepwise_flags(m) == (True, True)

    @pytest.mark.parametrize("n,t,k", [
        (5, 2, 3),
        pytest.param(6, 3, 3, marks=pytest.mark.slow),
    ])
    def test_populations_are_nested(self, n, t, k, serial_settings):
        frontier = _last(n, t, k, settings=serial_settings)

        def keys(flag):
            return {r.canonical_key for r in frontier.classes if getattr(r.flags, flag)}

        homogeneous = keys("homogeneous")
        transitive = keys("transitive")
        stepwise_h = keys("stepwise_homogeneous")
        stepwise_t = keys("stepwise_transitive")
        assert stepwise_t < stepwise_h < homogeneous
        assert stepwise_t <= transitive <= homogeneous
        assert (len(homogeneous), len(transitive), len(stepwise_h), len(stepwise_t)) == \
            expected.REGULARITY[(n, t)][k]

    def test_filter_keeps_the_flagged_classes(self, serial_settings):
        full = _last(5, 2, 3, settings=serial_settings)
        for filter, flag in [
            (FILTER_STEPWISE_HOMOGENEOUS, "stepwise_homogeneous"),
            (FILTER_STEPWISE_TRANSITIVE, "stepwise_transitive"),
        ]:
            kept = _last(5, 2, 3, filter=filter, settings=serial_settings)
            flagged = {r.canonical_key for r in full.classes if getattr(r.flags, flag)}
            assert set(kept.keys()) == flagged

    @pytest.mark.slow
    def test_galois7_pair_rows_are_stepwise_transitive(self, serial_settings):
        two_rows = stepwise_truncation(galois_mols(7))[-1]
        assert two_rows.k == 2
        key = canonical_key(two_rows)
        seeds = seed_classes(7, 6, serial_settings)
        flagged = {r.canonical_key for r in seeds.classes if r.flags.stepwise_transitive}
        assert len(flagged) == expected.REGULARITY[(7, 6)][2][3]
        assert key in flagged
        kept = _last(7, 6, 2, filter=FILTER_STEPWISE_TRANSITIVE, settings=serial_settings)
        assert key in kept.keys()


# ---------------------------------------------------------------------------
# TestCrossChecks
# ---------------------------------------------------------------------------


class TestCrossChecks:
    @pytest.mark.parametrize("n,t,k", [(4, 2, 3), (4, 2, 4), (4, 3, 3), (5, 2, 3)])
    def test_orbit_sum_matches_direct_count(self, n, t, k):
        assert orbit_sum(_last(n, t, k)) == count_normalized_labeled(n, t, k)

    @pytest.mark.parametrize("n,count", [(3, 1), (4, 2), (5, 2)])
    def test_trisotopism_count(self, n, count):
        assert trisotopism_count(n) == count

    @pytest.mark.parametrize("values,ok", [
        ([1, 3, 2], True),
        ([3, 1, 3], False),
        ([], True),
        ([2, 2, 5, 5, 1], True),
    ])
    def test_is_unimodal(self, values, ok):
        assert is_unimodal(values) is ok

    def test_unimodality_notes(self, serial_settings):
        tables = [enumerate_table(4, t, settings=serial_settings, paratopism=False) for t in (2, 3)]
        notes = unimodality_notes(tables)
        assert "n=4 t=2: counts over k are unimodal" in notes
        assert "n=4 k=2: counts over t are unimodal" in notes
