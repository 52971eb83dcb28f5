"""
Tests for molr.geometry - nets, projective completion, plane checks,
line deletion and the two-row graph.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

import networkx as nx
import pytest

from molr.core import MolrSet, apply_isotopism, normalize
from molr.enumerate import enumerate_levels
from molr.errors import (
    ConcurrentLines,
    IndexOutOfRange,
    InvalidLineSelection,
    LineIsARow,
    NotAFullMolsSet,
    WrongShape,
)
from molr.galois import galois_mols
from molr.geometry import (
    KIND_AFFINE,
    KIND_NONE,
    KIND_PROJECTIVE,
    IncidenceStructure,
    check_plane,
    complete_to_projective,
    latin_square_isotopism,
    latin_square_of,
    molr_from_latin_square,
    partial_net,
    sandler_delete,
    two_row_graph,
)
from molr.symmetry import canonical_form, canonical_key


# ---------------------------------------------------------------------------
# TestIncidenceStructure
# ---------------------------------------------------------------------------


class TestIncidenceStructure:
    def test_rejects_short_lines(self):
        with pytest.raises(ValueError):
            IncidenceStructure((0, 1), (frozenset({0}),), (("row", 0),))

    def test_rejects_missing_tags(self):
        with pytest.raises(ValueError):
            IncidenceStructure((0, 1), (frozenset({0, 1}),), ())

    def test_families(self, mols4):
        families = partial_net(mols4).families()
        assert len(families[("row",)]) == 4
        assert len(families[("column",)]) == 4
        assert len(families[("symbol", 1)]) == 4


# ---------------------------------------------------------------------------
# TestPartialNet
# ---------------------------------------------------------------------------


class TestPartialNet:
    def test_line_order(self, mols4):
        s = partial_net(mols4)
        assert s.n_points == 16
        assert s.tags[0] == ("row", 0)
        assert s.tags[4] == ("column", 0)
        assert s.tags[8] == ("symbol", 0, 0)

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_collinearity(self, k):
        m = galois_mols(5).restrict_rows(range(k))
        report = check_plane(partial_net(m))
        expected = (m.n - 1) + (k - 1) + m.t * (k - 1)
        assert report.collinear_counts == {expected: k * m.n}
        assert report.multiply_covered_pairs == 0

    @pytest.mark.parametrize("n,t", [(4, 2), (4, 3), (5, 2), (5, 3), (5, 4)])
    def test_collinearity_on_enumerated_classes(self, n, t):
        for frontier in enumerate_levels(n, t, n):
            if frontier.k < 2:
                continue
            expected = (n - 1) + (frontier.k - 1) + t * (frontier.k - 1)
            for rec in frontier.classes:
                report = check_plane(partial_net(rec.representative))
                assert report.collinear_counts == {expected: frontier.k * n}

    @pytest.mark.slow
    def test_collinearity_on_order_seven(self):
        for frontier in enumerate_levels(7, 6, 7):
            if frontier.k < 2:
                continue
            expected = 6 + 7 * (frontier.k - 1)
            for rec in frontier.classes:
                report = check_plane(partial_net(rec.representative))
                assert report.collinear_counts == {expected: frontier.k * 7}

    def test_single_row_drops_short_lines(self):
        m = galois_mols(4).restrict_rows([0])
        s = partial_net(m)
        assert [t[0] for t in s.tags] == ["row"]

    def test_full_set_gives_affine_plane(self):
        report = check_plane(partial_net(galois_mols(3)))
        assert report.kind == KIND_AFFINE
        assert report.is_plane
        assert report.p2
        assert report.resolution_classes == 4
        assert report.curvature == -1

    def test_incomplete_net_is_not_a_plane(self, mols4):
        report = check_plane(partial_net(mols4))
        assert report.kind == KIND_NONE
        assert report.uncovered_pairs > 0
        assert report.curvature is None


# ---------------------------------------------------------------------------
# TestProjectiveCompletion
# ---------------------------------------------------------------------------


class TestProjectiveCompletion:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_projective_plane(self, n):
        s = complete_to_projective(galois_mols(n))
        report = check_plane(s)
        size = n * n + n + 1
        assert (report.n_points, report.n_lines) == (size, size)
        assert report.line_sizes == {n + 1: size}
        assert report.kind == KIND_PROJECTIVE
        assert report.p1

    def test_line_at_infinity_is_last(self):
        s = complete_to_projective(galois_mols(3))
        assert s.tags[-1] == ("infinity",)
        assert s.lines[-1] == frozenset(range(9, 13))

    def test_needs_full_mols(self, mols4):
        with pytest.raises(NotAFullMolsSet):
            complete_to_projective(mols4)

    def test_report_as_dict(self):
        d = check_plane(complete_to_projective(galois_mols(3))).as_dict()
        assert d["points"] == 13
        assert d["kind"] == KIND_PROJECTIVE
        assert d["axioms"] == [True, True, True, True]


# ---------------------------------------------------------------------------
# TestSandlerDelete
# ---------------------------------------------------------------------------


class TestSandlerDelete:
    @pytest.fixture
    def pg4(self):
        """Projective plane of order 4: rows 0-3, columns 4-7, symbols 8-19, infinity 20."""
        return complete_to_projective(galois_mols(4))

    @pytest.fixture
    def ag3(self):
        """Affine plane of order 3: rows 0-2, columns 3-5, symbols 6-11."""
        return partial_net(galois_mols(3))

    def test_triangle_in_projective_plane(self, pg4):
        result = sandler_delete(pg4, [0, 4, 20])
        assert result.deleted_points == 12
        assert result.structure.n_points == 9
        assert result.report.n_points == 9

    def test_concurrent_triple(self, pg4):
        with pytest.raises(ConcurrentLines):
            sandler_delete(pg4, [0, 1, 2])

    def test_three_lines_need_projective_plane(self, ag3):
        with pytest.raises(InvalidLineSelection):
            sandler_delete(ag3, [0, 3, 6])

    def test_intersecting_pair_in_affine_plane(self, ag3):
        result = sandler_delete(ag3, [0, 3])
        assert result.deleted_points == 5
        assert result.structure.n_points == 4

    def test_parallel_pair(self, ag3):
        with pytest.raises(ConcurrentLines):
            sandler_delete(ag3, [0, 1])

    def test_pair_needs_affine_plane(self, mols4):
        with pytest.raises(InvalidLineSelection):
            sandler_delete(partial_net(mols4), [0, 4])

    def test_single_column_line(self, mols4):
        result = sandler_delete(partial_net(mols4), [4])
        assert result.deleted_points == 4
        assert result.structure.n_points == 12
        assert ("column", 0) not in result.structure.tags

    def test_single_row_line(self, mols4):
        with pytest.raises(LineIsARow):
            sandler_delete(partial_net(mols4), [0])

    @pytest.mark.parametrize("lines", [[], [1, 1], [0, 1, 2, 3]])
    def test_bad_selection(self, ag3, lines):
        with pytest.raises(InvalidLineSelection):
            sandler_delete(ag3, lines)

    def test_line_out_of_range(self, ag3):
        with pytest.raises(IndexOutOfRange):
            sandler_delete(ag3, [99])


# ---------------------------------------------------------------------------
# TestTwoRowGraph
# ---------------------------------------------------------------------------


class TestTwoRowGraph:
    @pytest.fixture
    def two_rows(self):
        """A 2×5 4-MOLR with identity first rows."""
        return normalize(galois_mols(5).restrict_rows([0, 1]))

    def test_graph(self, two_rows):
        g = two_row_graph(two_rows)
        assert g.number_of_nodes() == 10
        assert g.number_of_edges() == 25
        assert nx.is_bipartite(g)
        assert all(d == 5 for _, d in g.degree())

    def test_needs_two_rows(self):
        with pytest.raises(WrongShape):
            two_row_graph(galois_mols(5).restrict_rows([0, 1, 2]))

    def test_latin_square_round_trip(self, two_rows):
        square = latin_square_of(two_rows)
        assert (square.k, square.n) == (5, 5)
        rebuilt = molr_from_latin_square(square)
        assert canonical_key(rebuilt) == canonical_key(two_rows)

    def test_latin_square_needs_n_minus_one(self):
        with pytest.raises(WrongShape):
            latin_square_of(galois_mols(5).subset([0, 1]).restrict_rows([0, 1]))

    def test_autotopisms_act_on_the_square(self):
        rec = canonical_form(galois_mols(5).restrict_rows([0, 1]))
        rep = rec.representative
        square = MolrSet(5, 5, (latin_square_of(rep),))
        flipped = MolrSet(5, 5, (square.rects[0].transpose(),))
        for h in rec.aut_generators:
            iso, swaps_rows = latin_square_isotopism(h)
            source = flipped if swaps_rows else square
            assert apply_isotopism(iso, source) == square
