"""Core types: validation, statistics, transposition, the permutation-tableau
bijection, and the text formats."""

from __future__ import annotations

import pytest
from hypothesis import given

from alttab.core import (
    AltTableau,
    empty_tableau,
    free_stats,
    from_perm_tableau,
    parse_perm_tableau,
    parse_tableau,
    perm_tableau_stats,
    relabel,
    render_perm_tableau,
    render_tableau,
    standard_tableau,
    standardize,
    to_perm_tableau,
    transpose,
    validate_alt,
    validate_perm_tableau,
)
from alttab.errors import DomainError, ParseError, ValidationError

from conftest import T0_COMPACT, tableaux


def naive_free_cells(t: AltTableau) -> set[tuple[int, int]]:
    """Independent oracle: scan the raw definition cell by cell."""
    occupied = t.arrow_map()
    out = set()
    for i, j in t.cells():
        if (i, j) in occupied:
            continue
        pointed = False
        for (a, b), kind in occupied.items():
            if kind == "L" and a == i and b < j:
                pointed = True
            if kind == "U" and b == j and a > i:
                pointed = True
        if not pointed:
            out.add((i, j))
    return out


class TestValidation:
    def test_single_cell_left_arrow_is_valid(self):
        t = validate_alt((1, 2), "DE", [(1, 2, "L")])
        assert t.arrows == ((1, 2, "L"),)

    def test_empty_tableau_is_valid(self):
        assert len(validate_alt((), "", [])) == 0

    def test_left_arrow_pointing_at_occupied_cell(self):
        # In word DEE the cell (1,2) sits right of (1,3): a left arrow at
        # (1,2) points at (1,3), which the up arrow occupies.
        with pytest.raises(ValidationError) as err:
            validate_alt((1, 2, 3), "DEE", [(1, 2, "L"), (1, 3, "U")])
        assert any(v.code == "pointed-cell-occupied" for v in err.value.violations)

    def test_arrow_off_shape(self):
        with pytest.raises(ValidationError) as err:
            validate_alt((1, 2), "DE", [(2, 1, "L")])
        assert err.value.violations[0].code == "arrow-off-shape"

    def test_label_order(self):
        with pytest.raises(ValidationError) as err:
            validate_alt((2, 1), "DE", [])
        assert any(v.code == "label-order" for v in err.value.violations)

    def test_all_violations_reported(self):
        with pytest.raises(ValidationError) as err:
            validate_alt((1, 2, 3), "DEE", [(1, 2, "L"), (1, 3, "U"), (5, 9, "L")])
        codes = {v.code for v in err.value.violations}
        assert codes == {"pointed-cell-occupied", "arrow-off-shape"}


class TestFreeStats:
    def test_corpus_statistics(self, t0):
        stats = free_stats(t0)
        assert stats.free_rows == {4, 11, 13}
        assert stats.free_cols == {1, 2, 5, 12}
        assert stats.free_cells == {(4, 5), (4, 12), (7, 8), (11, 12)}
        assert (stats.frow, stats.fcol, stats.fcell) == (3, 4, 4)

    def test_single_row(self):
        stats = free_stats(standard_tableau("D"))
        assert stats.free_rows == {1}
        assert stats.free_cols == set()
        assert stats.free_cells == set()

    def test_empty_cell_is_free(self):
        stats = free_stats(standard_tableau("DE"))
        assert stats.free_rows == {1}
        assert stats.free_cols == {2}
        assert stats.free_cells == {(1, 2)}

    @given(tableaux(max_len=9))
    def test_matches_naive_scan(self, t):
        assert free_stats(t).free_cells == naive_free_cells(t)


class TestTranspose:
    def test_single_cell(self):
        t = standard_tableau("DE", [(1, 2, "L")])
        assert transpose(t) == standard_tableau("DE", [(1, 2, "U")])

    def test_two_columns_become_two_rows(self):
        assert transpose(standard_tableau("EE")) == standard_tableau("DD")

    def test_involution_on_corpus(self, t0):
        assert transpose(transpose(t0)) == t0

    @given(tableaux(max_len=9))
    def test_involution_and_stat_swap(self, t):
        back = transpose(transpose(t))
        assert back == t
        a, b = free_stats(t), free_stats(transpose(t))
        assert a.frow == b.fcol and a.fcol == b.frow and a.fcell == b.fcell


class TestRelabel:
    def test_relabel_single_row(self):
        t = standard_tableau("D")
        assert relabel(t, [7]).labels == (7,)

    def test_standardize_restriction(self, t0):
        from alttab.decomposition import restrict

        sub = standardize(restrict(t0, {3, 5}))
        assert sub == standard_tableau("DE", [(1, 2, "L")])

    def test_relabel_then_standardize(self, t0):
        assert standardize(relabel(t0, range(10, 23))) == standardize(t0) == t0

    def test_size_mismatch(self):
        with pytest.raises(DomainError) as err:
            relabel(standard_tableau("D"), [1, 2])
        assert err.value.code == "size-mismatch"


class TestPermTableauBijection:
    def test_corpus_roundtrip(self, t0):
        p = to_perm_tableau(t0)
        assert p.labels == tuple(range(14))
        assert from_perm_tableau(p) == t0

    def test_corpus_statistics(self, t0):
        stats = perm_tableau_stats(to_perm_tableau(t0))
        assert stats.unrestricted_rows == {4, 11, 13}
        assert stats.top_one_cols == {1, 2, 5, 12}
        assert stats.superfluous_cells == {(4, 5), (4, 12), (7, 8), (11, 12)}

    def test_single_filled_cell(self):
        p = validate_perm_tableau((0, 1), "DE", [(0, 1)])
        t = from_perm_tableau(p)
        assert t.word == "E" and t.labels == (1,) and not t.arrows

    def test_single_column_all_ones(self):
        p = validate_perm_tableau((1, 2), "DE", [(1, 2)])
        assert perm_tableau_stats(p).superfluous_cells == set()

    @given(tableaux(max_len=9))
    def test_roundtrip_and_statistics_transport(self, t):
        p = to_perm_tableau(t)
        assert from_perm_tableau(p) == t
        stats, pstats = free_stats(t), perm_tableau_stats(p)
        assert pstats.top_one_cols == stats.free_cols
        assert pstats.unrestricted_rows == stats.free_rows
        assert pstats.superfluous_cells == stats.free_cells

    def test_empty_column_rejected(self):
        with pytest.raises(ValidationError) as err:
            validate_perm_tableau((1, 2), "ED", [])
        assert any(v.code == "empty-column" for v in err.value.violations)

    def test_blocked_zero_rejected(self):
        # (2,3) is 0 with a 1 above at (1,3) and a 1 on its left at (2,4).
        with pytest.raises(ValidationError) as err:
            validate_perm_tableau(
                (1, 2, 3, 4), "DDEE", [(1, 3), (1, 4), (2, 4)]
            )
        assert any(v.code == "zero-with-one-above-and-left" for v in err.value.violations)

    def test_non_total_filling_rejected(self):
        with pytest.raises(ValidationError) as err:
            validate_perm_tableau((1, 2), "DE", [], filling={})
        assert any(v.code == "non-total-filling" for v in err.value.violations)


class TestTextFormats:
    def test_corpus_parse_render(self, t0):
        assert render_tableau(t0) == T0_COMPACT
        assert parse_tableau(T0_COMPACT) == t0

    def test_empty_string_is_a_parse_error(self):
        with pytest.raises(ParseError):
            parse_tableau("")

    def test_empty_tableau_renders_as_bar(self):
        assert render_tableau(empty_tableau()) == "|"
        assert parse_tableau("|") == empty_tableau()

    def test_canonicalization_sorts_arrows(self):
        messy = "EEDDEDDEEDDED|L10,12;U6,8;L3,5;L7,9;U4,9;L6,9"
        assert render_tableau(parse_tableau(messy)) == T0_COMPACT

    def test_labels_prefix(self):
        t = parse_tableau("labels=3,5|DE|L3,5")
        assert t.labels == (3, 5)
        assert render_tableau(t) == "labels=3,5|DE|L3,5"

    def test_record_roundtrip(self, t0):
        record = render_tableau(t0, "record")
        assert "statistics=frow:3;fcol:4;fcell:4" in record
        assert parse_tableau(record) == t0

    def test_grid(self):
        assert render_tableau(standard_tableau("DE", [(1, 2, "L")]), "grid") == (
            "  2\n1 <"
        )

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_tableau("DE|X1,2")
        assert err.value.position == 3

    def test_perm_tableau_roundtrip(self, t0):
        p = to_perm_tableau(t0)
        assert parse_perm_tableau(render_perm_tableau(p)) == p

    @given(tableaux(max_len=9))
    def test_parse_render_identity(self, t):
        assert parse_tableau(render_tableau(t)) == t
        assert parse_tableau(render_tableau(t, "record")) == t
