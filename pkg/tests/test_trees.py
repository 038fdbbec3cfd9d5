"""Tree, forest, arc-diagram and binary-tree encodings."""

from __future__ import annotations

import math

import pytest
from hypothesis import given

from alttab.core import empty_tableau, free_stats, relabel, standard_tableau
from alttab.decomposition import restrict
from alttab.enumeration import all_tableaux
from alttab.errors import DomainError, ParseError, ValidationError
from alttab.trees import (
    MAX_ROOTED,
    MIN_ROOTED,
    ArcDiagram,
    BinAltTree,
    PlaneAltForest,
    PlaneAltTree,
    arc_diagram,
    arcs_to_forest,
    binary_pair,
    binary_pair_inv,
    crossings,
    forest_to_arcs,
    from_binary_tree,
    from_forest,
    from_tree,
    out_crossings,
    parse_arcs,
    parse_bin_pair,
    parse_forest,
    render_arcs,
    render_bin_pair,
    render_forest,
    render_tree,
    to_binary_tree,
    to_forest,
    to_tree,
    validate_arc_diagram,
    validate_bin_tree,
    validate_forest,
    validate_tree,
)

from conftest import tableaux

T0_ARCS = {
    (3, 5), (4, 9), (6, 8), (6, 9), (7, 9), (10, 12),
    (0, 1), (0, 2), (0, 5), (0, 12),
    (4, 14), (11, 14), (13, 14),
    (0, 14),
}


class TestPlaneTrees:
    def test_corpus_component_tree(self, t0):
        component = restrict(t0, {4, 6, 7, 8, 9})
        tree = to_tree(component)
        assert tree == PlaneAltTree(
            "W", 4,
            (PlaneAltTree("B", 9, (PlaneAltTree("W", 6, (PlaneAltTree("B", 8),)),
                                   PlaneAltTree("W", 7))),),
        )
        assert render_tree(tree) == "(W 4 (B 9 (W 6 (B 8)) (W 7)))"
        assert from_tree(tree) == component

    def test_leaf(self):
        assert to_tree(relabel(standard_tableau("D"), [7])) == PlaneAltTree("W", 7)

    def test_column_packed_pair(self, t0):
        tree = to_tree(restrict(t0, {3, 5}))
        assert tree == PlaneAltTree("B", 5, (PlaneAltTree("W", 3),))

    def test_not_packed(self, t0):
        with pytest.raises(DomainError) as err:
            to_tree(t0)
        assert err.value.code == "not-packed"

    def test_corpus_forest_roots(self, t0):
        forest = to_forest(t0)
        assert [(t.color, t.label) for t in forest.trees] == [
            ("B", 1), ("B", 2), ("W", 4), ("B", 5), ("W", 11), ("B", 12), ("W", 13),
        ]
        validate_forest(forest)

    def test_empty_forest(self):
        assert to_forest(empty_tableau()) == PlaneAltForest()

    @pytest.mark.parametrize("n", range(7))
    def test_forest_roundtrip_exhaustive(self, n):
        for t in all_tableaux(n):
            forest = to_forest(t)
            validate_forest(forest)
            assert forest.size() == n
            assert from_forest(forest) == t

    def test_validator_rejects_wrong_order(self):
        bad = PlaneAltTree("B", 9, (PlaneAltTree("W", 7), PlaneAltTree("W", 6)))
        with pytest.raises(ValidationError):
            validate_tree(bad)

    def test_validator_rejects_non_minimal_white(self):
        bad = PlaneAltTree("W", 9, (PlaneAltTree("B", 3),))
        with pytest.raises(ValidationError):
            validate_tree(bad)

    @given(tableaux(max_len=10))
    def test_forest_roundtrip_random(self, t):
        assert from_forest(to_forest(t)) == t


class TestArcDiagrams:
    def test_corpus_arcs(self, t0):
        d = arc_diagram(t0)
        assert d.points == tuple(range(15))
        assert set(d.arcs) == T0_ARCS and len(d.arcs) == 14
        validate_arc_diagram(d)

    def test_single_row(self):
        d = arc_diagram(standard_tableau("D"))
        assert d.points == (0, 1, 2) and set(d.arcs) == {(1, 2), (0, 2)}

    def test_empty(self):
        d = arc_diagram(empty_tableau())
        assert d.points == (0, 1) and d.arcs == ((0, 1),)

    def test_agrees_with_forest_route(self, t0):
        assert forest_to_arcs(to_forest(t0)) == arc_diagram(t0)

    def test_forest_route_needs_contiguous_labels(self):
        forest = PlaneAltForest((PlaneAltTree("W", 3),))
        with pytest.raises(DomainError) as err:
            forest_to_arcs(forest)
        assert err.value.code == "label-gap"

    @pytest.mark.parametrize("n", range(7))
    def test_identities_exhaustive(self, n):
        for t in all_tableaux(n):
            forest = to_forest(t)
            d = arc_diagram(t)
            validate_arc_diagram(d)
            assert d == forest_to_arcs(forest)
            assert arcs_to_forest(d) == forest

    def test_validator_in_out(self):
        with pytest.raises(ValidationError) as err:
            validate_arc_diagram(ArcDiagram((0, 1, 2), ((0, 1), (1, 2))))
        assert any(v.code == "in-and-out" for v in err.value.violations)

    def test_validator_tree_condition(self):
        with pytest.raises(ValidationError) as err:
            validate_arc_diagram(ArcDiagram((0, 1, 2, 3), ((0, 1), (2, 3))))
        assert any(v.code == "not-a-tree" for v in err.value.violations)

    def test_corpus_out_crossings(self, t0):
        assert out_crossings(arc_diagram(t0)) == {(4, 5), (4, 12), (7, 8), (11, 12)}

    def test_single_free_cell_out_crossing(self):
        assert out_crossings(arc_diagram(standard_tableau("DE"))) == {(1, 2)}

    def test_no_out_crossings_single_row(self):
        assert out_crossings(arc_diagram(standard_tableau("D"))) == frozenset()

    @pytest.mark.parametrize("n", range(7))
    def test_out_crossings_are_free_cells(self, n):
        for t in all_tableaux(n):
            assert out_crossings(arc_diagram(t)) == free_stats(t).free_cells

    @pytest.mark.parametrize("n", range(7))
    def test_no_free_cells_means_noncrossing(self, n):
        for t in all_tableaux(n):
            if free_stats(t).fcell == 0:
                assert crossings(arc_diagram(t)) == frozenset()


class TestBinaryTrees:
    def test_two_free_rows(self):
        tree = to_binary_tree(standard_tableau("DD"), MIN_ROOTED)
        assert tree == BinAltTree(1, None, BinAltTree(2, kind=MIN_ROOTED), MIN_ROOTED)

    def test_up_arrow_goes_left(self):
        tree = to_binary_tree(standard_tableau("DE", [(1, 2, "U")]), MIN_ROOTED)
        assert tree == BinAltTree(1, BinAltTree(2, kind=MAX_ROOTED), None, MIN_ROOTED)

    def test_pair_of_leaves(self):
        pair = binary_pair(standard_tableau("DE"))
        assert pair == (BinAltTree(1, kind=MIN_ROOTED), BinAltTree(2, kind=MAX_ROOTED))

    def test_wrong_class(self):
        with pytest.raises(DomainError) as err:
            to_binary_tree(standard_tableau("E"), MIN_ROOTED)
        assert err.value.code == "wrong-class"

    @pytest.mark.parametrize("k", range(1, 6))
    def test_min_tree_count_is_factorial(self, k):
        trees = set()
        for t in all_tableaux(k):
            if free_stats(t).fcol == 0:
                tree = to_binary_tree(t, MIN_ROOTED)
                validate_bin_tree(tree, MIN_ROOTED)
                assert from_binary_tree(tree, MIN_ROOTED) == t
                trees.add(tree)
        assert len(trees) == math.factorial(k)

    @pytest.mark.parametrize("n", range(6))
    def test_pair_roundtrip_exhaustive(self, n):
        images = set()
        for t in all_tableaux(n):
            pair = binary_pair(t)
            validate_bin_tree(pair[0], MIN_ROOTED)
            validate_bin_tree(pair[1], MAX_ROOTED)
            assert binary_pair_inv(pair) == t
            images.add(pair)
        assert len(images) == math.factorial(n + 1)

    def test_validator_rejects_bad_left_child(self):
        bad = BinAltTree(2, BinAltTree(1, kind=MAX_ROOTED), None, MIN_ROOTED)
        with pytest.raises(ValidationError):
            validate_bin_tree(bad, MIN_ROOTED)


def test_depth_guard():
    # A valid alternating chain of 201 vertices exceeds the recursion cap.
    tree = PlaneAltTree("W", 100)
    lo, hi = 99, 100
    for _ in range(100):
        hi += 1
        tree = PlaneAltTree("B", hi, (tree,))
        tree = PlaneAltTree("W", lo, (tree,))
        lo -= 1
    from alttab.errors import ResourceLimitError

    with pytest.raises(ResourceLimitError):
        validate_tree(tree)


class TestTextFormats:
    def test_forest_text_roundtrip(self, t0):
        text = render_forest(to_forest(t0))
        assert text.startswith("(B 1) (B 2) (W 4 (B 9 (W 6 (B 8)) (W 7)))")
        assert parse_forest(text) == to_forest(t0)

    def test_forest_empty_text(self):
        assert render_forest(PlaneAltForest()) == ""
        assert parse_forest("") == PlaneAltForest()

    def test_forest_parse_error(self):
        with pytest.raises(ParseError):
            parse_forest("(W 4")
        with pytest.raises(ParseError):
            parse_forest("(Q 4)")

    def test_arcs_text(self, t0):
        text = render_arcs(arc_diagram(t0))
        assert text.startswith("points=0..14 arcs=(0,1)(0,2)(0,5)(0,12)(0,14)")
        assert parse_arcs(text) == arc_diagram(t0)

    def test_arcs_parse_error(self):
        with pytest.raises(ParseError):
            parse_arcs("points=0-14 arcs=")

    def test_bin_pair_text(self):
        pair = binary_pair(standard_tableau("DE"))
        assert render_bin_pair(pair) == "(1 L:- R:-) (2 L:- R:-)"
        assert parse_bin_pair(render_bin_pair(pair)) == pair

    def test_bin_pair_empty(self):
        pair = binary_pair(empty_tableau())
        assert render_bin_pair(pair) == "- -"
        assert parse_bin_pair("- -") == (None, None)

    @given(tableaux(max_len=9))
    def test_all_text_roundtrips(self, t):
        forest = to_forest(t)
        assert parse_forest(render_forest(forest)) == forest
        if t.is_standard():
            d = arc_diagram(t)
            assert parse_arcs(render_arcs(d)) == d
        pair = binary_pair(t)
        assert parse_bin_pair(render_bin_pair(pair)) == pair
