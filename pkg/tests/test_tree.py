import random

import pytest
from hypothesis import given, strategies as st

from helpers import DEFAULT_ARITIES, STRUCTURES, node, random_tree
from radtree.errors import DuplicateEntry, MalformedLine, TrailingTokens, Underflow
from radtree.tree import (
    ArityTable,
    RadicalTree,
    iter_preorder,
    leaf,
    parse_sequence,
    rssl,
    to_preorder,
    validate_tree,
)


def leaves():
    return st.sampled_from("ABCDE").map(leaf)


def trees(max_depth=3):
    if max_depth == 0:
        return leaves()
    return st.one_of(
        leaves(),
        st.sampled_from(STRUCTURES).flatmap(
            lambda s: st.tuples(
                *[trees(max_depth - 1)] * DEFAULT_ARITIES.arity(s)
            ).map(lambda cs: RadicalTree(s, cs))
        ),
    )


class TestArityTable:
    def test_default_has_the_twelve_description_characters(self, arities):
        assert len(arities) == 12
        assert arities.arity("⿲") == 3
        assert arities.arity("⿳") == 3
        for token, arity in arities.items():
            if token not in ("⿲", "⿳"):
                assert arity == 2

    def test_membership_decides_kind(self, arities):
        assert arities.is_structure("⿰")
        assert not arities.is_structure("A")
        assert "⿱" in arities and "木" not in arities

    def test_rejects_arity_below_two(self):
        with pytest.raises(ValueError):
            ArityTable({"x": 1})

    def test_from_file(self, tmp_path):
        path = tmp_path / "arities.tsv"
        path.write_text("# custom operators\nPAIR\t2\n\nTRIPLE\t3\n", encoding="utf-8")
        table = ArityTable.from_file(path)
        assert table.arity("PAIR") == 2
        assert table.arity("TRIPLE") == 3
        assert len(table) == 2

    def test_from_file_rejects_bad_lines(self, tmp_path):
        path = tmp_path / "arities.tsv"
        path.write_text("PAIR 2\n", encoding="utf-8")
        with pytest.raises(MalformedLine):
            ArityTable.from_file(path)
        path.write_text("PAIR\ttwo\n", encoding="utf-8")
        with pytest.raises(MalformedLine):
            ArityTable.from_file(path)
        path.write_text("PAIR\t1\n", encoding="utf-8")
        with pytest.raises(MalformedLine):
            ArityTable.from_file(path)
        path.write_text("PAIR\t2\nPAIR\t3\n", encoding="utf-8")
        with pytest.raises(DuplicateEntry):
            ArityTable.from_file(path)


class TestParseSequence:
    def test_single_radical_is_its_own_tree(self, arities):
        tree = parse_sequence(["A"], arities)
        assert tree == leaf("A")
        assert rssl(tree) == 1

    def test_nested_structure(self, arities):
        tree = parse_sequence(["⿰", "A", "⿱", "B", "C"], arities)
        assert tree == node("⿰", leaf("A"), node("⿱", leaf("B"), leaf("C")))

    def test_underflow_on_missing_child(self, arities):
        with pytest.raises(Underflow):
            parse_sequence(["⿰", "A"], arities)

    def test_trailing_tokens_after_complete_tree(self, arities):
        with pytest.raises(TrailingTokens):
            parse_sequence(["A", "B"], arities)

    def test_empty_sequence_underflows(self, arities):
        with pytest.raises(Underflow):
            parse_sequence([], arities)

    def test_empty_token_rejected(self, arities):
        with pytest.raises(MalformedLine):
            parse_sequence(["⿰", "", "B"], arities)

    def test_deterministic(self, arities):
        tokens = ["⿳", "A", "⿰", "B", "C", "D"]
        assert parse_sequence(tokens, arities) == parse_sequence(tokens, arities)

    def test_every_strict_prefix_underflows(self, arities):
        rng = random.Random(7)
        for _ in range(50):
            tokens = to_preorder(random_tree(rng, max_depth=4))
            if len(tokens) < 2:
                continue
            for cut in range(len(tokens)):
                with pytest.raises(Underflow):
                    parse_sequence(tokens[:cut], arities)


class TestSerialization:
    def test_leaf(self):
        assert to_preorder(leaf("A")) == ["A"]

    def test_nested(self):
        tree = node("⿰", leaf("A"), node("⿱", leaf("B"), leaf("C")))
        assert to_preorder(tree) == ["⿰", "A", "⿱", "B", "C"]

    def test_arity_three(self):
        tree = node("⿲", leaf("A"), leaf("B"), leaf("C"))
        assert to_preorder(tree) == ["⿲", "A", "B", "C"]

    @given(trees())
    def test_round_trip(self, tree):
        assert parse_sequence(to_preorder(tree), DEFAULT_ARITIES) == tree

    def test_round_trip_random(self, arities):
        rng = random.Random(11)
        for _ in range(200):
            tree = random_tree(rng, max_depth=5)
            assert parse_sequence(to_preorder(tree), arities) == tree


class TestRssl:
    def test_examples(self):
        assert rssl(leaf("A")) == 1
        assert rssl(node("⿰", leaf("A"), node("⿱", leaf("B"), leaf("C")))) == 5
        assert rssl(node("⿳", leaf("A"), leaf("B"), node("⿰", leaf("C"), leaf("D")))) == 6
        assert rssl(node("⿰", node("⿱", leaf("A"), leaf("B")),
                         node("⿱", leaf("C"), leaf("D")))) == 7

    def test_matches_sequence_length(self):
        rng = random.Random(3)
        for _ in range(100):
            tree = random_tree(rng, max_depth=5)
            assert rssl(tree) == len(to_preorder(tree))

    @given(trees())
    def test_recursion(self, tree):
        assert rssl(tree) == 1 + sum(rssl(c) for c in tree.children)


class TestValidateTree:
    def test_accepts_valid(self, arities):
        validate_tree(node("⿰", leaf("A"), leaf("B")), arities)

    def test_rejects_wrong_child_count(self, arities):
        with pytest.raises(ValueError):
            validate_tree(RadicalTree("⿰", (leaf("A"),)), arities)

    def test_rejects_radical_with_children(self, arities):
        with pytest.raises(ValueError):
            validate_tree(RadicalTree("A", (leaf("B"), leaf("C"))), arities)


def test_iter_preorder_order():
    tree = node("⿰", node("⿱", leaf("A"), leaf("B")), leaf("C"))
    assert [n.symbol for n in iter_preorder(tree)] == ["⿰", "⿱", "A", "B", "C"]
