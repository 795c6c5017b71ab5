import pytest
from hypothesis import given, strategies as st

from chords.diagram import ChordDiagram, insert
from chords.enumeration import rccd
from chords.errors import IntervalError, TreeImageError
from chords.families import cycloid, ladder, wheel
from chords.order import stats
from chords.trees import (
    Leaf,
    Node,
    all_labelled_trees,
    all_shapes,
    check_p1,
    check_p2_recursive,
    from_tree,
    fully_right_leaf,
    in_image,
    label_shape,
    leaves,
    parse_tree,
    preorder_paths,
    relabel,
    removable_paths,
    shape,
    split_tree,
    subtree_at,
    to_tree,
    tree_from_json,
    tree_insert,
    tree_to_json,
)


def right_comb(n):
    tree = Leaf(n)
    for label in range(n - 1, 0, -1):
        tree = Node(Leaf(label), tree)
    return tree


def test_insert_leaf_into_leaf():
    assert tree_insert(Leaf(1), Leaf(2), 1) == Node(Leaf(1), Leaf(2))
    with pytest.raises(IntervalError):
        tree_insert(Leaf(1), Leaf(2), 2)


def test_preorder_edges():
    tree = parse_tree("((1,3),2)")
    assert preorder_paths(tree) == [(), ("L",), ("L", "L"), ("L", "R"), ("R",)]
    assert len(preorder_paths(tree)) == 2 * 3 - 1
    assert tree_insert(Leaf(9), tree, 3) == parse_tree("(((9,1),3),2)")


def test_tree_insert_splits_inner_edge():
    host = parse_tree("(2,3)")
    assert tree_insert(Leaf(1), host, 1) == parse_tree("(1,(2,3))")
    assert tree_insert(Leaf(1), host, 2) == parse_tree("((1,2),3)")
    assert tree_insert(Leaf(1), host, 3) == parse_tree("(2,(1,3))")


@pytest.mark.parametrize("text", ["1", "(1,2)", "((1,3),2)", "(2,(1,3))", "(((1,4),3),2)"])
def test_bracket_and_json_forms(text):
    tree = parse_tree(text)
    assert str(tree) == text
    assert tree_from_json(tree_to_json(tree)) == tree


def test_tree_json_shape():
    assert tree_to_json(parse_tree("(1,2)")) == {"left": {"leaf": 1}, "right": {"leaf": 2}}


def test_wheel_tree_by_repeated_insertion():
    acc = Leaf(1)
    for k in range(2, 6):
        acc = tree_insert(acc, Leaf(k), 1)
    assert acc == parse_tree("((((1,2),3),4),5)")
    assert to_tree(wheel(5)) == acc


@pytest.mark.parametrize("n", range(1, 7))
def test_cycloid_tree_is_right_comb(n):
    tree = to_tree(cycloid(n))
    assert tree == right_comb(n)
    assert fully_right_leaf(tree) == n


def test_ladder_trees():
    assert to_tree(ladder(3)) == parse_tree("((1,3),2)")
    assert to_tree(ladder(4)) == parse_tree("(((1,4),3),2)")
    for n in range(2, 7):
        tree = to_tree(ladder(n))
        assert leaves(tree) == [1] + list(range(n, 1, -1))
        assert fully_right_leaf(tree) == 2


def test_small_table(rccd3):
    assert to_tree(ChordDiagram.single()) == Leaf(1)
    assert to_tree(ChordDiagram.from_word("ABAB")) == parse_tree("(1,2)")
    assert to_tree(rccd3["wheel"]) == parse_tree("((1,2),3)")
    assert to_tree(rccd3["cycloid"]) == parse_tree("(1,(2,3))")
    assert to_tree(rccd3["ladder"]) == parse_tree("((1,3),2)")
    assert to_tree(rccd3["other"]) == parse_tree("(2,(1,3))")
    for diagram in rccd3.values():
        assert from_tree(to_tree(diagram)) == diagram


def test_t_map_of_insertion():
    for total in range(2, 6):
        for inner_size in range(1, total):
            for inner in rccd(inner_size):
                for host in rccd(total - inner_size):
                    m = host.n
                    for interval in range(1, 2 * m):
                        expected = tree_insert(
                            relabel(to_tree(inner), lambda l: 1 if l == 1 else l + m),
                            relabel(to_tree(host), lambda l: l + 1),
                            interval,
                        )
                        assert to_tree(insert(inner, host, interval)) == expected


def test_p1():
    assert not check_p1(parse_tree("(2,1)"))
    assert check_p1(parse_tree("(1,2)"))
    assert check_p1(parse_tree("((1,3),2)"))


def test_removable_subtrees():
    tree = parse_tree("((1,3),2)")
    assert removable_paths(tree) == [("L",)]
    split = split_tree(tree)
    assert split.removed == parse_tree("(1,3)")
    assert split.rest == Leaf(2)
    assert split.edge == 1

    split = split_tree(parse_tree("(2,(1,3))"))
    assert split.removed == Leaf(1)
    assert split.rest == parse_tree("(2,3)")
    assert split.edge == 3


def test_from_tree_errors():
    with pytest.raises(TreeImageError, match="vertex: root"):
        from_tree(parse_tree("(2,1)"))
    with pytest.raises(TreeImageError):
        from_tree(parse_tree("(1,3)"))
    assert from_tree(Leaf(1)) == ChordDiagram.single()


def test_nested_failure_reports_input_vertex():
    tree = parse_tree("(1,(((2,4),3),5))")
    with pytest.raises(TreeImageError, match="vertex: RLL") as info:
        from_tree(tree)
    assert info.value.vertex == ("R", "L", "L")
    assert sorted(leaves(subtree_at(tree, info.value.vertex))) == [2, 4]
    assert "expected [1, 4]" in info.value.reason
    assert not in_image(tree)


def test_shapes_are_catalan():
    assert [len(all_shapes(n)) for n in range(1, 7)] == [1, 1, 2, 5, 14, 42]


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 4), (4, 27)])
def test_filter_equals_image(rccd_by_n, n, expected):
    filtered = {t for t in all_labelled_trees(n) if in_image(t)}
    image = {to_tree(d) for d in rccd_by_n[n]}
    assert len(filtered) == expected
    assert filtered == image


def test_size_four_trees_distinct(rccd_by_n):
    pairs = {(str(shape(to_tree(d))), tuple(leaves(to_tree(d)))) for d in rccd_by_n[4]}
    assert len(pairs) == 27


@pytest.mark.parametrize("n", range(1, 6))
def test_round_trip(rccd_by_n, n):
    for diagram in rccd_by_n[n]:
        tree = to_tree(diagram)
        assert check_p1(tree)
        assert check_p2_recursive(tree)
        assert from_tree(tree) == diagram
        assert fully_right_leaf(tree) == stats(diagram).b


@pytest.mark.slow
def test_round_trip_six(rccd_by_n):
    trees = set()
    for diagram in rccd_by_n[6]:
        tree = to_tree(diagram)
        assert from_tree(tree) == diagram
        assert fully_right_leaf(tree) == stats(diagram).b
        trees.add(tree)
    assert len(trees) == 2830


@given(st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.tuples(st.sampled_from(all_shapes(n)), st.permutations(list(range(1, n + 1))))
))
def test_image_trees_round_trip(case):
    shape_, labels = case
    tree = label_shape(shape_, labels)
    if in_image(tree):
        assert to_tree(from_tree(tree)) == tree
