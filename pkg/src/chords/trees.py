"""
Leaf-labelled planar binary trees and the T-map.

Vertices are addressed by paths of ``"L"`` / ``"R"`` steps from the root.
Edges are indexed in preorder starting with 1 for the root edge, so the edge
above a vertex has the preorder index of that vertex.

``to_tree`` sends a rooted connected chord diagram to its tree, with leaves
labelled in the intersection order. ``from_tree`` inverts it on trees that
satisfy P1 and P2 recursively:

- P1: at every internal vertex the smallest label of the left subtree is
  below the label at the end of the fully right branch from that vertex.
- P2: the smallest removable subtree containing leaf 1 carries the labels
  ``1, n - l + 2, ..., n`` where ``l`` is its leaf count.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple, Union

from chords.diagram import ChordDiagram, insert, root_share_decompose
from chords.errors import ChordError, IntervalError, TreeImageError
from chords.order import DIAGRAM_CACHE_SIZE

logger = logging.getLogger(__name__)

Path = Tuple[str, ...]


@dataclass(frozen=True)
class Leaf:
    label: int

    def __str__(self) -> str:
        return str(self.label)


@dataclass(frozen=True)
class Node:
    left: "Tree"
    right: "Tree"

    def __str__(self) -> str:
        return f"({self.left},{self.right})"


Tree = Union[Leaf, Node]


def leaves(tree: Tree) -> List[int]:
    """Leaf labels left to right."""
    if isinstance(tree, Leaf):
        return [tree.label]
    return leaves(tree.left) + leaves(tree.right)


def leaf_count(tree: Tree) -> int:
    if isinstance(tree, Leaf):
        return 1
    return leaf_count(tree.left) + leaf_count(tree.right)


def preorder_paths(tree: Tree, prefix: Path = ()) -> List[Path]:
    """Vertex paths in preorder; position ``i - 1`` holds the vertex below edge ``i``."""
    if isinstance(tree, Leaf):
        return [prefix]
    return [prefix] + preorder_paths(tree.left, prefix + ("L",)) + preorder_paths(tree.right, prefix + ("R",))


def edge_index(tree: Tree, path: Path) -> int:
    return preorder_paths(tree).index(tuple(path)) + 1


def subtree_at(tree: Tree, path: Path) -> Tree:
    for step in path:
        if not isinstance(tree, Node):
            raise ChordError(f"path {''.join(path)} runs past a leaf")
        tree = tree.left if step == "L" else tree.right
    return tree


def replace_at(tree: Tree, path: Path, new: Tree) -> Tree:
    if not path:
        return new
    if not isinstance(tree, Node):
        raise ChordError(f"path {''.join(path)} runs past a leaf")
    head, rest = path[0], path[1:]
    if head == "L":
        return Node(replace_at(tree.left, rest, new), tree.right)
    return Node(tree.left, replace_at(tree.right, rest, new))


def tree_insert(inner: Tree, host: Tree, edge: int) -> Tree:
    """Split edge ``edge`` of ``host`` with a new vertex whose left subtree is ``inner``."""
    paths = preorder_paths(host)
    if not 1 <= edge <= len(paths):
        raise IntervalError(f"edge {edge} outside 1..{len(paths)} for a {leaf_count(host)}-leaf tree")
    path = paths[edge - 1]
    return replace_at(host, path, Node(inner, subtree_at(host, path)))


def relabel(tree: Tree, mapping: Union[Mapping[int, int], Callable[[int], int]]) -> Tree:
    fn = mapping if callable(mapping) else mapping.__getitem__
    if isinstance(tree, Leaf):
        return Leaf(fn(tree.label))
    return Node(relabel(tree.left, fn), relabel(tree.right, fn))


def normalize(tree: Tree) -> Tree:
    """Relabel order-preservingly onto 1..n."""
    ranks = {label: pos for pos, label in enumerate(sorted(leaves(tree)), start=1)}
    return relabel(tree, ranks)


def shape(tree: Tree) -> Tree:
    """The unlabelled shape, every leaf labelled 0."""
    return relabel(tree, lambda _: 0)


def fully_right_leaf(tree: Tree) -> int:
    while isinstance(tree, Node):
        tree = tree.right
    return tree.label


def remove_subtree(tree: Tree, path: Path) -> Tree:
    """Delete the subtree at ``path`` and replace its parent with the sibling."""
    if not path:
        raise ChordError("cannot remove the whole tree")
    parent_path, step = tuple(path[:-1]), path[-1]
    parent = subtree_at(tree, parent_path)
    sibling = parent.right if step == "L" else parent.left
    return replace_at(tree, parent_path, sibling)


def _require_permutation(tree: Tree) -> None:
    labels = leaves(tree)
    if sorted(labels) != list(range(1, len(labels) + 1)):
        raise TreeImageError(f"leaf labels {labels} are not a permutation of 1..{len(labels)}")


def p1_violation(tree: Tree, prefix: Path = ()) -> Optional[Path]:
    """First vertex (preorder) where P1 fails, or None."""
    if isinstance(tree, Leaf):
        return None
    if min(leaves(tree.left)) >= fully_right_leaf(tree):
        return prefix
    return p1_violation(tree.left, prefix + ("L",)) or p1_violation(tree.right, prefix + ("R",))


def check_p1(tree: Tree) -> bool:
    return p1_violation(tree) is None


def _path_to_label(tree: Tree, label: int) -> Path:
    for path in preorder_paths(tree):
        node = subtree_at(tree, path)
        if isinstance(node, Leaf) and node.label == label:
            return path
    raise ChordError(f"no leaf labelled {label}")


def removable_paths(tree: Tree) -> List[Path]:
    """Vertices on the path from leaf 1 upward whose subtree can be removed keeping P1, smallest first."""
    leaf_path = _path_to_label(tree, 1)
    out = []
    for cut in range(len(leaf_path), 0, -1):
        candidate = leaf_path[:cut]
        if check_p1(remove_subtree(tree, candidate)):
            out.append(candidate)
    return out


def smallest_removable(tree: Tree) -> Optional[Path]:
    paths = removable_paths(tree)
    return paths[0] if paths else None


def largest_removable(tree: Tree) -> Optional[Path]:
    paths = removable_paths(tree)
    return paths[-1] if paths else None


@dataclass(frozen=True)
class TreeSplit:
    """A tree cut at a removable subtree ``H`` containing leaf 1."""

    path: Path
    removed: Tree
    rest: Tree
    edge: int


def split_tree(tree: Tree, strategy: str = "smallest") -> TreeSplit:
    """
    Cut off the removable subtree containing leaf 1 and check P2 on it.

    Raises ``TreeImageError`` when no such subtree exists, when it is a right
    child, or when its labels are not the block P2 asks for.
    """
    if strategy not in ("smallest", "largest"):
        raise ChordError(f"unknown strategy {strategy!r}")
    if not check_p1(tree):
        raise TreeImageError("tree fails P1", p1_violation(tree))
    path = smallest_removable(tree) if strategy == "smallest" else largest_removable(tree)
    if path is None:
        raise TreeImageError("no removable subtree contains leaf 1", _path_to_label(tree, 1))
    if path[-1] != "L":
        raise TreeImageError("removable subtree containing 1 is a right child", path)
    removed = subtree_at(tree, path)
    n, size = leaf_count(tree), leaf_count(removed)
    expected = [1] + list(range(n - size + 2, n + 1))
    if sorted(leaves(removed)) != expected:
        raise TreeImageError(f"removable subtree has labels {sorted(leaves(removed))}, expected {expected}", path)
    rest = remove_subtree(tree, path)
    return TreeSplit(path=path, removed=removed, rest=rest, edge=edge_index(rest, path[:-1]))


def check_p2_recursive(tree: Tree) -> bool:
    """P2 here and on both pieces after cutting, all the way down."""
    _require_permutation(tree)
    if isinstance(tree, Leaf):
        return True
    try:
        part = split_tree(tree)
    except TreeImageError:
        return False
    return check_p2_recursive(normalize(part.removed)) and check_p2_recursive(normalize(part.rest))


def in_image(tree: Tree) -> bool:
    _require_permutation(tree)
    return check_p1(tree) and check_p2_recursive(tree)


@lru_cache(maxsize=DIAGRAM_CACHE_SIZE)
def to_tree(diagram: ChordDiagram) -> Tree:
    """T(C): leaves labelled by the intersection order of ``C``."""
    diagram.require_connected()
    if diagram.n == 1:
        return Leaf(1)
    inner, interval, host = root_share_decompose(diagram)
    m = host.n
    # host chords follow the root in the order; the rest of the root share comes last
    inner_tree = relabel(to_tree(inner), lambda l: 1 if l == 1 else l + m)
    host_tree = relabel(to_tree(host), lambda l: l + 1)
    return tree_insert(inner_tree, host_tree, interval)


def from_tree(tree: Tree, strategy: str = "smallest") -> ChordDiagram:
    """Inverse of ``to_tree`` on trees satisfying P1 and P2 recursively."""
    _require_permutation(tree)
    if isinstance(tree, Leaf):
        return ChordDiagram.single()
    part = split_tree(tree, strategy)
    try:
        inner = from_tree(normalize(part.removed), strategy)
    except TreeImageError as exc:
        raise TreeImageError(exc.reason, part.path + (exc.vertex or ())) from exc
    try:
        host = from_tree(normalize(part.rest), strategy)
    except TreeImageError as exc:
        raise TreeImageError(exc.reason, _lift_rest_path(exc.vertex or (), part.path)) from exc
    return insert(inner, host, part.edge)


def _lift_rest_path(vertex: Path, cut: Path) -> Path:
    """Map a vertex of ``remove_subtree(tree, cut)`` back to its path in ``tree``."""
    parent = cut[:-1]
    if vertex[: len(parent)] != parent:
        return vertex
    sibling = "R" if cut[-1] == "L" else "L"
    return parent + (sibling,) + vertex[len(parent) :]


def all_shapes(n: int) -> List[Tree]:
    """Every planar binary tree shape with ``n`` leaves (leaves labelled 0)."""
    return list(_shapes(n))


@lru_cache(maxsize=None)
def _shapes(n: int) -> Tuple[Tree, ...]:
    if n == 1:
        return (Leaf(0),)
    out = []
    for left in range(1, n):
        for a in _shapes(left):
            for b in _shapes(n - left):
                out.append(Node(a, b))
    return tuple(out)


def label_shape(tree: Tree, labels: List[int]) -> Tree:
    """Put ``labels`` on the leaves of ``tree`` left to right."""
    it = iter(labels)
    return relabel(tree, lambda _: next(it))


def all_labelled_trees(n: int) -> Iterator[Tree]:
    for s in all_shapes(n):
        for perm in itertools.permutations(range(1, n + 1)):
            yield label_shape(s, list(perm))


def tree_to_json(tree: Tree) -> Dict[str, object]:
    if isinstance(tree, Leaf):
        return {"leaf": tree.label}
    return {"left": tree_to_json(tree.left), "right": tree_to_json(tree.right)}


def tree_from_json(data: Mapping[str, object]) -> Tree:
    if "leaf" in data:
        return Leaf(int(data["leaf"]))
    return Node(tree_from_json(data["left"]), tree_from_json(data["right"]))


def parse_tree(text: str) -> Tree:
    """Parse the bracket form, e.g. ``"((1,3),2)"``."""
    tokens = text.replace(" ", "")
    tree, pos = _parse(tokens, 0)
    if pos != len(tokens):
        raise ChordError(f"trailing input in tree {text!r} at {pos}")
    return tree


def _parse(text: str, pos: int) -> Tuple[Tree, int]:
    if pos >= len(text):
        raise ChordError(f"unexpected end of tree {text!r}")
    if text[pos] == "(":
        left, pos = _parse(text, pos + 1)
        if pos >= len(text) or text[pos] != ",":
            raise ChordError(f"expected ',' at {pos} in {text!r}")
        right, pos = _parse(text, pos + 1)
        if pos >= len(text) or text[pos] != ")":
            raise ChordError(f"expected ')' at {pos} in {text!r}")
        return Node(left, right), pos + 1
    end = pos
    while end < len(text) and text[end].isdigit():
        end += 1
    if end == pos:
        raise ChordError(f"expected a label at {pos} in {text!r}")
    return Leaf(int(text[pos:end])), end
