"""Rooted trees and forests with a canonical form, plus the combinatorics
that drive the rooted-tree Hopf algebra: root-containing subtrees, edge
partitions, and the Butcher (root-grafting) product.

Canonical form
--------------
A tree serializes as ``"[" + " ".join(children) + "]"``.  Children are kept
sorted in *descending* lexicographic order of their canonical serializations;
this is a stable total order on trees (serializations are unique), so two
trees are equal iff they are root-preserving graph isomorphic iff their
serializations coincide.  Forests sort their trees by the same order and the
empty forest serializes as ``"1"``.

All values are immutable after construction.  The per-tree memo tables used
for subtree/partition enumeration are write-once caches and safe for
concurrent readers.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping

from .errors import ParseError, ResourceLimitError

#: Largest tree order the enumerator will materialize by default.
DEFAULT_ORDER_CAP = 12


class RootedTree:
    """An unlabeled rooted tree in canonical form.

    ``children`` may be given in any order; the constructor sorts them.
    """

    __slots__ = ("children", "order", "serial", "_hash")

    def __init__(self, children: Iterable["RootedTree"] = ()):
        kids = sorted(children, key=lambda t: t.serial, reverse=True)
        self.children: tuple[RootedTree, ...] = tuple(kids)
        self.order: int = 1 + sum(c.order for c in kids)
        self.serial: str = "[" + " ".join(c.serial for c in kids) + "]"
        self._hash = hash(self.serial)

    def __eq__(self, other) -> bool:
        return isinstance(other, RootedTree) and self.serial == other.serial

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"RootedTree({self.serial!r})"

    def __str__(self) -> str:
        return self.serial

    def parent_array(self) -> list[int]:
        """Preorder parent indices; the root has parent -1."""
        parents = [-1]

        def visit(node: RootedTree, index: int) -> None:
            for child in node.children:
                parents.append(index)
                visit(child, len(parents) - 1)

        visit(self, 0)
        return parents


#: The one-node tree (the generator everything else is grafted from).
LEAF = RootedTree()


class Forest:
    """A finite multiset of rooted trees; the monomial basis of the
    rooted-tree algebra.  Degree is the total node count (0 when empty)."""

    __slots__ = ("trees", "degree", "serial", "_hash")

    def __init__(self, trees: Iterable[RootedTree] = ()):
        ts = sorted(trees, key=lambda t: t.serial, reverse=True)
        self.trees: tuple[RootedTree, ...] = tuple(ts)
        self.degree: int = sum(t.order for t in ts)
        self.serial: str = " ".join(t.serial for t in ts) if ts else "1"
        self._hash = hash(self.serial)

    def __eq__(self, other) -> bool:
        return isinstance(other, Forest) and self.serial == other.serial

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Forest({self.serial!r})"

    def __str__(self) -> str:
        return self.serial

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[RootedTree]:
        return iter(self.trees)

    def union(self, other: "Forest") -> "Forest":
        """Multiset union; the algebra product of two forest monomials."""
        return Forest(self.trees + other.trees)


EMPTY_FOREST = Forest()


def single_tree_forest(tree: RootedTree) -> Forest:
    return Forest((tree,))


# ---------------------------------------------------------------------------
# Parsing.  Grammar:  Tree := "[" ws (Tree ws)* "]"
# A forest is "1" or whitespace-separated trees.
# ---------------------------------------------------------------------------


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_tree_at(text: str, pos: int) -> tuple[RootedTree, int]:
    if pos >= len(text) or text[pos] != "[":
        raise ParseError("expected '['", pos)
    pos += 1
    children: list[RootedTree] = []
    while True:
        pos = _skip_ws(text, pos)
        if pos >= len(text):
            raise ParseError("unclosed '['", pos)
        if text[pos] == "]":
            return RootedTree(children), pos + 1
        child, pos = _parse_tree_at(text, pos)
        children.append(child)


def parse_tree(text: str) -> RootedTree:
    """Parse a bracket serialization into a canonical tree.

    Raises ``ParseError`` (with byte offset) on malformed input.
    """
    pos = _skip_ws(text, 0)
    tree, pos = _parse_tree_at(text, pos)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ParseError("trailing input after tree", pos)
    return tree


def parse_forest(text: str) -> Forest:
    """Parse a forest: ``"1"`` for the empty forest, else juxtaposed trees."""
    pos = _skip_ws(text, 0)
    if pos < len(text) and text[pos] == "1":
        rest = _skip_ws(text, pos + 1)
        if rest != len(text):
            raise ParseError("trailing input after '1'", rest)
        return EMPTY_FOREST
    trees: list[RootedTree] = []
    while pos < len(text):
        tree, pos = _parse_tree_at(text, pos)
        trees.append(tree)
        pos = _skip_ws(text, pos)
    if not trees:
        raise ParseError("empty forest input (use '1')", pos)
    return Forest(trees)


# ---------------------------------------------------------------------------
# Enumeration of canonical trees and forests by order.
# ---------------------------------------------------------------------------

_tree_table: list[list[RootedTree]] = [[]]  # _tree_table[n] = trees of order n
_forest_table: list[list[Forest]] = [[EMPTY_FOREST]]


def _extend_tree_table(max_order: int) -> None:
    while len(_tree_table) <= max_order:
        n = len(_tree_table)
        # A tree of order n is a root carrying a forest of degree n-1.
        _extend_forest_table(n - 1)
        trees = [RootedTree(forest.trees) for forest in _forest_table[n - 1]]
        trees.sort(key=lambda t: t.serial)
        _tree_table.append(trees)


def _extend_forest_table(max_degree: int) -> None:
    while len(_forest_table) <= max_degree:
        m = len(_forest_table)
        _extend_tree_table(m)
        # Build multisets as non-increasing sequences in the tree order:
        # pick the largest tree first, then a forest of the remainder whose
        # trees do not exceed it.
        ranked: list[RootedTree] = []
        for order in range(1, m + 1):
            ranked.extend(_tree_table[order])
        ranked.sort(key=lambda t: t.serial, reverse=True)
        rank = {t: i for i, t in enumerate(ranked)}

        forests: list[Forest] = []

        def build(remaining: int, min_rank: int, acc: list[RootedTree]) -> None:
            if remaining == 0:
                forests.append(Forest(acc))
                return
            for t in ranked[min_rank:]:
                if t.order <= remaining:
                    acc.append(t)
                    build(remaining - t.order, rank[t], acc)
                    acc.pop()

        build(m, 0, [])
        forests.sort(key=lambda f: f.serial)
        _forest_table.append(forests)


def enumerate_trees(max_order: int, cap: int = DEFAULT_ORDER_CAP) -> list[list[RootedTree]]:
    """All canonical trees of order 1..max_order, one list per order,
    each sorted by serialization.  Orders beyond ``cap`` raise
    ``ResourceLimitError``."""
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    if max_order > cap:
        raise ResourceLimitError(f"max_order {max_order} exceeds cap {cap}")
    _extend_tree_table(max_order)
    return [list(_tree_table[n]) for n in range(1, max_order + 1)]


def enumerate_forests(degree: int, cap: int = DEFAULT_ORDER_CAP) -> list[Forest]:
    """All canonical forests of the given total degree, sorted by serialization."""
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if degree > cap:
        raise ResourceLimitError(f"degree {degree} exceeds cap {cap}")
    _extend_forest_table(degree)
    return list(_forest_table[degree])


# ---------------------------------------------------------------------------
# Root-containing subtrees and edge partitions.
# ---------------------------------------------------------------------------

_subtree_cache: dict[RootedTree, tuple[tuple[Forest, Forest], ...]] = {}
_partition_cache: dict[RootedTree, tuple[tuple[Forest, RootedTree], ...]] = {}


def ordered_subtrees(tree: RootedTree) -> tuple[tuple[Forest, Forest], ...]:
    """All (cut forest, kept part) pairs of the tree, one per connected
    root-containing vertex subset (including the empty subset).

    The kept part is returned as a forest: empty for the empty subset, a
    single tree otherwise.  Distinct vertex subsets are separate entries even
    when they produce equal pairs; the coproduct needs those multiplicities.
    """
    cached = _subtree_cache.get(tree)
    if cached is not None:
        return cached
    entries: list[tuple[Forest, Forest]] = [(single_tree_forest(tree), EMPTY_FOREST)]
    # Keeping the root: each child independently contributes either its full
    # tree to the cut forest or a kept sub-branch of its own.
    child_options = [ordered_subtrees(child) for child in tree.children]
    for combo in itertools.product(*child_options):
        cut: list[RootedTree] = []
        kept_children: list[RootedTree] = []
        for cut_forest, kept in combo:
            cut.extend(cut_forest.trees)
            kept_children.extend(kept.trees)
        entries.append((Forest(cut), single_tree_forest(RootedTree(kept_children))))
    result = tuple(entries)
    _subtree_cache[tree] = result
    return result


def edge_partitions(tree: RootedTree) -> tuple[tuple[Forest, RootedTree], ...]:
    """All (cut forest, skeleton) pairs, one per subset of the edge set.

    Removing the chosen edges leaves the cut forest; contracting each of its
    components and re-installing the chosen edges gives the skeleton, whose
    order equals the number of components.
    """
    cached = _partition_cache.get(tree)
    if cached is not None:
        return cached
    parents = tree.parent_array()
    n = tree.order
    edges = [(parents[v], v) for v in range(1, n)]
    entries: list[tuple[Forest, RootedTree]] = []
    for mask in range(1 << len(edges)):
        removed = {edges[i] for i in range(len(edges)) if mask >> i & 1}
        children_of: dict[int, list[int]] = {v: [] for v in range(n)}
        for edge in edges:
            if edge not in removed:
                children_of[edge[0]].append(edge[1])

        # Each component's root is the tree root or the lower end of a
        # removed edge; its component is everything reachable by kept edges.
        comp_roots = [0] + sorted(b for _, b in removed)
        comp_of = [-1] * n

        def mark(v: int, root: int) -> None:
            comp_of[v] = root
            for c in children_of[v]:
                mark(c, root)

        for root in comp_roots:
            mark(root, root)

        def build_component(v: int) -> RootedTree:
            return RootedTree(build_component(c) for c in children_of[v])

        forest = Forest(build_component(root) for root in comp_roots)

        # Skeleton: one node per component, edges re-installed from `removed`.
        comp_children: dict[int, list[int]] = {root: [] for root in comp_roots}
        for a, b in removed:
            comp_children[comp_of[a]].append(b)

        def build_skeleton(root: int) -> RootedTree:
            return RootedTree(build_skeleton(c) for c in comp_children[root])

        entries.append((forest, build_skeleton(0)))
    result = tuple(entries)
    _partition_cache[tree] = result
    return result


def butcher_product(tau: RootedTree, upsilon: RootedTree) -> RootedTree:
    """Graft ``upsilon`` onto the root of ``tau`` as an extra child.

    Not commutative: grafting a leaf onto the 2-chain gives the cherry while
    the reverse grafting gives the 3-chain.
    """
    return RootedTree(tau.children + (upsilon,))


def tree_values_complete(values: Mapping[RootedTree, object], max_order: int) -> bool:
    """True when ``values`` has an entry for every tree of order <= max_order."""
    return all(t in values for level in enumerate_trees(max_order) for t in level)
