from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

import networkx as nx

from counting.counting import catalan, factorial
from errors.errors import Disconnected, NotAPermutation, SizeCapExceeded
from graph.connectivity import is_connected
from graph.graph import Graph, make_graph

LABELED_TREE_CAP = 5


def is_tree(G: Graph) -> bool:
    """Connected with exactly n - 1 edges."""
    return G.n >= 1 and nx.is_tree(G.multigraph)


def spanning_tree(G: Graph) -> Graph:
    """BFS spanning tree rooted at 0, neighbors in index order."""
    if not is_connected(G):
        raise Disconnected("a disconnected graph has no spanning tree")
    if G.n == 0:
        return make_graph(0, [])
    return make_graph(G.n, nx.bfs_edges(G.multigraph, 0, sort_neighbors=sorted))


def cayley_count(n: int) -> int:
    """Labeled trees on n vertices: n^(n-2)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return 1 if n == 1 else n ** (n - 2)


def enumerate_labeled_trees(n: int) -> list[Graph]:
    """Every labeled tree on 0..n-1, found by filtering (n-1)-edge subsets of K_n."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n > LABELED_TREE_CAP:
        raise SizeCapExceeded(f"labeled tree enumeration is capped at n = {LABELED_TREE_CAP}")
    all_edges = list(combinations(range(n), 2))
    candidates = (make_graph(n, chosen) for chosen in combinations(all_edges, n - 1))
    return [tree for tree in candidates if is_tree(tree)]


def binary_tree_count(n_leaves: int) -> int:
    """Binary trees with n leaves: C_{n-1}."""
    if n_leaves < 1:
        raise ValueError(f"a binary tree has at least one leaf, got {n_leaves}")
    return catalan(n_leaves - 1)


def at_most_binary_count(n_vertices: int) -> int:
    return catalan(n_vertices)


def tournament_count(players: int) -> int:
    """Single-elimination brackets: tree shapes times player orderings."""
    if players < 1:
        raise ValueError(f"a tournament needs at least one player, got {players}")
    return catalan(players - 1) * factorial(players)


@dataclass(frozen=True)
class BinaryTree:
    label: int
    left: Optional["BinaryTree"] = None
    right: Optional["BinaryTree"] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.right is None

    @property
    def is_strict(self) -> bool:
        """Every node has zero or two children."""
        if (self.left is None) != (self.right is None):
            return False
        return all(child.is_strict for child in (self.left, self.right) if child is not None)

    @property
    def size(self) -> int:
        return 1 + sum(child.size for child in (self.left, self.right) if child is not None)

    def inorder(self) -> list[int]:
        out = self.left.inorder() if self.left else []
        out.append(self.label)
        if self.right:
            out.extend(self.right.inorder())
        return out

    def is_increasing(self) -> bool:
        for child in (self.left, self.right):
            if child is not None and (child.label <= self.label or not child.is_increasing()):
                return False
        return True


def _check_permutation(perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise NotAPermutation(f"{list(perm)} is not a permutation of 1..{len(perm)}")


def increasing_tree_from_permutation(perm: Sequence[int]) -> Optional[BinaryTree]:
    """Minimum at the root, left subtree from the entries before it, right from those after."""
    _check_permutation(perm)

    def build(segment: Sequence[int]) -> Optional[BinaryTree]:
        if not segment:
            return None
        i = min(range(len(segment)), key=segment.__getitem__)
        return BinaryTree(segment[i], build(segment[:i]), build(segment[i + 1 :]))

    return build(list(perm))


def permutation_from_increasing_tree(tree: Optional[BinaryTree]) -> list[int]:
    if tree is None:
        return []
    if not tree.is_increasing():
        raise ValueError("labels must increase down every path")
    perm = tree.inorder()
    _check_permutation(perm)
    return perm


def bst_insert(tree: Optional[BinaryTree], key: int) -> BinaryTree:
    """A new search tree with key added; existing keys are left unchanged."""
    if tree is None:
        return BinaryTree(key)
    if key < tree.label:
        return BinaryTree(tree.label, bst_insert(tree.left, key), tree.right)
    if key > tree.label:
        return BinaryTree(tree.label, tree.left, bst_insert(tree.right, key))
    return tree


def bst_from_keys(keys: Iterable[int]) -> Optional[BinaryTree]:
    tree = None
    for key in keys:
        tree = bst_insert(tree, key)
    return tree


def is_search_tree(tree: Optional[BinaryTree], low=None, high=None) -> bool:
    if tree is None:
        return True
    if (low is not None and tree.label <= low) or (high is not None and tree.label >= high):
        return False
    return is_search_tree(tree.left, low, tree.label) and is_search_tree(tree.right, tree.label, high)
