"""Node weighting and the tree-similarity score between radical trees.

Weighting rule: a tree carries a total weight of 1.  A leaf absorbs its
whole budget; an internal node with n children keeps budget/(n+1) for
itself and hands budget/(n+1) to each child subtree.  Upper nodes therefore
weigh more than lower ones, and a node's weight depends only on the arities
along its root path, not on how deep sibling subtrees are.

Similarity between two trees is the sum, over nodes that match, of the
matching nodes' weights.  A node matches when all of its ancestors match,
the other tree has a node at the same child-index path, and the two symbols
are equal; a mismatch prunes the whole subtree below it.  Matched nodes
have equal symbols, hence equal arities, hence equal weights in either
tree, so the score is the same no matter which tree supplies the weights.

All arithmetic is exact (fractions.Fraction); call float() on results for
a numeric score.
"""

from __future__ import annotations

from fractions import Fraction

from .tree import RadicalTree


def tree_weights(tree: RadicalTree) -> list[Fraction]:
    """Per-node weights in preorder order; always sums to exactly 1."""
    out: list[Fraction] = []

    def assign(node: RadicalTree, budget: Fraction) -> None:
        if node.is_leaf:
            out.append(budget)
            return
        share = budget / (len(node.children) + 1)
        out.append(share)
        for child in node.children:
            assign(child, share)

    assign(tree, Fraction(1))
    return out


def tree_sim(a: RadicalTree, b: RadicalTree) -> Fraction:
    """Similarity in [0, 1] between two trees built over the same arity table."""

    def matched(x: RadicalTree, y: RadicalTree, budget: Fraction) -> Fraction:
        if x.symbol != y.symbol:
            return Fraction(0)
        if x.is_leaf:
            return budget
        share = budget / (len(x.children) + 1)
        total = share
        for cx, cy in zip(x.children, y.children):
            total += matched(cx, cy, share)
        return total

    return matched(a, b, Fraction(1))


def char_sim(c1: str, c2: str, table) -> Fraction:
    """Similarity of two characters via their decomposition trees.

    Characters absent from the table compare as single-leaf trees of
    themselves, so the result is defined for any pair.
    """
    return tree_sim(table.lookup(c1), table.lookup(c2))
