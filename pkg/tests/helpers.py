"""Shared test utilities: random tree generation and independent oracles.

The oracles here deliberately take different routes than the library:
similarity is scored by enumerating child-index paths and prefix-checking
ancestors, with node weights derived from the closed-form product of
1/(arity+1) along the root path; edit distance is the textbook full-matrix
DP in plain Python.
"""

from __future__ import annotations

import random
from fractions import Fraction

from radtree.tree import ArityTable, RadicalTree

DEFAULT_ARITIES = ArityTable.default()
STRUCTURES = sorted(token for token, _ in DEFAULT_ARITIES.items())
STRUCTURES_BY_ARITY = {
    2: [t for t in STRUCTURES if DEFAULT_ARITIES.arity(t) == 2],
    3: [t for t in STRUCTURES if DEFAULT_ARITIES.arity(t) == 3],
}
LEAF_POOL = list("ABCDEFGHIJ")


def node(symbol: str, *children: RadicalTree) -> RadicalTree:
    return RadicalTree(symbol, tuple(children))


def random_tree(rng: random.Random, max_depth: int = 6,
                structure_prob: float = 0.6,
                leaf_pool: list[str] = LEAF_POOL) -> RadicalTree:
    """Random valid tree over the default structure set (arities 2 and 3)."""
    if max_depth == 0 or rng.random() > structure_prob:
        return RadicalTree(rng.choice(leaf_pool))
    symbol = rng.choice(STRUCTURES)
    n = DEFAULT_ARITIES.arity(symbol)
    return RadicalTree(
        symbol,
        tuple(random_tree(rng, max_depth - 1, structure_prob, leaf_pool) for _ in range(n)),
    )


def all_paths(tree: RadicalTree) -> list[tuple[int, ...]]:
    """Child-index paths of every node, preorder."""
    out: list[tuple[int, ...]] = []

    def walk(t: RadicalTree, path: tuple[int, ...]) -> None:
        out.append(path)
        for i, child in enumerate(t.children):
            walk(child, path + (i,))

    walk(tree, ())
    return out


def subtree_at(tree: RadicalTree, path: tuple[int, ...]) -> RadicalTree:
    for i in path:
        tree = tree.children[i]
    return tree


def replace_at(tree: RadicalTree, path: tuple[int, ...],
               subtree: RadicalTree) -> RadicalTree:
    if not path:
        return subtree
    children = list(tree.children)
    children[path[0]] = replace_at(children[path[0]], path[1:], subtree)
    return RadicalTree(tree.symbol, tuple(children))


def mutate(rng: random.Random, tree: RadicalTree) -> RadicalTree:
    """Relabel one random node, keeping the tree valid (arities preserved)."""
    path = rng.choice(all_paths(tree))
    target = subtree_at(tree, path)
    if target.is_leaf:
        choices = [s for s in LEAF_POOL if s != target.symbol]
    else:
        same_arity = STRUCTURES_BY_ARITY[len(target.children)]
        choices = [s for s in same_arity if s != target.symbol]
    replacement = RadicalTree(rng.choice(choices), target.children)
    return replace_at(tree, path, replacement)


def sim_oracle(a: RadicalTree, b: RadicalTree) -> Fraction:
    """Path-enumeration reference for the similarity score.

    A path matches when every prefix (itself included) exists in both trees
    with equal symbols; the score sums closed-form weights of matched paths.
    """

    def index(tree: RadicalTree) -> dict[tuple[int, ...], tuple[str, int]]:
        out = {}
        for path in all_paths(tree):
            t = subtree_at(tree, path)
            out[path] = (t.symbol, len(t.children))
        return out

    ia, ib = index(a), index(b)

    def weight(path: tuple[int, ...]) -> Fraction:
        budget = Fraction(1)
        for k in range(len(path)):
            _, n = ia[path[:k]]
            budget /= n + 1
        _, n = ia[path]
        return budget if n == 0 else budget / (n + 1)

    def matched(path: tuple[int, ...]) -> bool:
        for k in range(len(path) + 1):
            prefix = path[:k]
            if prefix not in ib or ia[prefix][0] != ib[prefix][0]:
                return False
        return True

    return sum((weight(p) for p in ia if p in ib and matched(p)), Fraction(0))


def brute_levenshtein(a: str, b: str) -> int:
    """Textbook full-matrix DP, independent of the array kernels."""
    n, m = len(a), len(b)
    d = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        d[i][0] = i
    for j in range(m + 1):
        d[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            d[i][j] = min(d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost)
    return d[n][m]


def random_text(rng: random.Random, alphabet: str, max_len: int,
                min_len: int = 0) -> str:
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))
