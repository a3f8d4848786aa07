"""Radical trees: preorder parsing, serialization, and structural measures.

A character decomposes into an ordered tree whose leaves are radicals and
whose internal nodes are structure symbols with a fixed child count.  The
preorder traversal of the tree is the flat sequence used in label files;
because every structure has a known arity, parsing the sequence back into
a tree is unambiguous.

Tokens are compared by exact string equality.  No Unicode normalization is
applied; inputs are expected to be NFC-normalized upfront.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DuplicateEntry, MalformedLine, TrailingTokens, Underflow

# The twelve ideographic description characters (U+2FF0..U+2FFB).
# U+2FF2 and U+2FF3 combine three parts, the others two.
_IDC_ARITIES = {
    "⿰": 2,  # ⿰ left to right
    "⿱": 2,  # ⿱ above to below
    "⿲": 3,  # ⿲ left to middle to right
    "⿳": 3,  # ⿳ above to middle to below
    "⿴": 2,  # ⿴ full surround
    "⿵": 2,  # ⿵ surround from above
    "⿶": 2,  # ⿶ surround from below
    "⿷": 2,  # ⿷ surround from left
    "⿸": 2,  # ⿸ surround from upper left
    "⿹": 2,  # ⿹ surround from upper right
    "⿺": 2,  # ⿺ surround from lower left
    "⿻": 2,  # ⿻ overlaid
}


class ArityTable:
    """Maps structure tokens to their child counts.

    Membership decides a token's kind everywhere in the toolkit: a token in
    the table is a structure (internal node), anything else is a radical
    (leaf).  Arities must be integers >= 2.
    """

    def __init__(self, entries: dict[str, int] | None = None):
        entries = dict(entries) if entries is not None else dict(_IDC_ARITIES)
        for token, arity in entries.items():
            if not token:
                raise ValueError("empty structure token")
            if not isinstance(arity, int) or arity < 2:
                raise ValueError(f"arity of {token!r} must be an integer >= 2, got {arity!r}")
        self._entries = entries

    @classmethod
    def default(cls) -> ArityTable:
        """The twelve ideographic description characters."""
        return cls()

    @classmethod
    def from_file(cls, path) -> ArityTable:
        """Load ``<token><TAB><arity>`` lines; ``#`` lines and blanks are skipped."""
        entries: dict[str, int] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.rstrip("\n")
                if not line.strip() or line.startswith("#"):
                    continue
                fields = line.split("\t")
                if len(fields) != 2:
                    raise MalformedLine(f"{path}:{lineno}: expected <token><TAB><arity>")
                token, arity_text = fields
                try:
                    arity = int(arity_text)
                except ValueError:
                    raise MalformedLine(
                        f"{path}:{lineno}: arity {arity_text!r} is not an integer"
                    ) from None
                if arity < 2:
                    raise MalformedLine(f"{path}:{lineno}: arity must be >= 2, got {arity}")
                if token in entries:
                    raise DuplicateEntry(f"{path}:{lineno}: duplicate structure token {token!r}")
                entries[token] = arity
        return cls(entries)

    def is_structure(self, token: str) -> bool:
        return token in self._entries

    def arity(self, token: str) -> int:
        """Child count of a structure token; KeyError for radicals."""
        return self._entries[token]

    def items(self):
        return self._entries.items()

    def __contains__(self, token: str) -> bool:
        return token in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArityTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return f"ArityTable({len(self._entries)} structures)"


@dataclass(frozen=True)
class RadicalTree:
    """One node of an ordered radical tree.

    Leaves carry radical symbols and have no children; internal nodes carry
    structure symbols and exactly as many children as the structure's arity.
    Instances are immutable and safe to share.
    """

    symbol: str
    children: tuple[RadicalTree, ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children


def leaf(symbol: str) -> RadicalTree:
    """Single-node tree of one radical."""
    return RadicalTree(symbol)


def parse_sequence(tokens: Sequence[str], arities: ArityTable) -> RadicalTree:
    """Rebuild the unique tree whose preorder traversal equals ``tokens``.

    Raises Underflow if the sequence ends while a structure still expects
    children, TrailingTokens if tokens remain after the root subtree closed.
    """
    pos = 0

    def build() -> RadicalTree:
        nonlocal pos
        if pos >= len(tokens):
            raise Underflow(
                f"sequence ended at token {pos} while a subtree was still incomplete"
            )
        token = tokens[pos]
        pos += 1
        if not token:
            raise MalformedLine(f"empty token at position {pos - 1}")
        if arities.is_structure(token):
            n = arities.arity(token)
            return RadicalTree(token, tuple(build() for _ in range(n)))
        return RadicalTree(token)

    root = build()
    if pos != len(tokens):
        raise TrailingTokens(
            f"{len(tokens) - pos} token(s) left over at position {pos} after the tree closed"
        )
    return root


def iter_preorder(tree: RadicalTree) -> Iterator[RadicalTree]:
    """Yield nodes in preorder (node first, then children left to right)."""
    stack = [tree]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def to_preorder(tree: RadicalTree) -> list[str]:
    """Flatten a tree back into its preorder token sequence."""
    return [node.symbol for node in iter_preorder(tree)]


def rssl(tree: RadicalTree) -> int:
    """Radical structure sequence length: total node count of the tree."""
    return sum(1 for _ in iter_preorder(tree))


def validate_tree(tree: RadicalTree, arities: ArityTable) -> None:
    """Check that every node's child count matches its symbol's kind.

    Raises ValueError on the first violation.
    """
    for node in iter_preorder(tree):
        if not node.symbol:
            raise ValueError("empty symbol")
        if arities.is_structure(node.symbol):
            want = arities.arity(node.symbol)
            if len(node.children) != want:
                raise ValueError(
                    f"structure {node.symbol!r} has {len(node.children)} children, expected {want}"
                )
        elif node.children:
            raise ValueError(f"radical {node.symbol!r} must be a leaf")
