"""Exception types shared across the toolkit.

Everything raised for a domain reason derives from RadtreeError so callers
(and the CLI) can separate domain failures from I/O failures.
"""


class RadtreeError(Exception):
    """Base class for all domain errors raised by this package."""


class Underflow(RadtreeError):
    """Preorder sequence ended while a structure node still expected children."""


class TrailingTokens(RadtreeError):
    """Tokens remained after the root subtree was already complete."""


class MalformedLine(RadtreeError):
    """A data-file line does not have the expected field layout."""


class DuplicateEntry(RadtreeError):
    """The same key appeared twice in a table or corpus file."""


class TableParseError(RadtreeError):
    """A decomposition entry failed to parse as a preorder sequence."""


class MissingId(RadtreeError):
    """A ground-truth sample id has no corresponding prediction (strict mode)."""


class EmptyCorpus(RadtreeError):
    """No samples to evaluate or count."""


class EmptyCharset(RadtreeError):
    """No characters to build a distribution over."""


class SequenceTooLong(RadtreeError):
    """A radical sequence does not fit the requested padded length."""


class ShapeMismatch(RadtreeError):
    """Probability rows, targets, and weights disagree in shape."""


class InvalidDistribution(RadtreeError):
    """A probability row is not a distribution."""


class UnknownToken(RadtreeError):
    """A token has no index in the vocabulary."""
