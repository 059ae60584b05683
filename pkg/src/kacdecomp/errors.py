"""Exception hierarchy shared by all kacdecomp modules."""


class KacDecompError(Exception):
    """Base class for all domain errors raised by this package."""


class OverlappingSymbols(KacDecompError):
    """Two symbol classes (crosses, '>' core, '<' core) claim the same position."""


class ParseError(KacDecompError):
    """Malformed serialized diagram or weight tuple.

    Carries the character offset of the first offending character.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BadInterval(KacDecompError):
    """Interval endpoints supplied in the wrong order (needs b < a)."""


class NotACross(KacDecompError):
    """A move start was requested at a position that does not carry a cross."""


class NotACircle(KacDecompError):
    """A move end was requested at a position that is not empty."""


class AtypicalityTooSmall(KacDecompError):
    """An i-th-largest-cross operator was applied to a term with fewer than i crosses."""


class NotCoreFree(KacDecompError):
    """Operation is only defined for diagrams without '>' or '<' symbols."""


class CoreMismatch(KacDecompError):
    """The two diagrams do not lie in the same block (core or cross count differ)."""


class NotIncreasing(KacDecompError):
    """Path edge starts are not strictly increasing."""


class NotIrregular(KacDecompError):
    """The path involution is only defined on irregular paths."""


class LengthMismatch(KacDecompError):
    """A cap-toggle bit vector does not have one bit per cross."""


class NotDominant(KacDecompError):
    """Shifted weight entries violate the strict dominance orderings."""


class EmptyWeight(KacDecompError):
    """The empty diagram corresponds to gl(0,0) and has no weight tuple."""


class NotClosed(KacDecompError):
    """A multiplicity matrix column has factors outside the matrix index."""


class ClosureTooLarge(KacDecompError):
    """Closure under decomposition exceeded the configured size guard."""


class InvariantViolation(KacDecompError):
    """A structural fact the algorithms rely on failed at runtime.

    These checks encode proof obligations (uniqueness of rewritten paths,
    no-duplicate listing in the recursive decomposition, ...).  They should be
    unreachable; raising instead of silently proceeding makes any gap loud.
    """
