"""Exception types raised across the package."""


class SlideCxError(Exception):
    """Base class for all errors raised by slidecx."""


class ParseError(SlideCxError, ValueError):
    """Text input could not be parsed."""


class NotABijection(SlideCxError, ValueError):
    """A one-line permutation has repeated or out-of-range images."""


class RankMismatch(SlideCxError, ValueError):
    """Two values of different rank were combined."""


class InternalError(SlideCxError, ArithmeticError):
    """An exact computation produced an impossible result."""


class NotQuasiYamanouchi(SlideCxError, ValueError):
    pass


class NotReduced(SlideCxError, ValueError):
    pass


class UnclassifiableSlideTarget(SlideCxError, ValueError):
    """Slide complex whose target word has equal consecutive letters."""


class NonUniqueGreedy(SlideCxError, RuntimeError):
    """Flip graph without a unique source or sink."""
