"""Exception types shared across the package."""


class BidiscError(Exception):
    """Base class for all errors raised by this package."""


class NonzeroRemainder(BidiscError, ArithmeticError):
    """Polynomial division that was required to be exact left a remainder."""

    def __init__(self, remainder):
        super().__init__(f"division is not exact; remainder {remainder!r}")
        self.remainder = remainder


class InexactDivision(BidiscError, ArithmeticError):
    """Quotient of two elements of Q[1/pi] is not itself in Q[1/pi]."""


class SlowConvergence(BidiscError):
    """A series needed more terms than the hard cap allows."""


class NoConvergence(BidiscError):
    """An iterative numerical procedure failed to reach its tolerance."""


class ExactBorderline(BidiscError):
    """The numerically resolved dual norm is too close to 1 to decide."""

    def __init__(self, classification):
        super().__init__(
            f"dual norm {classification.dual_norm!r} is within tolerance of 1"
        )
        self.classification = classification


class NotFound(BidiscError):
    """A search over a parameter range found no witness."""
