"""Exception hierarchy shared by all locgame modules."""


class LocGameError(Exception):
    """Base class for every error raised by locgame."""


class DesignError(LocGameError):
    pass


class EmptyDesign(DesignError):
    pass


class NotUniform(DesignError):
    pass


class PairCountViolation(DesignError):
    def __init__(self, pair, count, expected):
        self.pair = tuple(pair)
        self.count = count
        self.expected = expected
        super().__init__(
            f"pair {self.pair} lies in {count} blocks, expected {expected}"
        )


class DisconnectedGraph(DesignError):
    pass


class UnsupportedOrder(DesignError):
    pass


class InvalidOrder(DesignError):
    pass


class KTooLarge(DesignError):
    pass


class NotAPlane(DesignError):
    pass


class NotResolved(DesignError):
    pass


class NotApplicable(LocGameError):
    """A strategy or bound was requested for a design outside its hypotheses."""


class NotDelayedResolving(LocGameError):
    pass


class BudgetExhausted(LocGameError):
    pass


class InvariantViolation(LocGameError):
    """A robber adversary found no cell satisfying its survival invariant."""
