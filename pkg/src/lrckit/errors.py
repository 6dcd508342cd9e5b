"""Exception types shared across the package."""


class LrcError(Exception):
    """Base class for errors raised by lrckit."""


class BudgetExceededError(LrcError):
    """A distance computation ran out of its work budget on every strategy."""


class DegenerateCodeError(LrcError):
    """The code has dimension zero, so distance-type quantities are undefined."""


class InfeasibleParametersError(LrcError, ValueError):
    """A closed-form formula produced a value outside its meaningful range."""


class LocalityError(LrcError):
    """A repair group failed the dimension or distance requirement."""

    def __init__(self, block, reason, message):
        super().__init__(message)
        self.block = block
        self.reason = reason  # "dimension" or "distance"


class ConditionNotSatisfiedError(LrcError):
    """A line family violates the pairwise intersection budget."""


class SearchLimitExceededError(LrcError):
    """A combinatorial search hit its node limit before completing."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
