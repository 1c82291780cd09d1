"""Exception hierarchy shared by all mcmforge modules."""


class MCMForgeError(Exception):
    """Base class for every error raised by mcmforge."""


class LengthMismatch(MCMForgeError, ValueError):
    pass


class NotPrime(MCMForgeError, ValueError):
    pass


class UnknownVariable(MCMForgeError, ValueError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class MalformedExpression(MCMForgeError, ValueError):
    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at column {position + 1})")
        self.position = position


class ParameterRange(MCMForgeError, ValueError):
    pass


class NotHomogeneous(MCMForgeError, ValueError):
    pass


class UnitIdeal(MCMForgeError, ValueError):
    pass


class ZeroModule(MCMForgeError, ValueError):
    pass


class CapExceeded(MCMForgeError, RuntimeError):
    pass


class BoundExceeded(MCMForgeError, ValueError):
    pass


class NotSplit(MCMForgeError):
    """The ring fails Fedder's criterion, so Frobenius does not split."""


class SolverDegreeBoundExceeded(MCMForgeError, RuntimeError):
    pass


class NotRegularSequence(MCMForgeError):
    pass


class NotFound(MCMForgeError):
    """A bounded search was exhausted without a witness."""


class NotFoundWithinBound(NotFound):
    pass


class PreconditionError(MCMForgeError, ValueError):
    pass


class HypothesisFailure(MCMForgeError):
    def __init__(self, failed, report=None):
        super().__init__("hypothesis check failed: " + ", ".join(failed))
        self.failed = list(failed)
        self.report = report


class GCMFailure(HypothesisFailure):
    pass


class InvariantViolation(MCMForgeError, AssertionError):
    """A result that must hold by a theorem did not; names unchecked hypotheses."""

    def __init__(self, message, unchecked=()):
        super().__init__(message)
        self.unchecked = list(unchecked)


class Mismatch(MCMForgeError, AssertionError):
    def __init__(self, detail, degree=None):
        super().__init__(detail)
        self.detail = detail
        self.degree = degree


class ParseError(MCMForgeError, ValueError):
    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column
