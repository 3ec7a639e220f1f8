"""Exception hierarchy shared by every module of the package."""


class CycleCountError(Exception):
    """Base class for all errors raised by tannercycles."""


class GraphInputError(CycleCountError, ValueError):
    """Invalid graph construction or file contents."""


class DuplicateEdge(GraphInputError):
    pass


class IndexOutOfRange(GraphInputError):
    pass


class MalformedHeader(GraphInputError):
    pass


class MalformedLine(GraphInputError):
    pass


class DegreeMismatch(GraphInputError):
    pass


class InconsistentAdjacency(GraphInputError):
    pass


class InconsistentParameters(CycleCountError, ValueError):
    """Degree/size parameters that cannot describe a bi-regular graph."""


class UnsupportedLength(CycleCountError, ValueError):
    pass


class GirthTooSmall(CycleCountError, ValueError):
    pass


class ResourceLimit(CycleCountError):
    pass


class TooLarge(ResourceLimit):
    pass


class BudgetExceeded(ResourceLimit):
    pass


class OverflowDetected(ResourceLimit, ArithmeticError):
    pass


class NonDivisibleTrace(CycleCountError, ArithmeticError):
    """tr - Omega - Psi was not a multiple of 2i: a formula precondition failed."""


class CapabilityRefused(CycleCountError):
    """A requested cycle length cannot be counted from spectrum and degrees."""

    def __init__(self, length, verdict, message=None):
        self.length = length
        self.verdict = verdict
        super().__init__(message or f"length {length}: {verdict}")


class InfeasibleSpec(CycleCountError, ValueError):
    pass


class RetriesExhausted(CycleCountError):
    pass
