"""Exception hierarchy. CLI exit codes are attached to the classes."""


class PlumbingError(Exception):
    exit_code = 1


class GraphFormatError(PlumbingError, ValueError):
    """Malformed graph or Seifert description."""

    exit_code = 5


class MalformedGraph(GraphFormatError):
    pass


class DisconnectedGraph(GraphFormatError):
    pass


class SelfLoop(GraphFormatError):
    pass


class DuplicateEdge(GraphFormatError):
    pass


class InvalidSeifertPair(GraphFormatError):
    pass


class SingularMatrix(PlumbingError, ArithmeticError):
    exit_code = 6


class NotNegativeDefinite(PlumbingError):
    exit_code = 6


class NotRational(PlumbingError):
    exit_code = 2


class EnumerationCapExceeded(PlumbingError):
    exit_code = 3


class NotInLprime(PlumbingError, ValueError):
    exit_code = 4
