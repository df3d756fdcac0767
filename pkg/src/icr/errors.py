"""Exception hierarchy shared by all icr modules."""


class IcrError(Exception):
    """Base class for all errors raised by this package."""


class NonSquareError(IcrError):
    pass


class NonPositiveEntryError(IcrError):
    def __init__(self, i, j, value):
        super().__init__(f"entry ({i}, {j}) = {value!r} is not a positive real")
        self.i, self.j, self.value = i, j, value


class ReciprocityViolationError(IcrError):
    def __init__(self, i, j):
        super().__init__(f"entries ({i}, {j}) and ({j}, {i}) are not reciprocal")
        self.i, self.j = i, j


class BadDiagonalError(IcrError):
    def __init__(self, i):
        super().__init__(f"diagonal entry ({i}, {i}) must equal 1")
        self.i = i


class MissingDiagonalError(IcrError):
    def __init__(self, i):
        super().__init__(f"diagonal entry ({i}, {i}) may not be missing")
        self.i = i


class AsymmetricMissingError(IcrError):
    def __init__(self, i, j):
        super().__init__(
            f"exactly one of ({i}, {j}) and ({j}, {i}) is missing")
        self.i, self.j = i, j


class InvalidDimensionsError(IcrError):
    pass


class NoConvergenceError(IcrError):
    def __init__(self, iterations, residual):
        super().__init__(
            f"eigen solver did not converge after {iterations} iterations "
            f"(residual {residual:.3e})")
        self.iterations = iterations
        self.residual = residual


class DisconnectedGraphError(IcrError):
    pass


class NotSpanningTreeError(IcrError):
    pass


class EntryMismatchError(IcrError):
    def __init__(self, i, j):
        super().__init__(
            f"candidate disagrees with the known entry at ({i}, {j})")
        self.i, self.j = i, j


class InfeasibleMError(IcrError):
    pass


class OutOfRangeError(IcrError):
    pass


class InsufficientSamplesError(IcrError):
    pass


class MethodMismatchError(IcrError):
    pass


class ParseError(IcrError):
    def __init__(self, line, col, token, reason=""):
        msg = f"line {line}, column {col}: bad token {token!r}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)
        self.line, self.col, self.token = line, col, token
