"""Exception hierarchy.

Two families: :class:`ValidationError` for inputs that violate a stated
invariant or precondition, and :class:`NumericalError` for computations
that could not be completed (non-convergence, rank failures).  The CLI maps
them to exit codes 1 and 2.
"""


class FrameDualsError(Exception):
    pass


class ValidationError(FrameDualsError, ValueError):
    pass


class NumericalError(FrameDualsError, ArithmeticError):
    pass


class NotHermitian(ValidationError):
    pass


class NotPositiveDefinite(ValidationError):
    pass


class NotUnitary(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class NotAFrame(ValidationError):
    pass


class NotADualPair(ValidationError):
    pass


class DependentInput(ValidationError):
    pass


class InvalidProbabilities(ValidationError):
    pass


class InvalidWeights(ValidationError):
    pass


class WeightMismatch(ValidationError):
    pass


class WrongWeightMode(ValidationError):
    pass


class TooManySubsets(ValidationError):
    pass


class HypothesesFail(ValidationError):
    pass


class PrerequisiteNotMet(ValidationError):
    pass


class UnknownId(ValidationError, KeyError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class NoConvergence(NumericalError):
    pass


class RankFail(NumericalError):
    pass


class MajorizationFail(NumericalError):
    pass
