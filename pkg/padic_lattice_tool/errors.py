"""Exceptions raised by the p-adic Lattice Tool.

Every error derives from ``PadicLatticeError`` so the command line tool can
map a failure category onto its exit code.

Authors
-------
    - Mees Fix
"""


class PadicLatticeError(Exception):
    """Base class for all errors raised by padic_lattice_tool."""


class InvalidParameterError(PadicLatticeError, ValueError):
    """Raised for a non-prime p, a dimension or length mismatch or a bad range."""


class InvalidFrameError(InvalidParameterError):
    """Raised when the frame of a normed space is not invertible."""


class InstanceParseError(InvalidParameterError):
    """Raised when an instance file can not be parsed.

    Parameters
    ----------
    message : str
        Description of the problem

    line : int
        1-based line of the offending token (0 when unknown)

    column : int
        1-based column of the offending token (0 when unknown)
    """

    def __init__(self, message, line=0, column=0):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class SingularMatrixError(PadicLatticeError):
    """Raised when an exact solve meets a singular matrix."""


class RankError(PadicLatticeError):
    """Raised when a basis is dependent or a full rank lattice is required."""


class PreconditionError(PadicLatticeError):
    """Raised when the inputs of an operation violate its preconditions."""


class InvalidOperationError(PadicLatticeError):
    """Raised when an elementary operation violates its constraint.

    Parameters
    ----------
    op_index : int
        Position of the offending operation in the transcript

    op : padic_lattice_tool.lattice.elementaryOp
        The offending operation

    reason : str
        Which constraint failed
    """

    def __init__(self, op_index, op, reason):
        self.op_index = op_index
        self.op = op
        self.reason = reason
        super().__init__(f"OPERATION {op_index} ({op}) IS NOT VALID: {reason}")


class OracleBudgetError(PadicLatticeError):
    """Raised when a brute force oracle exceeds its enumeration budget.

    Parameters
    ----------
    budget : int
        Maximum number of coefficient tuples allowed

    evaluated : int
        Number of coefficient tuples evaluated when the budget ran out

    bound : padic_lattice_tool.norms.normValue or None
        Best value found so far, if any
    """

    def __init__(self, budget, evaluated, bound=None):
        self.budget = budget
        self.evaluated = evaluated
        self.bound = bound
        super().__init__(
            f"ORACLE BUDGET OF {budget} TUPLES EXCEEDED AFTER {evaluated} TUPLES "
            f"(CURRENT BOUND: {bound})"
        )
