"""Exception hierarchy.

``InputError`` marks malformed input (bad shapes, unparsable files).
``CheckFailed`` marks well-formed input that fails a mathematical condition;
it carries the :class:`~invder.report.Check` describing what went wrong.
"""


class InvDerError(Exception):
    pass


class InputError(InvDerError, ValueError):
    pass


class ShapeError(InputError):
    pass


class SingularMatrixError(InvDerError, ValueError):
    pass


class ContainmentError(InvDerError, ValueError):
    pass


class CheckFailed(InvDerError):
    def __init__(self, message, check=None):
        super().__init__(message)
        self.check = check


class InternalError(InvDerError, AssertionError):
    """An identity that must hold by construction did not."""
