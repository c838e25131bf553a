"""Exception hierarchy.  Every error raised by the library derives from
:class:`JordanError`."""


class JordanError(Exception):
    pass


class DescriptorMismatch(JordanError, ValueError):
    pass


class ParseError(JordanError, ValueError):
    pass


class NotSelfAdjoint(JordanError, ValueError):
    pass


class NotPositive(JordanError, ValueError):
    pass


class NotAProjection(JordanError, ValueError):
    pass


class UnsupportedFactor(JordanError, NotImplementedError):
    """Operation only defined on matrix/symmetric (envelope) summands."""


class TooFarApart(JordanError, ValueError):
    pass


class InversionIllConditioned(JordanError, ArithmeticError):
    pass


class MissingSpareRoom(JordanError, ValueError):
    pass


class AngleOutOfRange(JordanError, ValueError):
    pass


class ZeroProjection(JordanError, ValueError):
    pass


class NotOrthogonal(JordanError, ValueError):
    pass


class NotDominated(JordanError, ValueError):
    pass


class PreconditionViolation(JordanError, ValueError):
    def __init__(self, clause, detail=""):
        self.clause = clause
        super().__init__(f"{clause}: {detail}" if detail else clause)


class TraceUnreachable(JordanError, ValueError):
    pass


class DimensionTooSmall(JordanError, ValueError):
    pass


class UnknownSuite(JordanError, KeyError):
    pass
