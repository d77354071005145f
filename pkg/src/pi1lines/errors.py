class Pi1Error(Exception):
    """Base class for every error raised by this package."""


class ParseError(Pi1Error, ValueError):
    pass


class DegenerateLine(Pi1Error, ValueError):
    pass


class DuplicateLine(Pi1Error, ValueError):
    pass


class InternalError(Pi1Error, RuntimeError):
    """An invariant that should hold by construction was violated."""


class GeneratorOutOfRange(Pi1Error, ValueError):
    pass


class StrandMismatch(Pi1Error, ValueError):
    pass


class PrecondParallel(Pi1Error, ValueError):
    """The operation needs an arrangement in which every two lines meet."""


class SimplificationFailure(Pi1Error, RuntimeError):
    pass


class SelfReference(Pi1Error, ValueError):
    pass


class MissingProjectiveRelation(Pi1Error, ValueError):
    pass


class NotCentral(Pi1Error, ValueError):
    pass


class UnbalancedRelator(Pi1Error, ValueError):
    def __init__(self, relator, generator):
        self.relator = relator
        self.generator = generator
        super().__init__(f"relator {list(relator)} has nonzero exponent sum in x{generator}")


class NotTransversal(Pi1Error, ValueError):
    def __init__(self, message, point=None):
        self.point = point
        super().__init__(message)
