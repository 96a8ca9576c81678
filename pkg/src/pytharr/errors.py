"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`PytharrError`.
The command line maps :class:`ParseError` to exit status 2 and every other
:class:`PytharrError` to exit status 1.
"""


class PytharrError(Exception):
    """Base class for all domain errors."""


class ParseError(PytharrError):
    """Malformed input text: a bad rational, bad JSON, or a missing field."""


class NonSquare(PytharrError):
    pass


class DimensionMismatch(PytharrError):
    pass


class LoopEdge(PytharrError):
    """An edge whose tail equals its head."""


class DuplicateEdge(PytharrError):
    pass


class UnknownVertex(PytharrError):
    pass


class UnknownEdge(PytharrError):
    pass


class InvalidWalk(PytharrError):
    pass


class UnbalancedInput(PytharrError):
    pass


class NotACircle(PytharrError):
    pass


class DuplicatePoint(PytharrError):
    pass


class MissingPoint(PytharrError):
    pass


class DegenerateEdge(PytharrError):
    """Both ends of an edge sit at the same point, so it has no hyperplane."""


class NotABasis(PytharrError):
    pass


class ElementInBasis(PytharrError):
    pass


class NotACircuit(PytharrError):
    pass


class NotLinearClass(PytharrError):
    pass


class InvalidIdeal(PytharrError):
    pass


class UnknownLabel(PytharrError):
    pass


class NotCentral(PytharrError):
    pass


class NotGeneric(PytharrError):
    pass


class UnrealizableBias(PytharrError):
    pass


class NotParallel(PytharrError):
    pass


class ImpossibleCorrespondence(PytharrError):
    pass


class UnsupportedDimension(PytharrError):
    pass
