"""Exception hierarchy shared by every module of the package."""


class TFColorError(Exception):
    """Base class for all package errors."""


class EmbeddingError(TFColorError, ValueError):
    """A rotation system fails validation or a surgery precondition."""


class Asymmetric(EmbeddingError):
    def __init__(self, u, v):
        super().__init__(f"vertex {v} is in the rotation of {u} but not vice versa")
        self.u, self.v = u, v


class Loop(EmbeddingError):
    pass


class MultiEdge(EmbeddingError):
    pass


class NotSphere(EmbeddingError):
    pass


class BadOuterDart(EmbeddingError):
    pass


class NotOnFace(EmbeddingError):
    pass


class AlreadyAdjacent(EmbeddingError):
    pass


class WouldCreateMultiEdge(EmbeddingError):
    pass


class FacialCycle(EmbeddingError):
    pass


class NotProper(TFColorError, ValueError):
    pass


class TriangleFound(TFColorError, ValueError):
    def __init__(self, witness):
        super().__init__(f"graph contains the triangle {tuple(witness)}")
        self.witness = tuple(witness)


class ProofOrderViolation(TFColorError, RuntimeError):
    """A configuration that earlier reductions should have excluded showed up."""


class NoReductionFound(TFColorError, RuntimeError):
    def __init__(self, message, audit=None):
        super().__init__(message)
        self.audit = audit


class SpecOutOfRange(TFColorError, ValueError):
    pass


class ParseError(TFColorError, ValueError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class BoundaryNotOuterCycle(ParseError):
    pass
