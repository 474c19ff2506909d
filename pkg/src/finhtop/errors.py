"""Exception types shared across the library."""


class FinhtopError(Exception):
    """Base class for all finhtop errors."""


class UnknownElement(FinhtopError):
    """An identifier does not name an element of the poset/complex at hand."""


class CycleError(FinhtopError):
    """The supplied relation is not antisymmetric (a directed cycle exists)."""


class ReservedIdentifier(FinhtopError):
    """User identifiers may not contain the namespacing separator '::'."""


class NotOrderPreserving(FinhtopError):
    """A map between posets fails x <= y implies f(x) <= f(y)."""


class DomainMismatch(FinhtopError):
    """Source/target posets of maps or diagrams do not line up."""


class SizeLimitExceeded(FinhtopError):
    """An exact search was requested beyond its configured size bound."""


class EmptyPoset(FinhtopError):
    """Operation requires a nonempty poset."""


class EmptyComplex(FinhtopError):
    """Operation requires a nonempty simplicial complex."""


class NotSimplicial(FinhtopError):
    """A vertex map does not send simplices to simplices."""


class DiagramError(FinhtopError):
    """Base class for diagram construction errors."""


class MissingFiber(DiagramError):
    """A diagram lacks the fiber for some index element."""


class EmptyFiber(DiagramError):
    """Diagram fibers must be nonempty posets/complexes."""


class MissingTransition(DiagramError):
    """A diagram lacks the transition map for some cover pair."""


class FunctorialityError(DiagramError):
    """Transition composites disagree along two paths p <= z <= q."""


class NaturalityError(DiagramError):
    """A diagram morphism's components do not commute with the transitions."""
