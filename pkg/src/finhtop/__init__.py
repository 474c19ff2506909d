"""finhtop: finite topological spaces and homotopy colimits over posets.

Finite posets handled as finite spaces, the Grothendieck construction
(non-Hausdorff homotopy colimit) of diagrams of posets, reduction methods
(beat, weak and gamma points), order-complex/face-poset functors, exact
integral simplicial homology, and executable checkers for the
weak-equivalence results these constructions satisfy.
"""

from .errors import (
    CycleError,
    DiagramError,
    DomainMismatch,
    EmptyComplex,
    EmptyFiber,
    EmptyPoset,
    FinhtopError,
    FunctorialityError,
    MissingFiber,
    MissingTransition,
    NaturalityError,
    NotOrderPreserving,
    NotSimplicial,
    ReservedIdentifier,
    SizeLimitExceeded,
    UnknownElement,
)
from .poset import (
    FinitePoset,
    PosetMap,
    antichain,
    chain,
    compose,
    constant_map,
    identity,
    is_isomorphic,
    new_map,
    new_poset,
    preimage,
    product,
)

__all__ = [
    "FinitePoset",
    "PosetMap",
    "antichain",
    "chain",
    "compose",
    "constant_map",
    "identity",
    "is_isomorphic",
    "new_map",
    "new_poset",
    "preimage",
    "product",
    "CycleError",
    "DiagramError",
    "DomainMismatch",
    "EmptyComplex",
    "EmptyFiber",
    "EmptyPoset",
    "FinhtopError",
    "FunctorialityError",
    "MissingFiber",
    "MissingTransition",
    "NaturalityError",
    "NotOrderPreserving",
    "NotSimplicial",
    "ReservedIdentifier",
    "SizeLimitExceeded",
    "UnknownElement",
]

__version__ = "0.1.0"
