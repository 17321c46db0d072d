from emverify.engine.group import (
    BoundExceededError,
    ConcreteGroup,
    MatrixKind,
    PermutationKind,
    closure,
    from_elements,
)
from emverify.engine.chardeg import DegreeReport, char_degrees
from emverify.engine.ff import FiniteField
from emverify.engine import builders

__all__ = [
    "BoundExceededError",
    "ConcreteGroup",
    "DegreeReport",
    "FiniteField",
    "MatrixKind",
    "PermutationKind",
    "builders",
    "char_degrees",
    "closure",
    "from_elements",
]
