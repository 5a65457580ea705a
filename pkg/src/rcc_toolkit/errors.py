"""
Exception hierarchy for RCC Toolkit

Verdicts (Unsat, Inconsistent, violation lists) are ordinary return values;
the exceptions below signal misuse, malformed input or exhausted searches.
"""

from typing import List, Optional


class RCCToolkitError(Exception):
    """Base class of every error raised by the toolkit"""


class KindMismatchError(RCCToolkitError, ValueError):
    """Relations or structures of different kinds (RCC8 vs RCC5) were mixed"""


class DimensionMismatchError(RCCToolkitError, ValueError):
    """Boxes of different dimension were compared"""


class FrameMismatchError(RCCToolkitError, ValueError):
    """A fork region refers to forks outside its frame"""


class DuplicateRegionError(RCCToolkitError, ValueError):
    """Two distinct region ids denote the same point set"""


class FormulaSyntaxError(RCCToolkitError, ValueError):
    """Formula text does not match the surface grammar"""

    def __init__(self, message: str, position: int = 0, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.position = position
        self.line = line
        self.column = column


class UnknownSchemaError(RCCToolkitError, KeyError):
    """Axiom schema id is not part of the axiom system"""


class BoundExceededError(RCCToolkitError, ValueError):
    """A brute-force bound (structure size, region count) is too large"""


class SearchExhausted(RCCToolkitError, RuntimeError):
    """A bounded search hit its cap without an answer (never a verdict)"""


class RealizationMismatch(RCCToolkitError, AssertionError):
    """Geometry induced from a realization differs from the refinement"""


class NormalizationError(RCCToolkitError, ValueError):
    """A Turing machine violates one or more of the required normal forms"""

    def __init__(self, failures: List[str]):
        super().__init__("machine is not normalized: " + ", ".join(failures))
        self.failures = list(failures)


class FreeVariableError(RCCToolkitError, ValueError):
    """A first-order formula has free variables other than the allowed one"""


class MissingTileError(RCCToolkitError, ValueError):
    """A distinguished tile required by a construction is absent"""

    def __init__(self, tile_role: str, detail: Optional[str] = None):
        message = f"domino system has no distinguished tile {tile_role}"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.tile_role = tile_role
