from typing import Optional


class FlipToolError(Exception):
    """Base class for domain errors raised by the flip toolkit"""

    @property
    def name(self) -> str:
        return type(self).__name__


# Input / validation
class EmptyInput(FlipToolError):
    pass


class BadFacetArity(FlipToolError):
    pass


class DuplicateFacet(FlipToolError):
    pass


class NonPseudomanifold(FlipToolError):
    pass


class NonZeroEulerCharacteristic(FlipToolError):
    pass


class FacetFormatError(FlipToolError):
    pass


class TraceFormatError(FlipToolError):
    pass


class ConfigError(FlipToolError):
    pass


# Queries
class EdgeNotPresent(FlipToolError):
    pass


class TriangleNotPresent(FlipToolError):
    pass


class VertexNotPresent(FlipToolError):
    pass


# Moves
class IllegalMove(FlipToolError):
    def __init__(self, condition: str, move: Optional[object] = None):
        self.condition = condition
        self.move = move
        super().__init__(f"{condition}" + (f" ({move})" if move is not None else ""))


class NotInvertiblePair(FlipToolError):
    pass


# Search / annealing
class PreparationStalled(FlipToolError):
    def __init__(self, link_size: int, target: int):
        self.link_size = link_size
        self.target = target
        super().__init__(
            f"link of the inserted vertex reached {link_size} of {target} vertices"
        )


class BudgetExhausted(FlipToolError):
    pass


class NotFound(FlipToolError):
    pass


class LimitExceeded(FlipToolError):
    pass
