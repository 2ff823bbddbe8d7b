class HyperionError(Exception):
    """Base class for library errors."""


class CarrierMismatch(HyperionError, TypeError):
    pass


class FamilyMismatch(HyperionError, TypeError):
    pass


class EmptyHypersum(HyperionError, ValueError):
    pass


class InverseOfZero(HyperionError, ZeroDivisionError):
    pass


class DimensionMismatch(HyperionError, ValueError):
    pass


class DotProductCollision(HyperionError, ValueError):
    """Two support vectors have the same dot product with the direction."""


class NotARoot(HyperionError, ValueError):
    pass


class DegeneratePolynomial(HyperionError, ValueError):
    pass


class ParseError(HyperionError, ValueError):
    def __init__(self, message: str, position: int = -1):
        self.position = position
        where = f" at position {position}" if position >= 0 else ""
        super().__init__(f"{message}{where}")
