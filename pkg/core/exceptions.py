"""Exceptions raised by triplecover."""
from __future__ import annotations


class TriplecoverError(Exception):
    """Base exception for all library errors."""
    pass


class ConfigurationError(Exception):
    """Exception raised for configuration errors."""
    pass


class FieldError(TriplecoverError):
    """Exception raised for invalid fields or field elements."""
    pass


class FieldMismatchError(FieldError):
    """Exception raised when operands live over different fields."""
    pass


class DivisionByZeroError(FieldError, ZeroDivisionError):
    """Exception raised when inverting zero."""
    pass


class ReducibleModulusError(FieldError):
    """Exception raised when an extension modulus is not irreducible."""
    pass


class PolynomialError(TriplecoverError):
    """Exception raised for invalid polynomial operations."""
    pass


class NotFiniteFieldError(PolynomialError):
    """Exception raised when an algorithm needs a finite ground field."""
    pass


class ProjectiveLineError(TriplecoverError):
    """Exception raised for invalid points or Möbius transformations."""
    pass


class BoundaryPointError(ProjectiveLineError):
    """Exception raised when a configuration lies on the boundary of M0,n."""
    pass


class MapError(TriplecoverError):
    """Exception raised for invalid rational maps."""
    pass


class ConstantMapError(MapError):
    """Exception raised when a map is constant."""
    pass


class InseparableMapError(MapError):
    """Exception raised when a map is not generically étale."""
    pass


class WildRamificationError(MapError):
    """Exception raised when a tame map is required but wild ramification occurs."""
    pass


class CharacteristicError(TriplecoverError):
    """Exception raised when the ground characteristic is not supported."""
    pass


class ConstructionError(TriplecoverError):
    """Exception raised when a covering construction fails."""
    pass


class DuplicateBranchPointError(ConstructionError):
    """Exception raised when prescribed branch points repeat."""
    pass


class AdjunctionBlockedError(ConstructionError):
    """Exception raised when a needed root cannot be adjoined."""
    pass


class CandidateExhaustedError(ConstructionError):
    """Exception raised when no admissible Möbius transformation exists."""
    pass


class CurveError(TriplecoverError):
    """Exception raised for invalid Weierstrass fibers."""
    pass


class SingularFiberError(CurveError):
    """Exception raised when an invariant needs a smooth fiber."""
    pass


class OracleError(TriplecoverError):
    """Exception raised by the brute-force ramification oracle."""
    pass


class FieldTooLargeError(OracleError):
    """Exception raised when the enumeration field exceeds the size limit."""
    pass


class SerializationError(TriplecoverError):
    """Exception raised when parsing or writing files fails."""
    pass
