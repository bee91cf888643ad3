"""Exception types raised by the library.

Everything derives from ``XDiscError`` (a ``ValueError``), so callers can
catch the whole family or individual conditions.
"""


class XDiscError(ValueError):
    """Base class for all library errors."""


# --- rational arithmetic ---------------------------------------------------

class ConstantPolynomial(XDiscError):
    """Root finding requested for a constant polynomial."""


class ZeroDenominator(XDiscError):
    """Rational map with identically vanishing denominator."""


class PoleOnClosedDisc(XDiscError):
    """A denominator vanishes somewhere on the closed unit disc."""


class PointOnBoundary(XDiscError):
    """Hyperbolic distance requested for a point outside the open disc."""


# --- 2x2 matrix algebra ----------------------------------------------------

class NotSymmetric(XDiscError):
    """Input matrix is not symmetric within tolerance."""


class NotHermitian(XDiscError):
    """Input matrix is not Hermitian within tolerance."""


class NegativeEigenvalue(XDiscError):
    """Matrix has an eigenvalue below the PSD clamp band."""


# --- domains ----------------------------------------------------------------

class DimensionMismatch(XDiscError):
    """Point dimension does not match the domain's ambient dimension."""


class UnsupportedDomain(XDiscError):
    """Operation not defined for this domain tag."""


class NotOnCartanBoundary(XDiscError):
    """Matrix is not on the boundary of the 2x2 matrix ball."""


# --- automorphisms ----------------------------------------------------------

class ParameterNotContractive(XDiscError):
    """Automorphism parameter has operator norm >= 1."""


class SingularResolvent(XDiscError):
    """1 - a*x is not invertible."""


class DenominatorVanishes(XDiscError):
    """Automorphism denominator vanishes at the given point."""


# --- extremality ------------------------------------------------------------

class SizeMismatch(XDiscError):
    """Node and target lists have different lengths."""


class TargetNotContractive(XDiscError):
    """Interpolation target lies outside the closed target domain."""


class NodeOutsideDomainImage(XDiscError):
    """Disc value at a node fails closed membership in the target."""


class CompositionNotAnalytic(XDiscError):
    """Composed map has a pole on the closed unit disc."""


class EmptyGrid(XDiscError):
    """Scan requested over an empty grid."""


class PerturbationTooLarge(XDiscError):
    """Correction term exceeds the disc's distance to the boundary."""


class InvalidNodeSet(XDiscError):
    """Nodes are not distinct points of the open disc."""


# --- constructions ----------------------------------------------------------

class ParameterOutOfRange(XDiscError):
    """Family parameter outside its admissible range."""


class UnsupportedTarget(XDiscError):
    """Operation restricted to balanced targets."""


class DegreeTooHigh(XDiscError):
    """Blaschke factor exceeds the family's degree bound."""


class ParameterInvalid(XDiscError):
    """Family parameters violate a structural constraint."""


class FitResidualTooLarge(XDiscError):
    """Rational fit failed cross-validation (non-rational input or degree)."""


class OddMultiplicityZero(XDiscError):
    """Square-root obstruction: zeros or poles do not pair evenly."""


class BranchInconsistent(XDiscError):
    """No consistent branch choice during lift assembly."""
