"""Exception hierarchy shared by all grikit modules."""


class GrikitError(Exception):
    """Base class for all errors raised by grikit."""


# -- scalar fields ----------------------------------------------------------

class DivisionByZero(GrikitError, ZeroDivisionError):
    """Inversion of the zero element of a field."""


class FieldMismatch(GrikitError):
    """Arithmetic between elements of different fields."""


# -- algebras ---------------------------------------------------------------

class InvalidAlgebra(GrikitError):
    """Structure constants fail the unital/associative checks."""


class InvalidAntiAutomorphism(GrikitError):
    """Candidate map fails the anti-automorphism axioms."""


class DescriptorMismatch(GrikitError):
    """Operation on elements of different algebras."""


class NotInvertible(GrikitError):
    """Element has no two-sided inverse; signals 'undefined' in rational
    evaluation."""


class NoWitnessFound(GrikitError):
    """Search budget exhausted without an element with the required
    independence / non-vanishing property."""


# -- free algebra -----------------------------------------------------------

class AmbientMismatch(GrikitError):
    """Polynomials built over different (algebra, sigma, m) contexts."""


class ZeroPolynomialDegree(GrikitError):
    """Degree/height/blendedness queried on the zero polynomial."""


class MissingAssignment(GrikitError):
    """Evaluation point does not cover every variable."""


class TwistOutOfRange(GrikitError):
    """Twist exponent exceeds the ambient bound m."""


# -- transforms -------------------------------------------------------------

class ZeroPolynomial(GrikitError):
    """Transform applied to the zero polynomial."""


class BlendCollapsed(GrikitError):
    """Blending drove the polynomial to zero."""

    def __init__(self, message, steps=()):
        super().__init__(message)
        self.steps = tuple(steps)


class MultilinearizeCollapsed(GrikitError):
    """Polarization drove the polynomial to zero."""


class FreshVarCollision(GrikitError):
    """Fresh variable already occurs in the polynomial."""


class VariableAbsent(GrikitError):
    """Named variable does not occur in the polynomial."""


class NotSingleVariable(GrikitError):
    """Twist reduction requires a polynomial in exactly one variable."""


class NotSigmaLinear(GrikitError):
    """Twist reduction requires each monomial to contain exactly one
    indeterminate occurrence."""


class NoTopTwist(GrikitError):
    """Twist reduction requires a positive top twist (k >= 1)."""


class ArityMismatch(GrikitError):
    """Specialization tuple does not supply one value per twist 0..m."""


# -- rational expressions ---------------------------------------------------

class BaseUndefined(GrikitError):
    """Series expansion requested at a point where the expression is
    undefined (some inverted subexpression is singular)."""


class BaseNonzero(GrikitError):
    """Component extraction requires the expression to vanish at the base
    point."""


class ExhaustedSampling(GrikitError):
    """Rejection sampling failed to produce enough defined points."""


# -- checker ----------------------------------------------------------------

class ExhaustiveTooLarge(GrikitError):
    """Exhaustive enumeration exceeds the configured budget."""


class UnknownEntry(GrikitError):
    """Catalog lookup for a name that is not shipped."""


class InvalidInput(GrikitError):
    """Operation precondition violated by the caller."""


# -- parsing ----------------------------------------------------------------

class ParseError(GrikitError):
    """Syntax error, with 1-based line/column position."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
