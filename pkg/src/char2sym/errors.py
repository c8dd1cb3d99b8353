"""Exception hierarchy for the char2sym library."""


class Char2SymError(Exception):
    """Base class for all library-specific errors."""


class FieldMismatchError(Char2SymError):
    """Operands belong to different fields."""


class NotASquareError(Char2SymError):
    """Square root requested of a non-square element."""


class NotInvertibleError(Char2SymError):
    """Element has no inverse in the given ring."""


class ParseError(Char2SymError):
    """Malformed field, scalar, polynomial, or matrix text."""


class NotMonicError(Char2SymError):
    """A monic polynomial was required."""


class ProductMismatchError(Char2SymError):
    """Claimed factorization does not multiply back to the input."""


class NotCoprimeError(Char2SymError):
    """Polynomials (or form blocks) were required to be pairwise coprime."""


class NotIrreducibleError(Char2SymError):
    """Input violated an irreducibility assumption."""


class UnsupportedFieldError(Char2SymError):
    """Operation not available over the given field."""


class NotSymmetricError(Char2SymError):
    """A symmetric matrix was required."""


class NonSquarePivotError(Char2SymError):
    """Gauss reduction hit a diagonal pivot that is not a square."""


class AlternatingFormError(Char2SymError):
    """Gauss reduction applied to an alternating form.

    A nonzero alternating form can never be a sum of squares of
    independent linear forms, so the reduction has no valid output.
    """


class ReductionFailedError(Char2SymError):
    """A reduction that must reach full rank came up short."""


class NotEvenPolynomialError(Char2SymError):
    """Polynomial was required to have even-exponent terms only."""


class InseparableCoreError(Char2SymError):
    """A separable polynomial was required."""


class InvalidClaimError(Char2SymError):
    """A transfer-form block's claimed classification is wrong."""


class SquareParameterError(Char2SymError):
    """Construction requires a non-square field element."""


class BadMultiplicityError(Char2SymError):
    """Multiplicity outside the allowed range for this construction."""


class NotSquareShapeError(Char2SymError):
    """Polynomial is not the square of a polynomial with the needed shape."""


class ZeroConstantTermError(Char2SymError):
    """Construction requires a nonzero constant term."""


class OutOfRangeError(Char2SymError):
    """Closed-form value requested below its validity threshold."""


class NotRealizableError(Char2SymError):
    """Polynomial is not the minimal polynomial of any symmetric matrix."""


class PlanInvariantError(Char2SymError):
    """Internal planning invariant violated; indicates bad input or a bug."""


class CertificateFailureError(Char2SymError):
    """Constructed matrix failed its own verification; indicates a bug."""


class DescentFailureError(Char2SymError):
    """CRT lift produced coefficients outside the base field."""
