"""Exception hierarchy.

The CLI maps these onto exit codes: ParseError -> 1, ValidationError and
subclasses -> 2, CapExceeded and subclasses -> 3.  Verification failures
(exit 4) are reported by the verifier, not raised.
"""


class OrbcohError(Exception):
    pass


class ParseError(OrbcohError):
    """Malformed input file or argument."""


class ValidationError(OrbcohError):
    """Well-formed input that violates a model precondition."""


class NonInvertibleGenerator(ValidationError):
    pass


class IncompatibleConductor(ValidationError):
    pass


class NotFiniteOrder(ValidationError):
    pass


class ProductNotIdentity(ValidationError):
    pass


class ModelViolation(ValidationError):
    pass


class NotSL(ValidationError):
    pass


class NotCoprime(ValidationError):
    pass


class InvalidNikulinTriple(ValidationError):
    pass


class ExponentRange(ValidationError):
    pass


class CongruenceViolation(ValidationError):
    pass


class PairingUndefined(ValidationError):
    pass


class CapExceeded(OrbcohError):
    """An enumeration would exceed its explicit cap."""


class ClosureCapExceeded(CapExceeded):
    pass


class EnumerationCapExceeded(CapExceeded):
    pass


class InternalInconsistency(OrbcohError):
    """A quantity that is provably integral/nonnegative came out otherwise."""
