"""Exception types shared across the package."""


class UVCodesError(Exception):
    """Base class for every error raised by uvcodes."""


class CompositeP(UVCodesError):
    """The characteristic is not an odd prime."""


class ReducibleModulus(UVCodesError):
    """A supplied modulus polynomial factors over GF(p)."""


class DivisionByZero(UVCodesError):
    """Multiplicative inverse of zero requested."""


class ZeroArgument(UVCodesError):
    """The quadratic character is undefined at zero."""


class ParamsMismatch(UVCodesError):
    """Operands belong to different field/ring realizations."""


class RankDeficient(UVCodesError):
    """A generator matrix does not have full row rank."""


class BudgetExceeded(UVCodesError):
    """Requested computation exceeds the configured work budget."""


class NumericalDrift(UVCodesError):
    """A floating-point quantity that must be an exact integer drifted."""


class NotInL(UVCodesError):
    """A group action element is not a member of the defining set."""


class WrongRegime(UVCodesError):
    """A closed form was requested outside its (p, m) regime."""


class Class1Anomaly(UVCodesError):
    """A zero generator column was found, contradicting the code family."""
