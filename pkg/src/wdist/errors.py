"""Exception hierarchy shared by all modules."""


class WdistError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameters(WdistError, ValueError):
    pass


class NotPrime(InvalidParameters):
    pass


class NotIrreducible(InvalidParameters):
    pass


class NotPrimitive(InvalidParameters):
    pass


class NotADivisor(InvalidParameters):
    pass


class NonPositive(InvalidParameters):
    pass


class TooLarge(WdistError):
    """A resource guard refused the requested computation."""


class DivisionByZero(WdistError, ZeroDivisionError):
    pass


class MixedModulus(WdistError, ValueError):
    """Two cyclotomic integers with different p were combined."""


class InadmissibleT(WdistError, ValueError):
    def __init__(self, t, witness):
        super().__init__(f"t={t} is not admissible: (pi^t)^(p^{witness}) = -pi^t")
        self.t = t
        self.witness = witness


class NoMatch(WdistError):
    """t is not of the form ((p^k+1)/2) p^tau mod (p^m-1)/2 for any k, tau."""


class CaseNotCovered(WdistError):
    pass


class PreconditionViolation(WdistError):
    pass


class LemmaViolation(WdistError, AssertionError):
    def __init__(self, msg, alpha=None):
        super().__init__(msg)
        self.alpha = alpha


class IdentityViolation(LemmaViolation):
    pass


class NonRationalSum(WdistError, ArithmeticError):
    pass


class DegenerateCode(WdistError, ValueError):
    pass
