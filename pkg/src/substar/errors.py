"""Exception and warning types shared across the toolkit."""


class SubstarError(Exception):
    """Base class for every error raised by the package."""


class ZeroConstantTerm(SubstarError, ZeroDivisionError):
    """A series division/log needs a nonzero constant coefficient."""


class NonUnitBase(SubstarError, ValueError):
    """ps_pow was called on a series whose constant term is not 1."""


class PoleParameter(SubstarError, ValueError):
    """A Pochhammer denominator parameter sits on 0, -1, -2, ..."""


class NotApplicable(SubstarError, ValueError):
    """No admissible alpha exists for the given parameters."""


class DomainError(SubstarError, ValueError):
    """Argument outside the domain where a formula is defined."""


class SingularParameter(DomainError):
    """Boundary parametrization evaluated at one of its singular points."""


class OriginPoint(SubstarError, ValueError):
    """Sector margin requested at w = 0, where arg is undefined."""


class EvaluationFailure(SubstarError, ArithmeticError):
    """A sampled evaluation produced a non-finite value."""

    def __init__(self, message, z=None):
        super().__init__(message)
        self.z = z


class ZeroOnCircle(EvaluationFailure):
    """A map vanished (to 1e-12) on the sampled circle."""


class ZeroDerivative(EvaluationFailure):
    """f' vanished at a grid point."""


class ZeroDenominator(EvaluationFailure):
    """A criterion denominator vanished at a grid point."""


class ParameterOutOfTheorem(UserWarning):
    """Parameters lie outside a theorem's hypotheses; results carry no guarantee."""
