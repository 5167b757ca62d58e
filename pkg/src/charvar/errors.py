"""Exception types shared across the package."""


class CharVarError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateLeadingCoefficient(CharVarError):
    """Quadratic/quartic solver got a leading coefficient below threshold."""


class NonConvergence(CharVarError):
    """Iterative solver hit its iteration cap with residual above tolerance."""


class SingularMatrix(CharVarError):
    """2x2 inverse requested for a matrix with near-zero determinant."""


class PreconditionViolated(CharVarError):
    """Numerical hypotheses of a structural lemma are not met."""


class TraceMismatch(CharVarError):
    """Quadruple members do not share a common trace."""


class InconsistentS0(CharVarError):
    """s0 entry disagrees with t^2/2 - 2 for the supplied t."""


class ConstraintViolated(CharVarError):
    """Input data violates a defining polynomial constraint."""


class SmallS123(CharVarError):
    """Triple realization needs |s123| bounded away from zero."""


class FactorizationFailure(CharVarError):
    """Complex symmetric factorization found no usable pivot (rank defect)."""


class TypeIIViolated(CharVarError):
    """Extension targets fail the four linear compatibility relations."""


class S44Mismatch(CharVarError):
    """Implied self-pairing of the fourth matrix is off its required value."""


class DegenerateCharacter(CharVarError):
    """No realization strategy applies (all triple invariants vanish and no
    known degenerate pattern matches)."""


class ExcludedParameter(CharVarError):
    """Sampling requested at (or too close to) an excluded parameter value."""
