"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command line front end:
1 identity violation, 2 precondition, 3 budget, 4 I/O.
"""


class QuiverGrassError(Exception):
    exit_code = 2


# -- preconditions -----------------------------------------------------------

class PreconditionFailed(QuiverGrassError):
    exit_code = 2


class CyclicQuiver(PreconditionFailed):
    pass


class Disconnected(PreconditionFailed):
    pass


class DuplicateId(PreconditionFailed):
    pass


class IndexMismatch(PreconditionFailed):
    pass


class UnknownVertex(PreconditionFailed):
    pass


class NotAffine(PreconditionFailed):
    pass


class QuiverMismatch(PreconditionFailed):
    pass


class FieldMismatch(PreconditionFailed):
    pass


class ShapeMismatch(PreconditionFailed):
    pass


class NotClosedUnderArrows(PreconditionFailed):
    pass


class DimensionCapExceeded(PreconditionFailed):
    pass


class ProjectiveSummand(PreconditionFailed):
    pass


class InjectiveSummand(PreconditionFailed):
    pass


class ProjectiveInput(PreconditionFailed):
    pass


class NotBrick(PreconditionFailed):
    pass


class ExtTooBig(PreconditionFailed):
    pass


class WildQuiver(PreconditionFailed):
    pass


class BoundTooLarge(PreconditionFailed):
    pass


class NotARoot(PreconditionFailed):
    pass


class NotQuasiSimple(PreconditionFailed):
    pass


class Undecided(QuiverGrassError):
    """Isomorphism search over the rationals ran out of budget."""
    exit_code = 2


# -- budget ------------------------------------------------------------------

class BudgetExceeded(QuiverGrassError):
    exit_code = 3


# -- identity violations / failed fits ---------------------------------------

class IdentityViolation(QuiverGrassError):
    exit_code = 1


class NonIntegralFit(IdentityViolation):
    pass


class InconsistentSamples(IdentityViolation):
    pass


class NegativeCoefficientResult(IdentityViolation):
    pass


class InjectiveDecompositionFailed(IdentityViolation):
    pass


class PlanFailure(QuiverGrassError):
    exit_code = 2
