"""Exception types shared across the package."""


class ExactK3Error(Exception):
    """Base class for all package errors."""


class NotPrime(ExactK3Error, ValueError):
    pass


class SingularMatrix(ExactK3Error, ValueError):
    pass


class IndefiniteInput(ExactK3Error, ValueError):
    pass


class DegenerateLattice(ExactK3Error, ValueError):
    pass


class NonIntegralOverlattice(ExactK3Error, ValueError):
    pass


class IndefiniteLattice(ExactK3Error, ValueError):
    pass


class NoIsotropicVector(ExactK3Error, ValueError):
    pass


class NotAnIsometry(ExactK3Error, ValueError):
    pass


class NoSolution(ExactK3Error, ValueError):
    pass


class InfiniteSlice(ExactK3Error, ValueError):
    pass


class NotInPositiveCone(ExactK3Error, ValueError):
    pass


class SearchCapExceeded(ExactK3Error, RuntimeError):
    pass


class NotMonic(ExactK3Error, ValueError):
    pass


class ZeroConstantTerm(ExactK3Error, ValueError):
    pass


class ZeroDiscriminant(ExactK3Error, ValueError):
    pass


class IncompletePlaceList(ExactK3Error, ValueError):
    pass


class UnsupportedResidueTest(ExactK3Error, ValueError):
    pass


class NotOnCurve(ExactK3Error, ValueError):
    pass


class UnsupportedSectionShape(ExactK3Error, ValueError):
    pass


class IdenticalSections(ExactK3Error, ValueError):
    pass


class UnsupportedFiberType(ExactK3Error, ValueError):
    pass


class PoleAtPlace(ExactK3Error, ValueError):
    pass


class SingularGram(ExactK3Error, ValueError):
    pass


class NonIntegralClass(ExactK3Error, ValueError):
    pass


class IsometryCheckFailed(ExactK3Error, ValueError):
    pass


class SingularQuartic(ExactK3Error, ValueError):
    pass


class PointNotOnCurve(ExactK3Error, ValueError):
    pass


class TooFewCriticalValues(ExactK3Error, ValueError):
    pass


class UnsupportedForm(ExactK3Error, ValueError):
    pass


class DivisionByZeroElement(ExactK3Error, ZeroDivisionError):
    pass


class NoDegreeOnePlace(ExactK3Error, ValueError):
    pass


class NotAdmissible(ExactK3Error, ValueError):
    pass


class ClosureCapExceeded(ExactK3Error, RuntimeError):
    pass


class NonHomogeneous(ExactK3Error, ValueError):
    pass


class UnknownSuite(ExactK3Error, ValueError):
    pass


class UnsupportedPlace(ExactK3Error, ValueError):
    pass
