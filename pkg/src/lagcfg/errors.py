"""Domain-error taxonomy shared across the package."""


class LagError(Exception):
    """Base class for all domain errors raised by this package."""


# scalar / field level

class DivisionByZero(LagError, ZeroDivisionError):
    pass


class MixedFieldKinds(LagError, TypeError):
    pass


class RequiresExtension(LagError):
    """A required root does not exist in the current field.

    Callers working over exact rationals should catch this and retry in
    complex mode.
    """


class NotRealField(LagError):
    pass


# linear algebra

class DimensionMismatch(LagError, ValueError):
    pass


class RankDeficient(LagError):
    pass


class GramMismatch(LagError):
    pass


class NotSkew(LagError):
    pass


# configurations

class UndefinedCrossRatio(LagError):
    pass


class WrongN(LagError, ValueError):
    pass


class ZeroProductEntry(LagError):
    pass


class SamplingFailed(LagError):
    pass


class InvalidConfiguration(LagError):
    pass


class NotGeneric(LagError):
    pass


# combinatorics / identities

class RangeError(LagError, ValueError):
    pass


class EulerFormulaUndefined(LagError):
    pass


class FormulaUndefined(LagError):
    pass


class ZeroCrossRatio(LagError):
    pass


# moduli constructions

class RelationViolated(LagError):
    pass


class WrongParity(LagError, ValueError):
    pass


class ParityMismatch(LagError, ValueError):
    pass


class PositivityFailed(LagError):
    pass


# difference operators

class DegenerateOperator(LagError):
    pass


class WindowTooSmall(LagError):
    pass


class ZeroRescaleEntry(LagError):
    pass


class NotInE(LagError):
    pass


# N = 2n+3 relations

class LengthMismatch(LagError, ValueError):
    pass


class UnsupportedN(LagError, ValueError):
    pass
