"""Exception hierarchy shared by every module."""


class FiniteHyperError(Exception):
    pass


class Pole(FiniteHyperError, ZeroDivisionError):
    """A denominator factor vanishes for the given parameters.

    ``location`` names the offending factor, e.g. ``"(c)_3"``.
    """

    def __init__(self, location: str):
        super().__init__(f"pole: {location} vanishes")
        self.location = location


class DegenerateArgument(FiniteHyperError, ZeroDivisionError):
    """A transformed argument N/(...) has a zero denominator."""

    def __init__(self, location: str):
        super().__init__(f"degenerate argument: {location} = 0")
        self.location = location


class DenominatorDivisibleByP(FiniteHyperError, ValueError):
    pass


# series
class BoundMismatch(FiniteHyperError, ValueError):
    pass


class NonUnitConstantTerm(FiniteHyperError, ZeroDivisionError):
    pass


class NonzeroConstantTerm(FiniteHyperError, ValueError):
    pass


class ConstantTermNotOne(FiniteHyperError, ValueError):
    pass


class DegreeOutOfBound(FiniteHyperError, ValueError):
    pass


# generating functions
class DivisionFailure(FiniteHyperError, ArithmeticError):
    pass


class UnderdeterminedSystem(FiniteHyperError, ValueError):
    pass


# harness
class UnknownIdentity(FiniteHyperError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ConfigError(FiniteHyperError, ValueError):
    pass


class PoleExhaustion(FiniteHyperError, RuntimeError):
    """Too many sampled instances were rejected for poles or degeneracy."""
