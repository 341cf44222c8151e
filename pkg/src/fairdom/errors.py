"""Exception types shared across the package."""


class CapacityError(Exception):
    """A graph or an enumeration request exceeds the subset-enumeration cap."""


class FormulaInconsistencyError(Exception):
    """A published counting formula evaluated to a non-integer.

    Carries the exact rational value so reports can show what the formula
    actually produced instead of a rounded number.
    """

    def __init__(self, message, exact=None):
        super().__init__(message)
        self.exact = exact
