"""Exception types shared across the package."""


class GalcohError(Exception):
    pass


class NonAssociative(GalcohError):
    def __init__(self, a, b, c):
        self.triple = (a, b, c)
        super().__init__(f"table is not associative at triple ({a}, {b}, {c})")


class NoIdentity(GalcohError):
    def __init__(self):
        super().__init__("table has no two-sided identity")


class NoInverse(GalcohError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no inverse")


class NotNormal(GalcohError):
    pass


class NotASubgroup(GalcohError):
    pass


class NotAHomomorphism(GalcohError):
    pass


class SearchBudgetExceeded(GalcohError):
    def __init__(self, bound):
        self.bound = bound
        super().__init__(f"search budget exceeded (bound {bound})")


class NotACocycle(GalcohError):
    pass


class NotCyclic(GalcohError):
    pass


class NotEquivariant(GalcohError):
    pass


class InternalInvariantViolation(GalcohError):
    pass


class NotSymmetric(GalcohError):
    pass


class NotSL(GalcohError):
    pass


class Singular(GalcohError):
    pass


class NotACocycleForStructure(GalcohError):
    pass


class SchemaError(GalcohError):
    """Input validation error carrying the offending JSON path."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")
