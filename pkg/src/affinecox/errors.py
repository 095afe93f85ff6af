"""Exception hierarchy shared by every module of the package."""


class AffineCoxError(Exception):
    """Base class for domain errors raised by affinecox."""


class InexactDivision(AffineCoxError, ArithmeticError):
    pass


class NotCyclotomicProduct(AffineCoxError, ValueError):
    pass


class RankOutOfRange(AffineCoxError, ValueError):
    pass


class KernelDimensionError(AffineCoxError, ValueError):
    pass


class SingularMatrix(AffineCoxError, ArithmeticError):
    pass


class ChoiceRequired(AffineCoxError, ValueError):
    pass


class ChoiceForbidden(AffineCoxError, ValueError):
    pass


class UnsupportedFamily(AffineCoxError, ValueError):
    pass


class NotBipartite(AffineCoxError, ValueError):
    pass


class ClassIndexRequired(AffineCoxError, ValueError):
    pass


class ClassIndexForbidden(AffineCoxError, ValueError):
    pass


class ClassIndexOutOfRange(AffineCoxError, ValueError):
    pass


class UnitMultiplicityError(AffineCoxError, ValueError):
    pass
