"""Exception hierarchy shared by every evonet module."""


class EvonetError(Exception):
    """Base class for all errors raised by evonet."""


class DimensionError(EvonetError, ValueError):
    pass


class DataError(EvonetError, ValueError):
    pass


class ParameterError(EvonetError, ValueError):
    pass


class NumericError(EvonetError, ValueError):
    pass


class DomainError(EvonetError, ValueError):
    pass


class StructuralDecodeError(EvonetError, ValueError):
    """A bit string cannot be split into header and slot substrings."""


class RepresentationError(EvonetError, ValueError):
    """A matrix weight or connection has no bit-string encoding."""


class InfeasibleRangeError(EvonetError, ValueError):
    pass


class CyclicGenomeError(EvonetError, ValueError):
    pass


class CapacityError(EvonetError, ValueError):
    pass


class ExhaustedSlotsError(EvonetError, ValueError):
    pass


class InvalidTargetError(EvonetError, ValueError):
    pass


class IncompatibleParentsError(EvonetError, ValueError):
    pass


class EmptyPopulationError(EvonetError, ValueError):
    pass


class PopulationTooSmallError(EvonetError, ValueError):
    pass


class BatchSizeError(EvonetError, ValueError):
    pass


class CacheError(EvonetError, ValueError):
    pass


class ConfigError(EvonetError, ValueError):
    """Invalid experiment configuration; ``problems`` lists every violation."""

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
