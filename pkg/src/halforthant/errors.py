"""Exception types shared across the library."""


class ConfigError(ValueError):
    """A requested computation is inconsistent with its configuration
    (bad parameter ranges, horizon/box mismatch, memory guard)."""


class UnsupportedDimensionError(ValueError):
    """Operation is defined only for a specific lattice dimension."""


class RegimeError(RuntimeError):
    """A suite was asked to run outside the parameter regime it is valid in."""


class TruncatedClusterError(RuntimeError):
    """A cluster hit its growth cap; the caller must raise the cap or skip."""


class InsufficientTailData(ValueError):
    """Too few strictly positive tail points to fit a slope."""


class NoSurvivorsError(RuntimeError):
    """Every Monte Carlo sample died before the requested generation."""
