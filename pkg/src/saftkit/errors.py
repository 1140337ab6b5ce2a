"""Exception types and warning categories used across the toolkit."""


class SaftError(Exception):
    """Base class for all toolkit errors."""


class DeterminantError(SaftError):
    """Matrix parameters do not satisfy a*d - b*c = 1 within tolerance."""


class NonFiniteError(SaftError):
    """A parameter or sample value is NaN or infinite."""


class UnknownPresetError(SaftError):
    """Preset name is not one of the recognized transform families."""


class ParamError(SaftError):
    """A preset or generator parameter is missing, extra, or out of range."""


class DegenerateBError(SaftError):
    """Operation requires b != 0 but the matrix has b = 0."""


class DegenerateBranchError(SaftError):
    """The b = 0 evaluation path was invoked with a non-degenerate matrix."""


class NegativeDError(SaftError):
    """The b = 0 evaluation path requires d > 0."""


class GridError(SaftError):
    """Grid construction or alignment constraint violated."""


class GridMismatchError(SaftError):
    """Two operands do not share the same sampling grid."""


class RangeError(SaftError):
    """A requested evaluation point lies outside the sampled window."""


class OffsetError(SaftError):
    """Operation is defined only for offset-free matrices (p = q = 0)."""


class IoError(SaftError):
    """A file could not be read or written."""


class FormatError(SaftError):
    """File contents violate the expected CSV layout or invariants."""


class SupportWarning(UserWarning):
    """Convolution output carries non-negligible energy outside the
    retained window; the truncated result may be inaccurate."""
