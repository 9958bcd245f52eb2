"""Exception hierarchy shared by every qflag module."""


class QFlagError(ValueError):
    """Base class for user-facing validation failures."""


class SizeError(QFlagError):
    """Permutations (or other objects) live in different ambient sizes."""


class IndexingError(QFlagError):
    """A permutation does not index a Schubert class of the given flag variety."""


class ParameterError(QFlagError):
    """A numeric parameter is outside its allowed range."""


class VarSetMismatch(QFlagError):
    pass


class UnassignedVariable(QFlagError):
    pass


class InternalError(AssertionError):
    """An internal consistency check failed; this is always a bug."""
