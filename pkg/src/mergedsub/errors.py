"""Exception types raised by the library.

Every error the CLI maps to a non-zero exit code derives from
:class:`MergedSubError`.
"""


class MergedSubError(Exception):
    """Base class for all library errors."""


class GraphError(MergedSubError, ValueError):
    """A graph violates the simple-graph invariants."""


class ParameterError(MergedSubError, ValueError):
    """A size or index parameter is outside its admissible range."""


class OrderMismatchError(MergedSubError, ValueError):
    """Two inputs that must share an order (or edge count) do not."""


class DisconnectedGraphError(MergedSubError, ValueError):
    """The operation needs a connected graph."""


class HypothesisError(MergedSubError, ValueError):
    """Inputs violate the hypotheses of a closed-form formula."""


class RegularityError(HypothesisError):
    """A graph that must be regular is not."""


class NotCommutingError(HypothesisError):
    """Two graphs whose adjacency matrices must commute do not."""


class NegativeDiscriminantError(HypothesisError):
    """A closed-form eigenvalue pair would be complex."""


class AsymmetricMatrixError(MergedSubError, ValueError):
    pass


class GraphIOError(MergedSubError, OSError):
    """A file could not be read or written."""
