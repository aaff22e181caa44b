"""Typed errors shared across the library.

Every error carries a stable ``type_name`` used by the CLI when reporting
failures, so callers can dispatch without string-matching messages.
Resource caps raise ``ResourceCapExceeded`` subclasses: these are
*inconclusive* outcomes, never wrong answers.
"""


class CoxError(Exception):
    """Base class for all domain errors raised by coxheaps."""

    @property
    def type_name(self) -> str:
        return type(self).__name__


class GraphSpecError(CoxError):
    """Invalid Coxeter graph description (duplicate names, bad bond, ...)."""


class UnknownGenerator(CoxError):
    """A generator name or index that the graph does not declare."""


class WordSyntaxError(CoxError):
    """Unparseable word text."""


class ResourceCapExceeded(CoxError):
    """A configured search cap was hit before the answer was decided."""


class OrbitCapExceeded(ResourceCapExceeded):
    """Braid-orbit search truncated; raise the cap to decide."""


class ClassCapExceeded(ResourceCapExceeded):
    """Toric equivalence class too large to materialize under the cap."""


class ExtensionCapExceeded(ResourceCapExceeded):
    """Linear-extension enumeration exceeded its cap."""


class TooLarge(ResourceCapExceeded):
    """Input outside the supported exhaustive-search range."""


class NotReduced(CoxError):
    """Operation requires a reduced word."""


class NotToricallyReduced(CoxError):
    """Operation requires a torically reduced word."""


class NotASource(CoxError):
    """Vertex is not a source of the orientation."""


class NotASink(CoxError):
    """Vertex is not a sink of the orientation."""


class NotAcyclic(CoxError):
    """Edge directions contain a directed cycle."""


class GraphMismatch(CoxError):
    """Operands live over different graphs."""


class NotACoxeterWord(CoxError):
    """Word does not use each generator exactly once."""


class ShapeMismatch(CoxError):
    """Word does not have the shape required by the operation."""


class SpokeError(CoxError):
    """The designated pair is not an even spoke of the graph."""


class SeedWordError(CoxError):
    """Seed word violates the constructor's preconditions."""
