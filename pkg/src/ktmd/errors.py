"""Exception types shared across the package.

Everything raised on purpose derives from KtmdError so callers can catch
library failures without also swallowing programming mistakes.
"""


class KtmdError(Exception):
    """Base class for all errors raised by this package."""


# ---- graph construction ----

class IndexOutOfRange(KtmdError):
    """A vertex index falls outside 0..n-1."""


class SelfLoop(KtmdError):
    """An edge joins a vertex to itself."""


class InvalidOrder(KtmdError):
    """The requested number of vertices is not allowed for this construction."""


class FamilySizeMismatch(KtmdError):
    """A product was given a factor list whose length differs from the order of the base graph."""


class RadiusOutOfRange(KtmdError):
    """A ball radius falls outside the range supported by the truncation level."""


class EdgeListFormatError(KtmdError):
    """An edge-list document is malformed (bad header, bad token, wrong count, duplicate edge)."""


# ---- metric / solver preconditions ----

class TooSmall(KtmdError):
    """The graph has fewer than two vertices, so no vertex pair exists."""


class EqualVertices(KtmdError):
    """A vertex pair operation received the same vertex twice."""


class InvalidK(KtmdError):
    """The multiplicity parameter k is outside the supported range."""


class DisconnectedInput(KtmdError):
    """The operation needs a connected graph."""


class NotAGenerator(KtmdError):
    """A vertex set claimed to be a generator fails the covering condition."""


class NotABasis(KtmdError):
    """A vertex set is a generator but not one of minimum size."""


class OracleLimitExceeded(KtmdError):
    """Exhaustive search was requested beyond its hard size limit."""


class BudgetExceeded(KtmdError):
    """Internal signal: the branch and bound node budget ran out."""


class InapplicableInputs(KtmdError):
    """A closed-form check was invoked outside its hypotheses."""
