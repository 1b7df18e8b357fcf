"""Exception types shared across the package."""


class WpsimplexError(Exception):
    """Base class for all package-specific failures."""


class ParameterOutOfRange(WpsimplexError, ValueError):
    """Family parameters outside the supported range (r1 >= 2, x1 >= 1)."""


class IndexOutOfRange(WpsimplexError, ValueError):
    """A residue or loop index outside its documented interval."""


class BudgetExceeded(WpsimplexError, RuntimeError):
    """An enumeration would exceed the configured work budget."""


class PointOutsideSimplex(WpsimplexError, ValueError):
    """A point violates one of the simplex's defining inequalities."""


class DimensionMismatch(WpsimplexError, ValueError):
    """Operands disagree on dimension or variable count."""


class InvalidPair(WpsimplexError, ValueError):
    """An index pair is not a member of the rewrite-pair set."""


class InternalConsistency(WpsimplexError, RuntimeError):
    """A constructed object failed one of its own consistency checks."""


class NonPureComplex(WpsimplexError, RuntimeError):
    """Facet enumeration found maximal faces of more than one size."""


class SingularFacet(WpsimplexError, ValueError):
    """A candidate facet spans a degenerate (determinant zero) simplex."""


class CertificateFailure(WpsimplexError, RuntimeError):
    """No weight vector separating every generator could be constructed."""


class DegenerateLift(WpsimplexError, RuntimeError):
    """Lifted heights are not generic: a point lies on a facet hyperplane."""
