"""Exception types shared across the library."""


class HopfLabError(Exception):
    """Base class for all library errors."""


class NotSplitError(HopfLabError):
    """A polynomial has an irreducible non-linear factor over the working
    cyclotomic field.  Retry with a larger conductor."""

    def __init__(self, factor, message=None):
        self.factor = factor
        super().__init__(message or f"polynomial does not split: {factor}")


class AmbientMismatchError(HopfLabError):
    """Subspace operation on operands with different ambient dimensions."""


class InconsistentSystemError(HopfLabError):
    """Linear system has no solution."""


class NotSemisimpleError(HopfLabError):
    """Algebra failed a structural check that semisimplicity guarantees."""


class IntegralError(HopfLabError):
    """Integral system has no solution or a solution space of dimension != 1."""


class NotAGroupError(HopfLabError):
    """Cayley table violates a group axiom."""

    def __init__(self, axiom, detail=""):
        self.axiom = axiom
        super().__init__(f"not a group: {axiom} fails{(' ' + detail) if detail else ''}")


class AxiomError(HopfLabError):
    """Structure tensors violate a Hopf algebra axiom."""

    def __init__(self, report):
        self.report = report
        failed = ", ".join(c.name for c in report.checks if not c.ok)
        super().__init__(f"Hopf axioms failed: {failed}")


class MissingRMatrixError(HopfLabError):
    """Operation requires a quasitriangular structure but none is attached."""


class NotAnAlgebraError(HopfLabError):
    """Subspace is not closed under multiplication or misses the unit."""


class NotARepresentationError(HopfLabError):
    """Matrices do not respect the structure constants."""


class NotNormalError(HopfLabError):
    """Operation requires a normal left coideal subalgebra."""


class NotCoidealError(HopfLabError):
    """Subspace is not a left coideal subalgebra."""


class MultiplicityError(HopfLabError):
    """A character multiplicity came out non-integral or negative."""


class ChainError(HopfLabError):
    """Chain of subalgebras is not increasing with respect to inclusion."""


class SchemaError(HopfLabError):
    """Input file does not match the expected JSON schema."""
