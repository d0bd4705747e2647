"""Exception hierarchy for realizer.

Normal mathematical outcomes (not realizable, no real realization,
indeterminate) are reported as verdicts, not raised. Exceptions here signal
malformed input, violated preconditions, or computations that could not be
completed within the supported coefficient field.
"""


class RealizerError(Exception):
    """Base class for all realizer errors."""

    module = "realizer"

    def qualified(self) -> str:
        return f"{self.module}: {self}"


# =============================================================================
# poly-kernel
# =============================================================================


class KernelError(RealizerError):
    module = "kernel"


class DivisionByZeroError(KernelError, ZeroDivisionError):
    """Exact division by the zero polynomial or rational function."""


class SubstitutionError(KernelError):
    """A substitution made a denominator vanish identically."""

    def __init__(self, message: str, variable: str | None = None):
        self.variable = variable
        super().__init__(message)


class SingularMatrixError(KernelError):
    """Linear system over the rational-function field is singular."""

    def __init__(self, message: str = "matrix is singular", rank: int | None = None):
        self.rank = rank
        super().__init__(message)


class ExtensionRequired(KernelError):
    """A step needs an algebraic extension beyond Q(i)."""

    def __init__(self, minimal_polynomial: str, context: str = ""):
        self.minimal_polynomial = minimal_polynomial
        self.context = context
        msg = f"algebraic extension required (minimal polynomial {minimal_polynomial})"
        if context:
            msg += f" while {context}"
        super().__init__(msg)


# =============================================================================
# expr-io
# =============================================================================


class ExprError(RealizerError):
    module = "expr"


class ExprSyntaxError(ExprError):
    """Malformed expression text."""

    def __init__(self, message: str, position: int, source: str = ""):
        self.position = position
        self.source = source
        super().__init__(f"{message} at position {position}")


class UnknownIdentifierError(ExprSyntaxError):
    def __init__(self, name: str, position: int, source: str = ""):
        self.name = name
        super().__init__(f"unknown identifier {name!r}", position, source)


class ProblemFileError(ExprError):
    """Malformed or incomplete problem file."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path:
            where = f"{path}:{line}: " if line else f"{path}: "
        super().__init__(f"{where}{message}")


# =============================================================================
# diff-core
# =============================================================================


class DifferentialError(RealizerError):
    module = "differential"


class NotRealizableFromP(DifferentialError):
    """The Jacobian formula produced a vector depending on derivatives of u."""

    def __init__(self, z):
        self.z = z
        super().__init__("parametrization does not lead to a realization")


class SingularJacobian(DifferentialError):
    def __init__(self, message: str = "Jacobian of the parametrization is singular"):
        super().__init__(message)


class DegenerateParametrization(DifferentialError):
    """All components of a parametrization are constant."""


class SingularReparametrization(DifferentialError):
    """A reparametrization has singular Jacobian or depends on the input."""


class InvalidEquation(DifferentialError):
    """IO-equation violates a structural requirement."""


# =============================================================================
# observable / real
# =============================================================================


class ObservableError(RealizerError):
    module = "observable"


class PreconditionError(ObservableError):
    pass


class SearchExhausted(ObservableError):
    """No common reparametrization found among the specializations tried."""

    def __init__(self, message: str, probes: list | None = None):
        self.probes = list(probes or [])
        super().__init__(f"{message} (probes: {self.probes})")


class InconsistentAnsatz(ObservableError):
    """The candidate r does not admit a proper Q with Q(r) = P."""


class InternalInconsistency(RealizerError):
    """An asserted mathematical invariant failed."""

    module = "internal"
