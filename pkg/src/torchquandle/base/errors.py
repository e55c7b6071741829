"""Error hierarchy shared by all torchquandle subpackages."""

__all__ = [
    "QuandleError",
    "InputError",
    "LimitError",
    "InvariantError",
    "AxiomViolation",
    "OutOfRange",
    "NonUnitParameter",
    "NotAGroup",
    "ParseError",
    "ArcConsistencyError",
    "OrientationAmbiguous",
    "UnbalancedCrossing",
    "UnknownName",
    "LabelNotPresent",
    "MalformedPolynomial",
    "NotEndomorphism",
    "ConfigError",
    "CapExceeded",
    "OracleTooLarge",
    "TooLarge",
]


class QuandleError(Exception):
    """Base class of every error raised by torchquandle."""


class InputError(QuandleError, ValueError):
    """Invalid user input (tables, diagrams, polynomials, options)."""


class LimitError(QuandleError, RuntimeError):
    """A configured size limit was exceeded."""


class InvariantError(QuandleError, RuntimeError):
    """An internal consistency check failed."""


# %% input errors
class AxiomViolation(InputError):
    """
    A table violates one of the quandle axioms.

    Parameters
    ----------
    axiom : str
        One of ``"idempotence"``, ``"right-invertibility"``,
        ``"self-distributivity"``.
    witness : tuple[int, ...]
        Offending element, column or triple (0-indexed).

    """

    def __init__(self, axiom: str, witness: tuple[int, ...]):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"{axiom} fails at {self.witness}")


class OutOfRange(InputError):
    """A table entry or element lies outside ``0..n-1``."""

    def __init__(self, value: int, n: int, where: str = ""):
        self.value = value
        self.n = n
        self.where = where
        msg = f"value {value} outside 0..{n - 1}"
        super().__init__(f"{msg} ({where})" if where else msg)


class NonUnitParameter(InputError):
    """Alexander parameter ``t`` is not a unit modulo ``n``."""

    def __init__(self, n: int, t: int):
        self.n = n
        self.t = t
        super().__init__(f"t={t} is not a unit modulo n={n}")


class NotAGroup(InputError):
    """A multiplication table does not define a group."""

    def __init__(self, reason: str, witness: tuple[int, ...] = ()):
        self.reason = reason
        self.witness = tuple(witness)
        super().__init__(f"not a group: {reason} {self.witness}".rstrip())


class ParseError(InputError):
    """Malformed text input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ArcConsistencyError(InputError):
    """Arc under-in/under-out bookkeeping of a diagram is inconsistent."""

    def __init__(self, arc: int, reason: str):
        self.arc = arc
        self.reason = reason
        super().__init__(f"arc {arc}: {reason}")


class OrientationAmbiguous(InputError):
    """The over-strand direction of a PD crossing cannot be resolved."""

    def __init__(self, crossing: int):
        self.crossing = crossing
        super().__init__(f"cannot orient over-strand at crossing {crossing}")


class UnbalancedCrossing(InputError):
    """A Gauss code crossing label is not visited exactly twice."""

    def __init__(self, label: str, reason: str = "not visited exactly twice"):
        self.label = label
        super().__init__(f"crossing {label}: {reason}")


class UnknownName(InputError):
    """A corpus or bundled name does not exist."""

    def __init__(self, name: str, kind: str = "corpus entry"):
        self.name = name
        super().__init__(f"unknown {kind}: {name!r}")


class LabelNotPresent(InputError):
    """An element is not an edge label of the given quiver."""

    def __init__(self, label: int):
        self.label = label
        super().__init__(f"element {label} is not an edge label of this quiver")


class MalformedPolynomial(InputError):
    """A polynomial is not a valid cycle-length generating polynomial."""


class NotEndomorphism(InputError):
    """A map is not a quandle endomorphism."""

    def __init__(self, index: int, witness: tuple[int, int]):
        self.index = index
        self.witness = tuple(witness)
        super().__init__(
            f"map {index} is not an endomorphism: f(a > b) != f(a) > f(b) at {self.witness}"
        )


class ConfigError(InputError):
    """Invalid configuration value."""


# %% limit errors
class CapExceeded(LimitError):
    """The homset grew beyond the configured cap."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"homset exceeds cap of {cap} colorings")


class OracleTooLarge(LimitError):
    """Brute-force enumeration would check too many assignments."""

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"brute force needs {size} checks, limit is {limit}")


class TooLarge(LimitError):
    """Quandle too large for endomorphism enumeration."""

    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"quandle of order {n} exceeds endomorphism limit {limit}")
