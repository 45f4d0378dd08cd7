"""Exception types shared across the kernel."""


class ProfcatError(Exception):
    """Base class for all kernel errors."""


class MalformedDocument(ProfcatError):
    """A structure references an id that does not exist, or a table is not total."""


class Mismatch(ProfcatError):
    """Boundaries of the arguments do not line up."""


class BudgetExceeded(ProfcatError):
    """An enumeration exceeded its work budget."""

    def __init__(self, message: str, work: int, budget: int, estimate: int | None = None):
        super().__init__(message)
        self.work = work
        self.budget = budget
        self.estimate = estimate


class NotALimit(ProfcatError):
    """A pair supplied as a chosen limit fails the universal property."""


class AdjunctionInvalid(ProfcatError):
    """The supplied adjunction data does not satisfy the triangle identities."""


class NoTerminal(ProfcatError):
    """The base 2-category has no designated terminal 0-cell."""


class TooLarge(ProfcatError):
    """A size cap was exceeded."""


class GenerationFailed(ProfcatError):
    """The random generator could not satisfy its constraints within the retry bound."""


class DocumentError(ProfcatError):
    """Base class for document parse errors."""


class DocumentSyntaxError(DocumentError):
    """Input is not valid JSON."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SchemaError(DocumentError):
    """Input is JSON but not a well-formed document; carries a JSON-pointer path."""

    def __init__(self, message: str, pointer: str):
        super().__init__(f"{message} at {pointer}")
        self.pointer = pointer


class DanglingRef(DocumentError):
    """A document reference does not resolve."""

    def __init__(self, name: str):
        super().__init__(f"unresolved reference: {name}")
        self.name = name
