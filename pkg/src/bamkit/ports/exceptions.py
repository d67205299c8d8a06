"""Domain exceptions for bamkit.

All exceptions inherit from BamError which provides a message and exit_code.
Exit codes: 1 model error, 2 data error, 3 verification mismatches, 4 I/O error.
"""


class BamError(Exception):
    """Base exception for bamkit domain errors."""

    def __init__(self, message: str, exit_code: int = 1, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code
        self.line = line


class ModelError(BamError):
    """Raised when the model text cannot be parsed or analyzed."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message, exit_code=1, line=line)


class ParseError(ModelError):
    """Raised when model text does not follow the language."""

    pass


class MissingTimeFrameError(ParseError):
    """Raised when the document lacks a complete time-frame triple."""

    pass


class MalformedTimeFrameError(ParseError):
    """Raised for an unrecognized unit, a non-integer count or a repeated sentence."""

    pass


class MalformedOutlineError(ParseError):
    """Raised when a category outline is inconsistent."""

    pass


class MalformedFormulaError(ParseError):
    """Raised when a formula line or expression cannot be parsed."""

    pass


class MalformedReportError(ParseError):
    """Raised for an empty report name or a bad breakdown line."""

    pass


class UnrecognizedLineError(ParseError):
    """Raised for a line before the first report that matches no sentence form."""

    pass


class DuplicateHierarchyTitleError(ParseError):
    """Raised when two category hierarchies share a title."""

    pass


class AnalysisError(ModelError):
    """Raised when a parsed model is semantically invalid."""

    pass


class CyclicDependencyError(AnalysisError):
    """Raised when formulas depend on each other in a cycle."""

    def __init__(self, cycle: list[str], line: int | None = None):
        super().__init__(
            "Cyclic dependency: " + " -> ".join([*cycle, cycle[0]]), line=line
        )
        self.cycle = cycle


class ConflictingDefinitionError(AnalysisError):
    """Raised when one variable has structurally different definitions."""

    pass


class UnknownBreakdownTitleError(AnalysisError):
    """Raised when a breakdown names an undeclared hierarchy."""

    pass


class TargetNotCalculatedError(ModelError):
    """Raised when an operation needs a calculated variable but got an input."""

    pass


class NameCapacityExceededError(ModelError):
    """Raised when no unique defined name can be produced."""

    pass


class WorkbookInvariantError(ModelError):
    """Raised when a workbook model violates the named-reference invariants."""

    pass


class UnknownVariableError(BamError):
    """Raised when a name does not refer to any variable in the model."""

    def __init__(self, name: str, exit_code: int = 2, line: int | None = None):
        super().__init__(f"Unknown variable '{name}'", exit_code=exit_code, line=line)
        self.name = name


class DataError(BamError):
    """Raised when input data or configuration files are invalid."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message, exit_code=2, line=line)


class DataSchemaError(DataError):
    """Raised when a CSV document does not have the expected header or shape."""

    pass


class VariableNotInputError(DataError):
    """Raised when data is supplied for a calculated variable."""

    pass


class UnknownCategoryPathError(DataError):
    """Raised when a category path matches no row of the variable."""

    pass


class PeriodOutOfRangeError(DataError):
    """Raised when a period is neither a valid index nor a period label."""

    pass


class MalformedNumberError(DataError):
    """Raised when a value is not a decimal number."""

    pass


class DuplicateEntryError(DataError):
    """Raised when the same instance appears twice in a data document."""

    pass


class EvaluationError(DataError):
    """Raised in strict mode when an instance evaluates to UNDEFINED."""

    pass


class UndefinedBaseError(DataError):
    """Raised when a sensitivity target is UNDEFINED before perturbation."""

    pass


class StyleConfigError(DataError):
    """Raised when a style configuration document is invalid."""

    pass


class VerificationFailedError(BamError):
    """Raised when observed values disagree with the shadow model."""

    def __init__(self, mismatch_count: int):
        super().__init__(f"{mismatch_count} mismatches found", exit_code=3)
        self.mismatch_count = mismatch_count


class BamIOError(BamError):
    """Raised when a file cannot be read or written."""

    def __init__(self, message: str):
        super().__init__(message, exit_code=4)


class UserCancelledError(BamError):
    """Raised when user interrupts an operation."""

    def __init__(self):
        super().__init__("Interrupted by user", exit_code=130)
