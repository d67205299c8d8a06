"""Port interfaces (protocols) for dependency injection.

This module provides the boundaries between command cores and external effects,
enabling pure unit tests without extensive mocking.

All public types are re-exported here.
"""

from .exceptions import (
    AnalysisError,
    BamError,
    BamIOError,
    ConflictingDefinitionError,
    CyclicDependencyError,
    DataError,
    DataSchemaError,
    DuplicateEntryError,
    DuplicateHierarchyTitleError,
    EvaluationError,
    MalformedFormulaError,
    MalformedNumberError,
    MalformedOutlineError,
    MalformedReportError,
    MalformedTimeFrameError,
    MissingTimeFrameError,
    ModelError,
    NameCapacityExceededError,
    ParseError,
    PeriodOutOfRangeError,
    StyleConfigError,
    TargetNotCalculatedError,
    UndefinedBaseError,
    UnknownBreakdownTitleError,
    UnknownCategoryPathError,
    UnknownVariableError,
    UnrecognizedLineError,
    UserCancelledError,
    VariableNotInputError,
    VerificationFailedError,
    WorkbookInvariantError,
)
from .helpers import (
    emit_json_success,
    load_cube,
    load_model,
    load_style,
    run_command,
    validate_paths,
)
from .implementations import JsonUI, RealFilesystem, RealUI
from .protocols import FilesystemPort, UIPort
from .results import (
    CensusResult,
    CheckResult,
    DepsResult,
    DocsResult,
    EvalResult,
    GenerateResult,
    SensitivityResult,
    VerifyResult,
)

__all__ = [
    # Exceptions
    "AnalysisError",
    "BamError",
    "BamIOError",
    "ConflictingDefinitionError",
    "CyclicDependencyError",
    "DataError",
    "DataSchemaError",
    "DuplicateEntryError",
    "DuplicateHierarchyTitleError",
    "EvaluationError",
    "MalformedFormulaError",
    "MalformedNumberError",
    "MalformedOutlineError",
    "MalformedReportError",
    "MalformedTimeFrameError",
    "MissingTimeFrameError",
    "ModelError",
    "NameCapacityExceededError",
    "ParseError",
    "PeriodOutOfRangeError",
    "StyleConfigError",
    "TargetNotCalculatedError",
    "UndefinedBaseError",
    "UnknownBreakdownTitleError",
    "UnknownCategoryPathError",
    "UnknownVariableError",
    "UnrecognizedLineError",
    "UserCancelledError",
    "VariableNotInputError",
    "VerificationFailedError",
    "WorkbookInvariantError",
    # Helpers
    "emit_json_success",
    "load_cube",
    "load_model",
    "load_style",
    "run_command",
    "validate_paths",
    # Implementations
    "JsonUI",
    "RealFilesystem",
    "RealUI",
    # Protocols
    "FilesystemPort",
    "UIPort",
    # Results
    "CensusResult",
    "CheckResult",
    "DepsResult",
    "DocsResult",
    "EvalResult",
    "GenerateResult",
    "SensitivityResult",
    "VerifyResult",
]
