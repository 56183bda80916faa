"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: ConfigError -> 2, DataError -> 3,
ConvergenceError -> 4.
"""


class OccShiftError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(OccShiftError):
    """Invalid or unresolvable run configuration."""

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class DataError(OccShiftError):
    """Input data violates a documented schema or invariant."""


class SchemaError(DataError):
    """Tabular input does not match the documented column set."""


class ConvergenceError(OccShiftError):
    """A required model fit failed to converge."""


class StageError(OccShiftError):
    """A pipeline stage failed; carries the stage name and the cause."""

    def __init__(self, stage, cause):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage '{stage}' failed: {cause}")
