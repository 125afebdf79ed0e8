"""Exception hierarchy shared across the pipeline.

Three families map onto the CLI exit codes: configuration problems (exit 2),
data problems (exit 3) and numerical failures (exit 4).
"""


class ElectolexError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(ElectolexError):
    """Invalid run configuration (bad paths, inverted window, bad flags)."""


class WindowInverted(ConfigError):
    def __init__(self, start, end):
        super().__init__(f"window end {end} precedes window start {start}")


class DataError(ElectolexError):
    """Malformed or inconsistent input data."""


class NumericalError(ElectolexError):
    """A statistical or numerical routine could not produce a result."""


# --- ingest ---------------------------------------------------------------

class MissingColumn(DataError):
    def __init__(self, column: str):
        self.column = column
        super().__init__(f"candidates CSV is missing required column {column!r}")


class DuplicateCandidate(DataError):
    def __init__(self, candidate_id: str, row_no: int):
        self.candidate_id = candidate_id
        self.row_no = row_no
        super().__init__(
            f"duplicate candidate_id {candidate_id!r} at row {row_no}"
        )


class MalformedRow(DataError):
    def __init__(self, row_no: int, column: str, reason: str):
        self.row_no = row_no
        self.column = column
        super().__init__(f"row {row_no}, column {column!r}: {reason}")


class MalformedLine(DataError):
    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        super().__init__(f"tweets line {line_no}: {reason}")


class UnknownCandidate(DataError):
    def __init__(self, candidate_id: str, context: str = ""):
        self.candidate_id = candidate_id
        msg = f"unknown candidate_id {candidate_id!r}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class EmptyWindow(DataError):
    def __init__(self, start, end):
        super().__init__(f"no tweet falls inside the window [{start}, {end}]")


# --- normalize ------------------------------------------------------------

class EmptyDocument(DataError):
    def __init__(self, candidate_id: str):
        self.candidate_id = candidate_id
        super().__init__(
            f"candidate {candidate_id!r} has no stems left after cleaning and "
            "stop-word removal"
        )


# --- vectorize ------------------------------------------------------------

class NoTerms(DataError):
    def __init__(self):
        super().__init__("no terms: every document is empty")


class UnknownTerm(DataError):
    def __init__(self, term: str):
        self.term = term
        super().__init__(f"stem {term!r} is not in the vocabulary")


# --- similarity -----------------------------------------------------------

class DimensionMismatch(NumericalError):
    def __init__(self, dim_x: int, dim_y: int):
        super().__init__(f"vector dimensions differ: {dim_x} vs {dim_y}")


# --- stats ----------------------------------------------------------------

class NaNInput(NumericalError):
    def __init__(self, where: str = "input"):
        super().__init__(f"NaN encountered in {where}")


class DegenerateInput(NumericalError):
    def __init__(self, reason: str):
        super().__init__(reason)


class SampleTooSmall(NumericalError):
    def __init__(self, n: int, minimum: int):
        super().__init__(f"sample size {n} below minimum {minimum}")


class SampleTooLarge(NumericalError):
    def __init__(self, n: int, maximum: int):
        super().__init__(f"sample size {n} above maximum {maximum}")


class ConstantSample(NumericalError):
    def __init__(self):
        super().__init__("all sample values are equal; statistic undefined")


class InsufficientGroups(NumericalError):
    def __init__(self, k: int):
        super().__init__(f"need at least 2 non-empty groups, got {k}")


class ZeroWithinVariance(NumericalError):
    def __init__(self):
        super().__init__("within-group variance is zero in every group")


# --- kernelreg ------------------------------------------------------------

class NonPositiveBandwidth(NumericalError):
    def __init__(self, value: float):
        super().__init__(f"bandwidths must be strictly positive, got {value}")


class OptimizationFailed(NumericalError):
    def __init__(self, diagnostics: list[str]):
        self.diagnostics = diagnostics
        super().__init__(
            "no bandwidth search start converged:\n  " + "\n  ".join(diagnostics)
        )
