"""Exception hierarchy shared across the package."""


class CrashLocError(Exception):
    """Base class for all crashloc errors."""


class MalformedLog(CrashLocError):
    """Crash log text contains no parseable stack frame."""


class MissingException(CrashLocError):
    """First log line does not start with a dotted exception type."""


class NoDeveloperFrame(CrashLocError):
    """Every frame in the trace matched a framework prefix."""


class EmptyCorpus(CrashLocError):
    """An operation that needs training data received none."""


class DimensionMismatch(CrashLocError):
    """Feature vector length differs from the model's feature count."""


class EmptyPool(CrashLocError):
    """Nearest-crash retrieval was given an empty candidate pool."""


class UnknownClass(CrashLocError):
    """A class name does not resolve inside the loaded app model."""


class ArtifactError(CrashLocError):
    """Problem in a serialized artifact; carries a JSON-pointer-style path."""

    def __init__(self, message: str, pointer: str = ""):
        self.pointer = pointer
        super().__init__(f"{message} (at {pointer})" if pointer else message)


class SchemaError(ArtifactError):
    """Serialized artifact violates its schema."""


class DanglingRef(ArtifactError):
    """A method or class reference does not resolve within its model."""


class CorpusTooSmall(CrashLocError):
    """Fewer corpus entries than cross-validation folds."""


class EmptySet(CrashLocError):
    """A metric over result sets received an empty set."""


class LocateError(CrashLocError):
    """End-to-end localization failure, tagged with the failing phase."""

    def __init__(self, phase: str, message: str):
        self.phase = phase
        super().__init__(f"[{phase}] {message}")
