"""Error taxonomy shared by the library, the service layer, and the CLI."""


class TropdualError(Exception):
    """Base class for all package-specific errors."""


class InputError(TropdualError):
    """Malformed or semantically invalid input (CLI exit code 1)."""


class UnsupportedShapeError(TropdualError):
    """Structurally valid input outside the supported shapes (CLI exit code 2)."""


class OracleMismatchError(TropdualError):
    """The tropical pipeline and the classical oracle disagree (CLI exit code 3)."""
