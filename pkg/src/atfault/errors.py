"""Exception types shared across the package."""


class AtfaultError(Exception):
    """Base class for all package errors."""


class ConfigError(AtfaultError):
    """A configuration value is missing, malformed, or out of range."""


class DataError(AtfaultError):
    """Input data cannot be used (missing file, empty set, bad shapes)."""


class SchemaError(DataError):
    """A CSV header or record does not match the expected schema."""
