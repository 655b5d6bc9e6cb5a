"""Exception types shared across the package."""


class ProblingoError(Exception):
    """Base class for all package errors."""


class RegistrationError(ProblingoError):
    """A task id was registered twice."""


class UnknownTaskError(ProblingoError):
    """Lookup of a task id that was never registered."""


class DifficultyError(ProblingoError):
    """Invalid percentile, level index, or curriculum definition."""


class PackMissingError(ProblingoError):
    """No pack file for (task, language) and English fallback is disabled."""


class PackSchemaError(ProblingoError):
    """A pack file exists but violates the pack schema."""


class RenderError(ProblingoError):
    """Unknown template key or unbound placeholder during rendering."""


class TokenError(ProblingoError):
    """A canonical answer token is not covered by the pack."""


class ConfigError(ProblingoError):
    """Invalid run configuration (unknown keys, unresolvable values)."""


class DataError(ProblingoError):
    """Malformed dataset, instance, or ledger file."""


class EndpointError(ProblingoError):
    """The model endpoint could not be used at all (bad config, no credential)."""
