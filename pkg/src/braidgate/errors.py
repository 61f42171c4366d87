"""Exception types shared across the package."""


class InputError(ValueError):
    """A caller-supplied value violates a precondition (bad shape, range, schema)."""


class ResourceLimitError(RuntimeError):
    """An operation would exceed the configured dense-matrix size cap."""
