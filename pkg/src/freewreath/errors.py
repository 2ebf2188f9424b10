"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent user input (bad words, specs, preconditions)."""


class ResourceLimitError(RuntimeError):
    """An enumeration exceeded its configured element cap."""


class InternalConsistencyError(RuntimeError):
    """A derived structure violates an invariant it was built to satisfy."""
