class ToolkitError(Exception):
    """Base class for errors raised by this package."""


class InputError(ToolkitError):
    """Malformed input: bad symbol, inconsistent automaton, unparsable file."""


class ResourceError(ToolkitError):
    """A search exceeded its budget; this is not a verdict."""
