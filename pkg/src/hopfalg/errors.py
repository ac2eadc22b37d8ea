"""Exception hierarchy shared across the package."""


class HopfAlgError(Exception):
    """Base class for all package errors."""


class InputError(HopfAlgError):
    """Malformed arguments: unknown generators, mixed presentations, bad ranks."""


class ParameterError(HopfAlgError):
    """Catalog parameters outside the documented domain."""


class StructuralError(HopfAlgError):
    """Mathematically inconsistent data: invariant violations, closure failures."""
