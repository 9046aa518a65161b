"""Exception types raised across the library."""


class NearfocusError(ValueError):
    """Base class for all library-specific errors."""


class InvalidParameterError(NearfocusError):
    """An argument is outside its documented domain (negative, non-finite, wrong shape...)."""


class SingularGeometryError(NearfocusError):
    """A query point coincides with a radiating element, so the field diverges."""


class DegenerateChannelError(NearfocusError):
    """A channel vector is identically zero and cannot be beamformed."""


class ScenarioError(NearfocusError):
    """A scenario document failed validation; the message carries the offending key path."""
