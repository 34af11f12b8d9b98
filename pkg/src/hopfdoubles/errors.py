class HopfDoublesError(Exception):
    """Base class for library errors."""


class ConfigurationError(HopfDoublesError):
    """Incompatible fields or construction parameters."""


class InputError(HopfDoublesError):
    """Malformed input: unknown generator, bad syntax, bad file."""


class EvaluationError(HopfDoublesError):
    """Substitution hit a pole."""


class ResourceError(HopfDoublesError):
    """Rewriting exceeded its step budget."""


class DegeneratePairingError(HopfDoublesError):
    """A Gram matrix is singular where a perfect pairing was required."""


class KindError(HopfDoublesError):
    """Operation not available for this kind of double."""


class RepresentationError(HopfDoublesError):
    """A module fails its defining relations or has unsuitable structure."""
