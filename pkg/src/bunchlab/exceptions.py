"""Exception types raised by bunchlab."""


class BunchlabError(Exception):
    """Base class for all bunchlab errors."""


class InvalidPacketError(BunchlabError, ValueError):
    """A wave packet has non-physical parameters (e.g. width <= 0)."""


class EmptyInputError(BunchlabError, ValueError):
    pass


class CapacityError(BunchlabError, ValueError):
    """Problem size exceeds what the exact algorithm is allowed to handle."""


class DomainError(BunchlabError, ValueError):
    pass


class ConfigurationError(BunchlabError, ValueError):
    """An input configuration is inconsistent or physically invalid."""


class DegenerateNormalizationError(BunchlabError, ArithmeticError):
    """State normalization came out non-positive; indicates numerical corruption."""


class LabelParseError(BunchlabError, ValueError):
    """Malformed scenario label.

    Attributes
    ----------
    text : str
        The label being parsed.
    position : int
        Zero-based character offset of the offending character.
    """

    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")
