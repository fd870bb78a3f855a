"""Exception types shared across the workbench."""


class PilotteryError(Exception):
    """Base class for all workbench errors."""


class NotInGamma(PilotteryError):
    """A code is not the Godel number of any word (zero digit or < 1)."""


class ParseError(PilotteryError):
    """Surface or word text failed to parse.

    Carries the 0-based offset of the offending token in ``pos``.
    """

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class MalformedProofWord(PilotteryError):
    """A word does not split into parseable proof lines."""


class CacheExhausted(PilotteryError):
    """A digit request reached past the end of the cache."""

    def __init__(self, requested: int, available: int):
        super().__init__(
            f"requested pi decimal {requested} but cache holds {available}"
        )
        self.requested = requested
        self.available = available


class ExhaustedBound(PilotteryError):
    """An enumerated stream has no further entries below its code bound."""


class StreamExhausted(PilotteryError):
    """A certificate's code was not located in the supplied stream.

    Signals a backend/input mismatch: the certificate passed validation
    but the stream ended (or passed the code) without emitting it.
    """


class ResourceBudgetExceeded(PilotteryError):
    """A brute-force search would exceed the configured budget."""

    def __init__(self, bound, message: str = ""):
        super().__init__(message or f"search bound {bound} exceeds budget")
        self.bound = bound


class UnsupportedFormula(PilotteryError):
    """A formula lies outside the bounded-evaluable fragment."""


class UnsupportedProfile(PilotteryError):
    """An operation requires a profile capability that is absent."""
