"""Exception types raised by the package."""


class KneserError(Exception):
    """Base class for all errors raised here."""


class InvalidParams(KneserError, ValueError):
    pass


class MalformedSet(KneserError, ValueError):
    pass


class InadmissibleMove(KneserError, ValueError):
    pass


class TooLarge(KneserError):
    pass


class SearchExhausted(KneserError):
    """The backtracking oracle ran out of its expansion budget."""


class NotHamiltonian(KneserError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class Disconnected(KneserError):
    pass


class WitnessMismatch(KneserError):
    pass


class SlotOccupied(KneserError):
    pass
