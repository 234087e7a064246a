from __future__ import annotations


class LegmcsError(Exception):
    """Base class for every error raised by this package."""


class FrontParseError(LegmcsError, ValueError):
    def __init__(self, message: str, token_index: int | None = None):
        self.token_index = token_index
        if token_index is not None:
            message = f"token {token_index}: {message}"
        super().__init__(message)


class InvalidFront(LegmcsError, ValueError):
    """The event word does not describe a single closed front."""


class MaslovInconsistent(LegmcsError, ValueError):
    def __init__(self, message: str, cusp_event: int, rotation: int):
        self.cusp_event = cusp_event
        self.rotation = rotation
        super().__init__(message)


class BudgetExceeded(LegmcsError, RuntimeError):
    """A search ran past its configured state budget."""


class DiskBudgetExceeded(BudgetExceeded):
    pass


class EquivalenceAuditFailed(LegmcsError, AssertionError):
    pass


class AxiomViolation(LegmcsError, ValueError):
    def __init__(self, axiom: str, slot: int, detail: str = ""):
        self.axiom = axiom
        self.slot = slot
        msg = f"axiom {axiom} violated at slot {slot}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotAForm(LegmcsError, ValueError):
    pass


class PatternMismatch(LegmcsError, ValueError):
    pass


class ForbiddenMove(LegmcsError, ValueError):
    pass


class PreconditionFailed(LegmcsError, ValueError):
    pass


class InternalInvariantViolation(LegmcsError, AssertionError):
    pass


class RulingAxiomViolation(LegmcsError, AssertionError):
    pass


class NotADifferential(LegmcsError, ValueError):
    pass
