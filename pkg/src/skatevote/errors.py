"""Exception types shared across the package."""


class SkatevoteError(Exception):
    """Base class for all package errors."""


class InvalidInstance(SkatevoteError):
    """An election or attack instance breaks a structural invariant."""


class UnknownCandidate(SkatevoteError, KeyError):
    def __init__(self, candidate):
        super().__init__(candidate)
        self.candidate = candidate

    def __str__(self):
        return f"unknown candidate: {self.candidate!r}"


class StageOutOfRange(SkatevoteError, ValueError):
    def __init__(self, stage, m):
        super().__init__(f"stage {stage} outside [1, {m}]")
        self.stage = stage
        self.m = m


class ParseError(SkatevoteError):
    """Malformed input text; carries the 1-based line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message


class PositionNotAnImprovement(SkatevoteError, ValueError):
    """A lift must move a candidate to a strictly better (smaller) position."""


class MalformedWitness(SkatevoteError):
    """A violation witness whose payload does not fit its axiom."""


class BudgetExceeded(SkatevoteError):
    """A bounded search ran out of its node budget before deciding."""

    def __init__(self, budget, message="search budget exhausted"):
        super().__init__(f"{message} (budget={budget})")
        self.budget = budget
