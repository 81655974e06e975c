"""Exception hierarchy shared by every module of the package."""


class NCompError(Exception):
    pass


class LevelRangeError(NCompError, ValueError):
    """A level or generator index lies outside the chain."""


class ArityError(NCompError, ValueError):
    """Two monotone maps (or chains) live on chains of different length."""


class TypingError(NCompError, TypeError):
    pass


class CompositionError(TypingError):
    """Codomain and domain do not line up."""


class SideConditionError(TypingError):
    """A recursion former was given a codomain that is not level-bounded.

    ``level`` is the level of the first offending factor.
    """

    def __init__(self, message, level=None):
        super().__init__(message)
        self.level = level


class StrictnessError(NCompError):
    """A lowering coercion would have to cross a recursion node."""


class ShapeError(NCompError, ValueError):
    pass


class FuelExhausted(NCompError):
    def __init__(self, steps):
        super().__init__(f"fuel exhausted after {steps} recursion steps")
        self.steps = steps


class ParseError(NCompError, ValueError):
    def __init__(self, message, line=None, col=None):
        where = f" at line {line}, column {col}" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.col = col
