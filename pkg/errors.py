#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exception types shared by the word library and the command line
"""

from typing import Iterable, Optional


class PiecewiseError(Exception):
    """Base class for every error raised by this package"""


class WordValidationError(PiecewiseError, ValueError):
    """A symbol does not belong to the alphabet it is read against"""

    def __init__(self, message: str, symbol: Optional[str] = None,
                 position: Optional[int] = None, line: Optional[int] = None):
        super().__init__(message)
        self.symbol = symbol
        self.position = position
        self.line = line

    def at_line(self, line: int) -> "WordValidationError":
        """Return a copy of this error tagged with an input line number"""
        return type(self)(self.args[0], self.symbol, self.position, line)

    def __str__(self) -> str:
        message = super().__str__()
        if self.line is not None:
            return f"line {self.line}: {message}"
        return message


class AlphabetMismatchError(WordValidationError):
    """Two words taking part in one operation use different alphabets"""


class PreconditionError(PiecewiseError, ValueError):
    """An operation was called outside its documented domain"""

    def __init__(self, message: str, missing: Iterable[str] = ()):
        super().__init__(message)
        self.missing = tuple(missing)


class PositionError(PiecewiseError, IndexError):
    """A position is not a cut of the word"""


class ResourceBudgetError(PiecewiseError, MemoryError):
    """A brute-force enumeration would store more subwords than allowed"""

    def __init__(self, budget: int, reached: int):
        super().__init__(
            f"downset enumeration exceeded the budget of {budget} stored subwords "
            f"(reached {reached})"
        )
        self.budget = budget
        self.reached = reached


class InvariantViolation(PiecewiseError, AssertionError):
    """A structural invariant checked at runtime does not hold"""


class InfiniteArithmeticError(PiecewiseError, TypeError):
    """Arithmetic was attempted on the INFINITE side distance"""
