"""Exception hierarchy shared by every module.

Each exception carries the CLI exit code it maps to: 2 for invalid input,
3 for an exhausted polarization search, 4 for an internal integrality bug.
"""

from __future__ import annotations


class FlagBottError(Exception):
    exit_code = 2


class InvalidType(FlagBottError, ValueError):
    pass


class InvalidWeight(FlagBottError, ValueError):
    pass


class RankMismatch(FlagBottError, ValueError):
    pass


class IndexOutOfRange(FlagBottError, IndexError):
    pass


class NotDominant(FlagBottError, ValueError):
    pass


class WrongArity(FlagBottError, ValueError):
    pass


class GroupTooLarge(FlagBottError):
    pass


class RankTooSmall(FlagBottError, ValueError):
    pass


class NoMixedSigns(FlagBottError, ValueError):
    pass


class ZeroCoordinate(FlagBottError, ValueError):
    pass


class DegenerateSignPattern(FlagBottError, ValueError):
    pass


class SearchExhausted(FlagBottError):
    """No very ample H in the search box gives the line bundle positive degree."""

    exit_code = 3

    def __init__(self, message, best_H=None, best_degree=None):
        super().__init__(message)
        self.best_H = best_H
        self.best_degree = best_degree


class IntegralityError(FlagBottError, ArithmeticError):
    """An exact division left a remainder. Always a bug, never bad input."""

    exit_code = 4
