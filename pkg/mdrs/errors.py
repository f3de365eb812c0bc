"""
Error hierarchy
오류 계층 및 CLI 종료 코드
Every anticipated failure derives from MDRSError and carries its CLI exit code.
"""

from typing import Optional


class MDRSError(Exception):
    """Base class for all library errors"""

    exit_code: int = 1

    def to_dict(self) -> dict:
        return {"error": self.__class__.__name__, "message": str(self)}


# Parameter errors (exit 2)

class ParameterError(MDRSError):
    """Invalid field or code parameters"""

    exit_code = 2


class NotPrime(ParameterError):
    pass


class FieldTooLarge(ParameterError):
    pass


class FieldMismatch(ParameterError):
    """Operands belong to different fields"""
    pass


class DivisionByZero(ParameterError):
    pass


class EmptyRegion(ParameterError):
    """d > q^n leaves no admissible coefficient"""
    pass


class UnsupportedDimension(ParameterError):
    pass


class InvalidComponent(ParameterError):
    pass


class InvalidShortening(ParameterError):
    pass


class SeedRequired(ParameterError):
    """Randomized command invoked without --seed while MDRS_CI=1"""
    pass


class InvalidSettings(ParameterError):
    """Malformed MDRS_* environment value"""
    pass


# Shape errors (exit 3)

class LengthMismatch(MDRSError):
    exit_code = 3


class ArityMismatch(LengthMismatch):
    """Evaluation point has the wrong number of coordinates"""
    pass


class SymbolOutOfRange(LengthMismatch, ValueError):
    """Symbol code outside [0, q)"""
    pass


class WordFileError(LengthMismatch):
    """Malformed message / codeword / received-word file"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["line"] = self.line
        data["column"] = self.column
        return data


# Decoder errors

class DecodeError(MDRSError):
    pass


class RankDeficient(DecodeError):
    """Unerased coordinates do not determine the message"""

    exit_code = 4

    def __init__(self, message: str, erased: Optional[list[int]] = None, rank: Optional[int] = None):
        super().__init__(message)
        self.erased = erased or []
        self.rank = rank

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["erased"] = self.erased
        data["rank"] = self.rank
        return data


class Inconsistent(DecodeError):
    """Unerased symbols are not the restriction of any codeword"""

    exit_code = 5


# Verifier errors (exit 6)

class BudgetExceeded(MDRSError):
    exit_code = 6

    def __init__(self, message: str, required: int = 0, budget: int = 0):
        super().__init__(message)
        self.required = required
        self.budget = budget

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["required"] = self.required
        data["budget"] = self.budget
        return data
