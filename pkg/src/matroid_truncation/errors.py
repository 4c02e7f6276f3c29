"""Exception hierarchy.

Every domain error carries a short ``code`` which the command-line front end
prints as ``ERROR <code>: <message>``.
"""


class TruncationError(Exception):
    code = "Error"


class FieldMismatch(TruncationError, TypeError):
    code = "FieldMismatch"


class DivisionByZero(TruncationError, ZeroDivisionError):
    code = "DivisionByZero"


class ZeroElement(TruncationError, ValueError):
    code = "ZeroElement"


class InfiniteField(TruncationError, ValueError):
    code = "InfiniteField"


class NoSuchElement(TruncationError, ValueError):
    code = "NoSuchElement"


class NotIrreducible(TruncationError, ValueError):
    code = "NotIrreducible"


class DegreeTooLarge(TruncationError, ValueError):
    code = "DegreeTooLarge"


class ZeroScale(TruncationError, ValueError):
    code = "ZeroScale"


class CharacteristicTooSmall(TruncationError, ValueError):
    code = "CharacteristicTooSmall"


class FieldTooSmall(TruncationError, ValueError):
    code = "FieldTooSmall"


class OrderTooSmall(TruncationError, ValueError):
    code = "OrderTooSmall"


class NotSquare(TruncationError, ValueError):
    code = "NotSquare"


class IndexOutOfRange(TruncationError, IndexError):
    code = "IndexOutOfRange"


class DimensionMismatch(TruncationError, ValueError):
    code = "DimensionMismatch"


class KExceedsN(TruncationError, ValueError):
    code = "KExceedsN"


class UnknownElement(TruncationError, KeyError):
    code = "UnknownElement"

    def __str__(self):
        return Exception.__str__(self)


class DependentInputSet(TruncationError, ValueError):
    code = "DependentInputSet"


class PQExceedsRank(TruncationError, ValueError):
    code = "PQExceedsRank"


class NotSubfamily(TruncationError, ValueError):
    code = "NotSubfamily"


class ParseError(TruncationError, ValueError):
    code = "ParseError"
