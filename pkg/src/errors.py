#!/usr/bin/env python3
"""
Exception hierarchy for whitealg.

Every error raised on purpose by the engine derives from WhiteAlgError, which is
itself a ValueError so callers that only know about bad input still catch it.
"""

from typing import Optional


class WhiteAlgError(ValueError):
    """Base class for all computation errors."""


class DegreeCapExceeded(WhiteAlgError):
    """A requested degree lies above the configured Samelson degree cap."""


class OddParityUnsupported(WhiteAlgError):
    """A generator with odd Samelson degree was requested."""


class MixedSchedules(WhiteAlgError):
    """Two operands live over different generator schedules."""


class UnknownGenerator(WhiteAlgError):
    """A generator name or index does not belong to the schedule."""


class NotALieElement(WhiteAlgError):
    """A tensor element is not in the image of the free Lie algebra."""


class NonHomogeneous(WhiteAlgError):
    """An operation that needs a homogeneous element received a mixed one."""


class TooFewIndices(WhiteAlgError):
    """An iterated commutator needs at least two indices."""


class IndexOutOfRange(WhiteAlgError):
    """A generator index lies outside the truncated algebra."""


class ZeroScalar(WhiteAlgError):
    """A scaling automorphism received a zero scalar."""


class ScalingInZMode(WhiteAlgError):
    """A scalar other than +1/-1 was used on the integral lattice."""


class DegreeMismatch(WhiteAlgError):
    """An image or translation does not have the degree it must have."""


class NotDecomposable(WhiteAlgError):
    """A translation term contains an indecomposable component."""


class ZeroAlpha(WhiteAlgError):
    """The coefficient of a unipotent translation is zero."""


class MissingAlpha(WhiteAlgError):
    """No alpha was supplied for a decomposable basis element."""


class NotInvertible(WhiteAlgError):
    """A morphism is not an automorphism of its truncated algebra."""


class NonDiagonalLinearPart(WhiteAlgError):
    """Several generators share one degree, so the linear part is not diagonal."""


class LatticeViolation(WhiteAlgError):
    """Non-integral data was supplied in Z-lattice mode."""


class InvariantViolation(WhiteAlgError):
    """A computed result failed one of its own postconditions."""


class SchemaMismatch(WhiteAlgError):
    """A JSON document does not follow the whitealg/1 schema."""


class MalformedJson(WhiteAlgError):
    """A JSON document could not be decoded at all."""


class ExprSyntaxError(WhiteAlgError):
    """Base class for parse errors; carries the offending position."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnbalancedBracket(ExprSyntaxError):
    """An opening bracket or parenthesis is never closed, or vice versa."""


class UnknownToken(ExprSyntaxError):
    """A character sequence is not part of the expression language."""


class EmptyInput(ExprSyntaxError):
    """The expression text is empty or blank."""


class ZeroDenominator(ExprSyntaxError):
    """A rational literal has denominator zero."""


class UnexpectedToken(ExprSyntaxError):
    """A valid token appears where the grammar does not allow it."""


class MixedAliases(ExprSyntaxError):
    """An expression mixes generator aliases such as x and b."""


class UsageError(Exception):
    """Invalid command-line usage; the CLI exits with status 2."""
