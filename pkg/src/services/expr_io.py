#!/usr/bin/env python3
"""
Expression Service for whitealg

This module parses bracket and tensor expressions, resolves generator aliases
against a schedule and prints elements and morphisms in canonical text form.

Grammar (whitespace insensitive)::

    Expr    := Term (('+' | '-') Term)*
    Term    := '-'? Rational ('*' Factor)? | '-'? Factor
    Factor  := Atom ('.' Atom)*
    Atom    := Gen | '[' Expr ',' Expr ']' | '(' Expr ')'
    Gen     := ('x' | 'chi' | 'xi' | 'b') Digits
    Rational:= Int ('/' PosInt)?
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

from src.errors import (
    EmptyInput,
    MixedAliases,
    UnbalancedBracket,
    UnexpectedToken,
    UnknownToken,
    ZeroDenominator,
)
from src.models.expression import (
    ALIAS_XI,
    Bracket,
    Expr,
    Generator,
    One,
    Product,
    Scale,
    Sum,
    Zero,
)
from src.models.lie_element import LieElement
from src.models.morphism import GradedMorphism
from src.models.schedule import GeneratorSchedule
from src.models.tensor_element import SuspendedElement, TensorElement, tensor_product
from src.models.words import Word, commutator, standard_factorization

logger = logging.getLogger(__name__)

NOTATION_WHITEHEAD = "whitehead"
NOTATION_SAMELSON = "samelson"

MAX_NESTING = 100
MAX_DIGITS = 1000

_GENERATOR_RE = re.compile(r"(chi|xi|x|b)([0-9]+)")
_DIGITS = "0123456789"
_PUNCTUATION = "[](),+-*/."
_CLOSERS = {"[": "]", "(": ")"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


class Tokenizer:
    """Splits expression text into tokens, each tagged with its offset."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.current: Optional[Token] = None

    def eof(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> Token:
        if self.current is None:
            self.current = self.read_next()
        return self.current

    def next(self) -> Token:
        token = self.peek()
        self.current = None
        return token

    def read_next(self) -> Token:
        while not self.eof() and self.text[self.pos].isspace():
            self.pos += 1
        if self.eof():
            return Token("eof", "", self.pos)

        start = self.pos
        ch = self.text[start]
        if ch in _DIGITS:
            end = start
            while end < len(self.text) and self.text[end] in _DIGITS:
                end += 1
            if end - start > MAX_DIGITS:
                raise UnknownToken("Number too long", start)
            self.pos = end
            return Token("int", self.text[start:end], start)
        if ch in _PUNCTUATION:
            self.pos += 1
            return Token(ch, ch, start)
        match = _GENERATOR_RE.match(self.text, start)
        if match and len(match.group(2)) > MAX_DIGITS:
            raise UnknownToken("Generator number too long", start)
        if match and int(match.group(2)) > 0:
            end = match.end()
            if end < len(self.text) and self.text[end].isalpha():
                raise UnknownToken(f"Unknown name {self.text[start:end + 1]!r}", start)
            self.pos = end
            return Token("gen", match.group(0), start)
        raise UnknownToken(f"Unexpected character {ch!r}", start)


class ExpressionParser:
    """Recursive descent parser for the expression grammar."""

    def __init__(self, text: str):
        self.tokens = Tokenizer(text)
        self.open_brackets: List[Token] = []
        self.aliases: Dict[str, int] = {}

    def parse(self) -> Expr:
        expr = self.parse_expr()
        token = self.tokens.peek()
        if token.kind in ("]", ")"):
            raise UnbalancedBracket(f"Unmatched {token.text!r}", token.position)
        if token.kind != "eof":
            raise UnexpectedToken(f"Unexpected {token.text!r}", token.position)
        return expr

    def expect(self, kind: str) -> Token:
        token = self.tokens.next()
        if token.kind == kind:
            return token
        if token.kind == "eof" and self.open_brackets:
            opener = self.open_brackets[-1]
            raise UnbalancedBracket(f"{opener.text!r} is never closed", opener.position)
        if token.kind in ("]", ")") and kind in ("]", ")"):
            raise UnbalancedBracket(f"Mismatched {token.text!r}", token.position)
        shown = token.text or "end of input"
        raise UnexpectedToken(f"Expected {kind!r} but found {shown!r}", token.position)

    def parse_expr(self) -> Expr:
        terms = [self.parse_term()]
        while self.tokens.peek().kind in ("+", "-"):
            sign = self.tokens.next().kind
            term = self.parse_term()
            terms.append(_negate(term) if sign == "-" else term)
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def parse_term(self) -> Expr:
        negative = False
        if self.tokens.peek().kind == "-":
            self.tokens.next()
            negative = True

        if self.tokens.peek().kind == "int":
            coefficient = self.parse_rational()
            if self.tokens.peek().kind == "*":
                self.tokens.next()
                node = self.parse_factor()
            else:
                node = One()
            if negative:
                coefficient = -coefficient
            if coefficient == 0:
                return Zero()
            if coefficient == 1:
                return node
            return Scale(coefficient, node)

        node = self.parse_factor()
        return _negate(node) if negative else node

    def parse_rational(self) -> Fraction:
        numerator = self.expect("int")
        if self.tokens.peek().kind != "/":
            return Fraction(int(numerator.text))
        self.tokens.next()
        denominator = self.expect("int")
        if int(denominator.text) == 0:
            raise ZeroDenominator("Denominator must be positive", denominator.position)
        return Fraction(int(numerator.text), int(denominator.text))

    def parse_factor(self) -> Expr:
        factors = [self.parse_atom()]
        while self.tokens.peek().kind == ".":
            self.tokens.next()
            factors.append(self.parse_atom())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def parse_atom(self) -> Expr:
        token = self.tokens.next()
        if token.kind == "gen":
            return self.make_generator(token)
        if token.kind in _CLOSERS:
            if len(self.open_brackets) >= MAX_NESTING:
                raise UnexpectedToken("Expression nested too deeply", token.position)
            self.open_brackets.append(token)
            if token.kind == "[":
                left = self.parse_expr()
                self.expect(",")
                right = self.parse_expr()
                node: Expr = Bracket(left, right)
            else:
                node = self.parse_expr()
            self.expect(_CLOSERS[token.kind])
            self.open_brackets.pop()
            return node
        if token.kind == "eof":
            if self.open_brackets:
                opener = self.open_brackets[-1]
                raise UnbalancedBracket(
                    f"{opener.text!r} is never closed", opener.position
                )
            raise UnexpectedToken("Unexpected end of input", token.position)
        if token.kind in ("]", ")") and not self.open_brackets:
            raise UnbalancedBracket(f"Unmatched {token.text!r}", token.position)
        raise UnexpectedToken(f"Unexpected {token.text!r}", token.position)

    def make_generator(self, token: Token) -> Generator:
        match = _GENERATOR_RE.fullmatch(token.text)
        alias, number = match.group(1), int(match.group(2))
        if self.aliases and alias not in self.aliases:
            first = next(iter(self.aliases))
            raise MixedAliases(
                f"Generator {token.text!r} mixes alias {alias!r} with {first!r}",
                token.position,
            )
        self.aliases.setdefault(alias, token.position)
        return Generator(alias, number)


def _negate(node: Expr) -> Expr:
    if isinstance(node, Zero):
        return node
    if isinstance(node, Scale):
        if node.coefficient == -1:
            return node.node
        return Scale(-node.coefficient, node.node)
    return Scale(Fraction(-1), node)


def parse_expr(text: Union[str, bytes]) -> Expr:
    """
    Parse a bracket or tensor expression.

    Args:
        text: Expression source

    Returns:
        The syntax tree

    Raises:
        EmptyInput: If the text is blank
        UnbalancedBracket, UnknownToken, UnexpectedToken, ZeroDenominator,
        MixedAliases: On malformed input, with the offending position
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise UnknownToken("Input is not valid UTF-8", e.start)
    if not isinstance(text, str):
        raise TypeError(f"Expected text, got {type(text).__name__}")
    if not text.strip():
        raise EmptyInput("Empty expression", 0)
    return ExpressionParser(text).parse()


def parse_morphism_spec(text: str) -> List[Tuple[Generator, Expr]]:
    """
    Parse ``"x3 -> x3 + [x1,x2]; x1 -> -x1"`` into (generator, image) pairs.

    Raises:
        EmptyInput: If no assignment is present
        UnexpectedToken: If an assignment lacks ``->`` or its left side is not a
            single generator
    """
    if not text or not text.strip():
        raise EmptyInput("Empty morphism specification", 0)
    assignments = []
    offset = 0
    for chunk in text.split(";"):
        if chunk.strip():
            if "->" not in chunk:
                raise UnexpectedToken("Assignment needs '->'", offset)
            lhs, rhs = chunk.split("->", 1)
            source = parse_expr(lhs)
            if not isinstance(source, Generator):
                raise UnexpectedToken("Left side must be one generator", offset)
            assignments.append((source, parse_expr(rhs)))
        offset += len(chunk) + 1
    if not assignments:
        raise EmptyInput("Empty morphism specification", 0)
    return assignments


def resolve_index(generator: Generator, schedule: GeneratorSchedule) -> int:
    """
    Map a generator leaf to its 1-based schedule index.

    ``xi`` names count Whitehead dimension; the other aliases count position.

    Raises:
        UnknownGenerator: If the schedule has no such generator
    """
    if generator.alias == ALIAS_XI:
        return schedule.index_of_whitehead_degree(generator.number)
    schedule.generator(generator.number)
    return generator.number


def expression_degree(expr: Expr, schedule: GeneratorSchedule) -> int:
    """
    Largest Samelson degree any term of the expression can reach.

    Brackets and products add the degrees of their operands, sums take the
    maximum. Cancellation is ignored, so the value bounds the evaluated degree.

    Raises:
        UnknownGenerator: If a leaf is not in the schedule
    """
    if isinstance(expr, Generator):
        return schedule.degree_of(resolve_index(expr, schedule))
    if isinstance(expr, Bracket):
        return expression_degree(expr.left, schedule) + expression_degree(
            expr.right, schedule
        )
    if isinstance(expr, Product):
        return sum(expression_degree(factor, schedule) for factor in expr.factors)
    if isinstance(expr, Sum):
        return max(
            (expression_degree(term, schedule) for term in expr.terms), default=0
        )
    if isinstance(expr, Scale):
        return expression_degree(expr.node, schedule)
    if isinstance(expr, (One, Zero)):
        return 0
    raise TypeError(f"Not an expression node: {expr!r}")


def evaluate_tensor(
    expr: Expr,
    schedule: GeneratorSchedule,
    leaf: Optional[Callable[[int], TensorElement]] = None,
) -> TensorElement:
    """
    Evaluate an expression in the tensor algebra.

    Brackets become commutators; the Koszul sign is +1 on even schedules.

    Args:
        expr: Syntax tree
        schedule: Schedule used to resolve generator names
        leaf: Image of generator ``i``; defaults to the letter ``b_i``

    Raises:
        UnknownGenerator: If a leaf is not in the schedule
    """
    leaf = leaf or (lambda index: TensorElement.generator(schedule, index))

    def walk(node: Expr) -> TensorElement:
        if isinstance(node, Generator):
            return leaf(resolve_index(node, schedule))
        if isinstance(node, Bracket):
            left, right = walk(node.left), walk(node.right)
            return TensorElement(
                schedule, tuple(commutator(left.vector, right.vector).items())
            )
        if isinstance(node, Sum):
            total = TensorElement.zero(schedule)
            for term in node.terms:
                total = total + walk(term)
            return total
        if isinstance(node, Scale):
            return walk(node.node) * node.coefficient
        if isinstance(node, Product):
            result = walk(node.factors[0])
            for factor in node.factors[1:]:
                result = tensor_product(result, walk(factor))
            return result
        if isinstance(node, One):
            return TensorElement.unit(schedule)
        if isinstance(node, Zero):
            return TensorElement.zero(schedule)
        raise TypeError(f"Not an expression node: {node!r}")

    return walk(expr)


def _coefficient_text(coefficient: Fraction) -> str:
    if coefficient.denominator == 1:
        return str(coefficient.numerator)
    return f"{coefficient.numerator}/{coefficient.denominator}"


def _join_terms(terms: List[Tuple[Fraction, str]]) -> str:
    """Render ``c*body`` pairs as ``a - 1/2*b + c``; an empty body is the scalar."""
    if not terms:
        return "0"
    parts = []
    for position, (coefficient, body) in enumerate(terms):
        magnitude = abs(coefficient)
        if not body:
            text = _coefficient_text(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{_coefficient_text(magnitude)}*{body}"
        if position == 0:
            parts.append(f"-{text}" if coefficient < 0 else text)
        else:
            parts.append(f" - {text}" if coefficient < 0 else f" + {text}")
    return "".join(parts)


def format_word(
    word: Word, schedule: GeneratorSchedule, notation: str = NOTATION_WHITEHEAD
) -> str:
    """Standard bracketing of a Lyndon word, e.g. ``[x1,[x1,x2]]``."""
    if notation not in (NOTATION_WHITEHEAD, NOTATION_SAMELSON):
        raise ValueError(f"Unknown notation: {notation}")
    if len(word) == 1:
        return schedule.generator(word[0]).name
    left, right = standard_factorization(word)
    inner = (
        f"{format_word(left, schedule, notation)},"
        f"{format_word(right, schedule, notation)}"
    )
    return f"<{inner}>" if notation == NOTATION_SAMELSON else f"[{inner}]"


def format_lie(elem: LieElement, notation: str = NOTATION_WHITEHEAD) -> str:
    """
    Canonical text of a Lie element.

    Terms follow basis order (degree, then length, then word). Whitehead notation
    reparses; Samelson notation uses angle brackets and is for display only.
    """
    return _join_terms(
        [(c, format_word(b.word, elem.schedule, notation)) for b, c in elem.terms]
    )


def format_tensor(elem: TensorElement) -> str:
    """Canonical text of a tensor element, e.g. ``b2 - 1/2*b1.b1``."""
    return _join_terms(
        [(c, ".".join(f"b{letter}" for letter in word)) for word, c in elem.terms]
    )


def format_suspended(elem: SuspendedElement) -> str:
    """Text of a suspension class, e.g. ``beta3``."""
    return _join_terms([(c, f"beta{index}") for index, c in elem.terms])


IDENTITY_TEXT = "id"


def format_morphism(morphism: GradedMorphism) -> str:
    """
    Text of a morphism listing the generators it moves, e.g. ``x3 -> x3 + [x1,x2]``.

    The identity prints as ``id``. The text reparses with ``parse_morphism_spec``.
    """
    moved = []
    for index, image in morphism.images:
        if image != morphism.domain.generator(index):
            name = morphism.domain.truncated.generator(index).name
            moved.append(f"{name} -> {format_lie(image)}")
    return "; ".join(moved) if moved else IDENTITY_TEXT
