"""Expressions over the elementary values of a vague partition.

Surface syntax::

    expr   := expr "|" term | term
    term   := term "&" factor | factor
    factor := "!" factor | "not" factor | "(" expr ")" | "bot" | "top" | NAME

``!``/``not`` binds tighter than ``&``, which binds tighter than ``|``; both
binary operators associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, TypeVar, Union

from lark import Lark, Transformer
from lark.exceptions import (
    LarkError,
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
)

from vague_membership.errors import ConstructionError, ExprSyntaxError

KEYWORDS = frozenset({"bot", "top", "not"})
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

GRAMMAR = r"""
?start: or_expr

?or_expr: and_expr
    | or_expr "|" and_expr      -> disj

?and_expr: not_expr
    | and_expr "&" not_expr     -> conj

?not_expr: primary
    | "!" not_expr              -> neg
    | "not" not_expr            -> neg

?primary: "bot"                 -> bot
    | "top"                     -> top
    | IDENT                     -> atom
    | "(" or_expr ")"

IDENT: /[A-Za-z_][A-Za-z0-9_]*/

%import common.WS
%ignore WS
"""


class _Node:
    """Equality, hashing and text shared by the expression nodes.

    Comparison walks the tree with an explicit stack, so arbitrarily deep
    expressions compare and hash without hitting the recursion limit.
    """

    __slots__ = ()

    def _signature(self) -> tuple:
        tokens: list = []
        stack: list[_Node] = [self]
        while stack:
            node = stack.pop()
            if isinstance(node, Atom):
                tokens.append(("atom", node.name))
                continue
            tokens.append(type(node).__name__)
            stack.extend(reversed(children(node)))
        return tuple(tokens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Node):
            return NotImplemented
        return self is other or self._signature() == other._signature()

    def __hash__(self) -> int:
        return hash(self._signature())

    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True, eq=False)
class Bot(_Node):
    """The bottom value; every object has it to degree 0."""


@dataclass(frozen=True, eq=False)
class Top(_Node):
    """The top value; every object has it to degree 1."""


@dataclass(frozen=True, eq=False)
class Atom(_Node):
    """A block name of the partition."""

    name: str

    def __post_init__(self) -> None:
        if not _NAME.match(self.name) or self.name in KEYWORDS:
            raise ConstructionError(f"{self.name!r} is not a valid atom name")


@dataclass(frozen=True, eq=False)
class Neg(_Node):
    child: VagueExpr


@dataclass(frozen=True, eq=False)
class And(_Node):
    left: VagueExpr
    right: VagueExpr


@dataclass(frozen=True, eq=False)
class Or(_Node):
    left: VagueExpr
    right: VagueExpr


VagueExpr = Union[Bot, Top, Atom, Neg, And, Or]

T = TypeVar("T")


def children(e: VagueExpr) -> tuple[VagueExpr, ...]:
    """Direct operands of ``e``, left to right."""
    if isinstance(e, Neg):
        return (e.child,)
    if isinstance(e, (And, Or)):
        return (e.left, e.right)
    return ()


def fold_expr(
    e: VagueExpr,
    combine: Callable[[VagueExpr, list[T]], T],
    operands: Callable[[VagueExpr], tuple[VagueExpr, ...]] = children,
) -> T:
    """Post-order fold of ``e`` driven by an explicit stack.

    ``combine(node, values)`` receives the folded values of
    ``operands(node)`` in order; leaves get an empty list.
    """
    stack: list[tuple[VagueExpr, bool]] = [(e, False)]
    values: list[T] = []
    while stack:
        node, expanded = stack.pop()
        kids = operands(node)
        if kids and not expanded:
            stack.append((node, True))
            stack.extend((kid, False) for kid in reversed(kids))
            continue
        if kids:
            folded = values[-len(kids) :]
            del values[-len(kids) :]
        else:
            folded = []
        values.append(combine(node, folded))
    return values[0]


class _ToAst(Transformer):
    def bot(self, _children):
        return Bot()

    def top(self, _children):
        return Top()

    def atom(self, children):
        return Atom(str(children[0]))

    def neg(self, children):
        return Neg(children[0])

    def conj(self, children):
        return And(children[0], children[1])

    def disj(self, children):
        return Or(children[0], children[1])


_PARSER = Lark(GRAMMAR, parser="lalr", transformer=_ToAst())

_FRIENDLY = {"IDENT": "name", "$END": "end of input"}


def _describe(terminal: str) -> str:
    if terminal in _FRIENDLY:
        return _FRIENDLY[terminal]
    try:
        pattern = _PARSER.get_terminal(terminal).pattern
    except KeyError:
        return terminal
    return repr(pattern.value)


def _syntax_error(text: str, err: UnexpectedInput) -> ExprSyntaxError:
    if isinstance(err, UnexpectedToken):
        token = err.token
        if token.type == "$END":
            position, found = len(text), "end of input"
        else:
            position, found = token.start_pos or 0, repr(str(token))
        expected = err.expected
    elif isinstance(err, UnexpectedCharacters):
        position, found = err.pos_in_stream, repr(err.char)
        expected = err.allowed or set()
    elif isinstance(err, UnexpectedEOF):
        position, found = len(text), "end of input"
        expected = set(err.expected)
    else:
        position, found, expected = len(text), "input", set()
    return ExprSyntaxError(text, position, [_describe(t) for t in expected], found)


def parse(text: str) -> VagueExpr:
    """Parse ``text`` into an expression tree.

    Raises:
        ExprSyntaxError: With the offending position and the expected tokens.
    """
    try:
        return _PARSER.parse(text)
    except UnexpectedInput as err:
        raise _syntax_error(text, err) from None
    except LarkError as err:
        raise ExprSyntaxError(text, len(text), [], str(err)) from None


def atoms_of(e: VagueExpr) -> set[str]:
    """Distinct atom names in ``e``."""
    names: set[str] = set()
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            names.add(node.name)
        else:
            stack.extend(children(node))
    return names


def _precedence(e: VagueExpr) -> int:
    if isinstance(e, Or):
        return 1
    if isinstance(e, And):
        return 2
    if isinstance(e, Neg):
        return 3
    return 4


def _render(e: VagueExpr, texts: list[str]) -> str:
    if isinstance(e, Bot):
        return "bot"
    if isinstance(e, Top):
        return "top"
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Neg):
        (text,) = texts
        return "!" + (f"({text})" if _precedence(e.child) < 3 else text)
    level = _precedence(e)
    left, right = texts
    if _precedence(e.left) < level:
        left = f"({left})"
    if _precedence(e.right) <= level:
        right = f"({right})"
    symbol = " | " if isinstance(e, Or) else " & "
    return left + symbol + right


def format_expr(e: VagueExpr) -> str:
    """Canonical text with the fewest parentheses that parse back to ``e``."""
    return fold_expr(e, _render)


def as_expr(value: VagueExpr | str) -> VagueExpr:
    """Accept either an expression tree or its text."""
    return parse(value) if isinstance(value, str) else value
