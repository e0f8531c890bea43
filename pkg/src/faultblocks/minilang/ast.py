"""Syntax tree for MiniLang.

Statements carry ``sid``, their position in a preorder walk of the program;
the flow graph and the interpreter both key on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


@dataclass(frozen=True)
class Pos:
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


# -- expressions ---------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    pos: Pos


@dataclass(frozen=True)
class Var:
    name: str
    pos: Pos


@dataclass(frozen=True)
class Index:
    array: Var
    index: "Expr"
    pos: Pos


@dataclass(frozen=True)
class Call:
    func: str  # "len" or "array"
    arg: "Expr"
    pos: Pos


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Expr"
    pos: Pos


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"
    pos: Pos


Expr = Union[Num, Var, Index, Call, Unary, Binary]


# -- statements ----------------------------------------------------------------

@dataclass(eq=False)
class Stmt:
    pos: Pos
    sid: int = field(default=-1, init=False)


@dataclass(eq=False)
class Assign(Stmt):
    target: Union[Var, Index] = None
    value: Expr = None


@dataclass(eq=False)
class Print(Stmt):
    args: tuple = ()


@dataclass(eq=False)
class If(Stmt):
    cond: Expr = None
    then: list = field(default_factory=list)
    orelse: list = field(default_factory=list)


@dataclass(eq=False)
class While(Stmt):
    cond: Expr = None
    body: list = field(default_factory=list)


@dataclass(eq=False)
class For(Stmt):
    """``for (init; cond; step) body``.

    The header is a single statement: it runs ``init`` when entered from
    above and ``step`` when re-entered from the end of the body, then tests
    ``cond``.
    """

    init: Assign = None
    cond: Expr = None
    step: Assign = None
    body: list = field(default_factory=list)


BRANCHES = (If, While, For)


@dataclass(eq=False)
class Program:
    inputs: tuple[str, ...]
    body: list
    statements: list = field(default_factory=list)

    def __post_init__(self):
        if not self.statements:
            self.statements = list(walk(self.body))
            for i, s in enumerate(self.statements):
                s.sid = i

    def __len__(self) -> int:
        return len(self.statements)


def children(stmt: Stmt) -> list[list]:
    if isinstance(stmt, If):
        return [stmt.then, stmt.orelse]
    if isinstance(stmt, (While, For)):
        return [stmt.body]
    return []


def walk(stmts):
    """Yield statements in preorder (a header before its bodies)."""
    for s in stmts:
        yield s
        for body in children(s):
            yield from walk(body)
