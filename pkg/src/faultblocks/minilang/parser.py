"""Tokenizer, recursive-descent parser and definite-assignment check."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ast import (
    Assign, Binary, Call, For, If, Index, Num, Pos, Print, Program, Unary, Var, While,
)

KEYWORDS = {"input", "if", "else", "while", "for", "print", "len", "array"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>//[^\n]*)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>==|!=|<=|>=|&&|\|\||[-+*/<>=!(){}\[\];,])
    """,
    re.VERBOSE,
)


class MiniLangError(Exception):
    def __init__(self, message: str, pos: Pos | None = None):
        self.pos = pos
        self.message = message
        super().__init__(f"{pos}: {message}" if pos else message)


class MiniLangSyntaxError(MiniLangError):
    def __init__(self, message: str, pos: Pos, expected=()):
        self.expected = frozenset(expected)
        if self.expected:
            message += " (expected " + ", ".join(sorted(repr(e) for e in self.expected)) + ")"
        super().__init__(message, pos)


class UseBeforeAssignError(MiniLangError):
    def __init__(self, name: str, pos: Pos):
        self.name = name
        super().__init__(f"variable {name!r} may be used before assignment", pos)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "kw", "op", "eof"
    text: str
    pos: Pos


def tokenize(source: str) -> list[Token]:
    tokens = []
    line, line_start, i = 1, 0, 0
    while i < len(source):
        m = _TOKEN_RE.match(source, i)
        if m is None:
            raise MiniLangSyntaxError(
                f"unexpected character {source[i]!r}", Pos(line, i - line_start + 1)
            )
        kind, text = m.lastgroup, m.group()
        pos = Pos(line, i - line_start + 1)
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind == "name" and text in KEYWORDS:
            tokens.append(Token("kw", text, pos))
        elif kind in ("num", "name", "op"):
            tokens.append(Token(kind, text, pos))
        i = m.end()
    tokens.append(Token("eof", "", Pos(line, i - line_start + 1)))
    return tokens


# binary operator precedence, loosest first
_LEVELS = [("||",), ("&&",), ("==", "!=", "<", "<=", ">", ">="), ("+", "-"), ("*", "/")]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected) -> None:
        tok = self.tok
        where = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise MiniLangSyntaxError(f"syntax error at {where}", tok.pos, expected)

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "kw") and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail({text})
        tok = self.tok
        self.i += 1
        return tok

    def name(self) -> Token:
        if self.tok.kind != "name":
            self.fail({"<identifier>"})
        tok = self.tok
        self.i += 1
        return tok

    # -- program / statements --

    def program(self) -> Program:
        inputs = []
        while self.at("input"):
            self.i += 1
            inputs.append(self.name().text)
            while self.at(","):
                self.i += 1
                inputs.append(self.name().text)
            self.expect(";")
        if len(set(inputs)) != len(inputs):
            raise MiniLangSyntaxError("duplicate input name", self.tokens[0].pos)
        body = []
        while self.tok.kind != "eof":
            body.append(self.statement())
        if not body:
            self.fail({"<statement>"})
        return Program(tuple(inputs), body)

    def block(self) -> list:
        self.expect("{")
        body = []
        while not self.at("}"):
            if self.tok.kind == "eof":
                self.fail({"}"})
            body.append(self.statement())
        self.i += 1
        return body

    def statement(self):
        tok = self.tok
        if self.at("if"):
            self.i += 1
            self.expect("(")
            cond = self.expr()
            self.expect(")")
            then = self.block()
            orelse = []
            if self.at("else"):
                self.i += 1
                orelse = [self.statement()] if self.at("if") else self.block()
            return If(tok.pos, cond, then, orelse)
        if self.at("while"):
            self.i += 1
            self.expect("(")
            cond = self.expr()
            self.expect(")")
            return While(tok.pos, cond, self.block())
        if self.at("for"):
            self.i += 1
            self.expect("(")
            init = self.assignment()
            self.expect(";")
            cond = self.expr()
            self.expect(";")
            step = self.assignment()
            self.expect(")")
            return For(tok.pos, init, cond, step, self.block())
        if self.at("print"):
            self.i += 1
            self.expect("(")
            args = []
            if not self.at(")"):
                args.append(self.expr())
                while self.at(","):
                    self.i += 1
                    args.append(self.expr())
            self.expect(")")
            self.expect(";")
            return Print(tok.pos, tuple(args))
        if tok.kind == "name":
            stmt = self.assignment()
            self.expect(";")
            return stmt
        self.fail({"if", "while", "for", "print", "<identifier>"})

    def assignment(self) -> Assign:
        tok = self.name()
        target = Var(tok.text, tok.pos)
        if self.at("["):
            self.i += 1
            idx = self.expr()
            self.expect("]")
            target = Index(target, idx, tok.pos)
        self.expect("=")
        return Assign(tok.pos, target, self.expr())

    # -- expressions --

    def expr(self, level: int = 0):
        if level == len(_LEVELS):
            return self.unary()
        left = self.expr(level + 1)
        while self.tok.kind == "op" and self.tok.text in _LEVELS[level]:
            op = self.tok
            self.i += 1
            left = Binary(op.text, left, self.expr(level + 1), op.pos)
            if level == 2 and self.tok.kind == "op" and self.tok.text in _LEVELS[2]:
                # a < b < c is almost always a mistake
                self.fail({")", ";", "&&", "||"})
        return left

    def unary(self):
        tok = self.tok
        if self.at("-") or self.at("!"):
            self.i += 1
            return Unary(tok.text, self.unary(), tok.pos)
        return self.primary()

    def primary(self):
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return Num(int(tok.text), tok.pos)
        if tok.kind == "name":
            self.i += 1
            var = Var(tok.text, tok.pos)
            if self.at("["):
                self.i += 1
                idx = self.expr()
                self.expect("]")
                return Index(var, idx, tok.pos)
            return var
        if self.at("len") or self.at("array"):
            self.i += 1
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Call(tok.text, arg, tok.pos)
        if self.at("("):
            self.i += 1
            e = self.expr()
            self.expect(")")
            return e
        self.fail({"<number>", "<identifier>", "(", "-", "!", "len", "array"})


def parse(source: str) -> Program:
    """Parse MiniLang source and check every variable is assigned before use.

    Raises :class:`MiniLangSyntaxError` or :class:`UseBeforeAssignError`.
    """
    program = _Parser(tokenize(source)).program()
    check_assignments(program)
    return program


# -- definite assignment -------------------------------------------------------

def _uses(expr, assigned: frozenset) -> None:
    if isinstance(expr, Num):
        return
    if isinstance(expr, Var):
        if expr.name not in assigned:
            raise UseBeforeAssignError(expr.name, expr.pos)
    elif isinstance(expr, Index):
        _uses(expr.array, assigned)
        _uses(expr.index, assigned)
    elif isinstance(expr, Call):
        _uses(expr.arg, assigned)
    elif isinstance(expr, Unary):
        _uses(expr.operand, assigned)
    else:
        _uses(expr.left, assigned)
        _uses(expr.right, assigned)


def _assign(stmt: Assign, assigned: frozenset) -> frozenset:
    _uses(stmt.value, assigned)
    if isinstance(stmt.target, Index):
        _uses(stmt.target, assigned)
        return assigned
    return assigned | {stmt.target.name}


def _check_body(stmts, assigned: frozenset) -> frozenset:
    for s in stmts:
        if isinstance(s, Assign):
            assigned = _assign(s, assigned)
        elif isinstance(s, Print):
            for a in s.args:
                _uses(a, assigned)
        elif isinstance(s, If):
            _uses(s.cond, assigned)
            assigned = _check_body(s.then, assigned) & _check_body(s.orelse, assigned)
        elif isinstance(s, While):
            _uses(s.cond, assigned)
            _check_body(s.body, assigned)
        elif isinstance(s, For):
            assigned = _assign(s.init, assigned)
            _uses(s.cond, assigned)
            _assign(s.step, _check_body(s.body, assigned))
    return assigned


def check_assignments(program: Program) -> None:
    _check_body(program.body, frozenset(program.inputs))
