import pytest

from faultblocks.minilang import MiniLangSyntaxError, UseBeforeAssignError, parse
from faultblocks.minilang.ast import Assign, For, If, Print, While


def test_two_statements():
    p = parse("x = 1; print(x);")
    assert len(p) == 2
    assert isinstance(p.statements[0], Assign)
    assert isinstance(p.statements[1], Print)
    assert p.inputs == ()


def test_error_at_end_of_input():
    with pytest.raises(MiniLangSyntaxError) as info:
        parse("if (x >")
    err = info.value
    assert "end of input" in str(err)
    assert (err.pos.line, err.pos.col) == (1, 8)
    assert "<identifier>" in err.expected


def test_error_position_multiline():
    with pytest.raises(MiniLangSyntaxError) as info:
        parse("x = 1;\ny = x +;\n")
    assert (info.value.pos.line, info.value.pos.col) == (2, 8)
    assert "';'" in str(info.value)


@pytest.mark.parametrize("src", [
    "",
    "input a;",
    "x = 1",
    "x = $;",
    "if (1) x = 1;",
    "for (i = 0; i < 3) { }",
    "x = 1 < 2 < 3;",
    "input a, a; print(a);",
    "print(1;",
])
def test_syntax_errors(src):
    with pytest.raises(MiniLangSyntaxError):
        parse(src)


def test_sort_fixture_parses(sort_program):
    assert sort_program.inputs == ("number", "num", "den")
    kinds = [type(s).__name__ for s in sort_program.statements]
    assert kinds == ["Assign", "For", "For", "If", "Assign", "Assign", "Assign", "Print", "Print"]
    assert [s.sid for s in sort_program.statements] == list(range(9))


def test_preorder_numbering():
    p = parse("x = 1; while (x < 3) { if (x == 2) { print(x); } x = x + 1; } print(0);")
    assert [type(s) for s in p.statements] == [Assign, While, If, Print, Assign, Print]


def test_else_if_chain():
    p = parse("x = 2; if (x == 1) { print(1); } else if (x == 2) { print(2); } else { print(3); }")
    outer = p.statements[1]
    assert isinstance(outer.orelse[0], If)


def test_precedence():
    p = parse("x = 1 + 2 * 3 - -4; y = !(x == 11) || x > 0 && x < 2;")
    value = p.statements[0].value
    assert value.op == "-" and value.left.op == "+" and value.left.right.op == "*"
    assert p.statements[1].value.op == "||"


@pytest.mark.parametrize("src, name", [
    ("print(y);", "y"),
    ("if (1) { y = 1; } print(y);", "y"),
    ("while (0) { z = 1; } print(z);", "z"),
    ("a[0] = 1;", "a"),
    ("x = x + 1;", "x"),
    ("for (i = 0; i < 3; i = i + 1) { t = i; } print(t);", "t"),
    ("for (i = 0; i < 3; i = k) { k = 1; if (i) { j = 1; } } ", None),
])
def test_use_before_assign(src, name):
    if name is None:
        parse(src)  # k is assigned on every path through the body
        return
    with pytest.raises(UseBeforeAssignError) as info:
        parse(src)
    assert info.value.name == name


def test_definitely_assigned_programs():
    parse("if (1) { y = 1; } else { y = 2; } print(y);")
    parse("for (i = 0; i < 3; i = i + 1) { } print(i);")
    parse("input a; b = array(len(a)); b[0] = a[0]; print(b);")
    p = parse("input n; for (i = 0; i < n; i = i + 1) { x = i; }")
    assert isinstance(p.statements[0], For)
