"""Tree-walking interpreter that records which basic blocks a run enters."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from ..spectrum import BinaryVector, SpectrumMatrix
from .ast import Assign, Binary, Call, For, If, Index, Num, Print, Program, Unary, Var, While
from .cfg import ProgramFlowGraph
from .parser import MiniLangError

DEFAULT_FUEL = 1_000_000

Value = Union[int, list]


class MiniLangRuntimeError(MiniLangError):
    pass


class NonTerminationError(MiniLangError):
    """Fuel ran out. ``trace`` holds the hits and output collected so far."""

    def __init__(self, fuel: int, trace: "RunTrace | None" = None):
        self.fuel = fuel
        self.trace = trace
        super().__init__(f"no termination within {fuel} steps")


class _OutOfFuel(Exception):
    pass


@dataclass(frozen=True)
class TestCase:
    inputs: Mapping[str, Value]
    expected_output: str
    name: str = ""

    __test__ = False  # keep pytest from collecting this

    def __post_init__(self):
        if not self.expected_output:
            raise ValueError("expected_output must be non-empty")


@dataclass(frozen=True)
class RunTrace:
    hits: BinaryVector
    observed_output: str
    error: int
    status: str = "ok"  # "ok", "runtime-error" or "fuel-exhausted"
    message: str = ""
    name: str = ""


def normalize_output(text: str) -> str:
    """Strip trailing whitespace per line and trailing blank lines."""
    return "\n".join(line.rstrip() for line in text.rstrip().splitlines())


def outputs_match(observed: str, expected: str) -> bool:
    return normalize_output(observed) == normalize_output(expected)


def _fmt(value: Value) -> str:
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    return str(value)


def _trunc_div(a: int, b: int) -> int:
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b >= 0) else -q


@dataclass
class _Machine:
    cfg: ProgramFlowGraph
    env: dict
    fuel: int
    hits: list = field(default_factory=list)
    out: list = field(default_factory=list)

    def tick(self, stmt) -> None:
        if self.fuel <= 0:
            raise _OutOfFuel
        self.fuel -= 1
        self.hits[self.cfg.block_of[stmt.sid]] = 1

    def error(self, msg, pos):
        raise MiniLangRuntimeError(msg, pos)

    # -- expressions --

    def int_of(self, expr) -> int:
        v = self.eval(expr)
        if not isinstance(v, int):
            self.error("expected an integer, got an array", expr.pos)
        return v

    def array_of(self, var: Var) -> list:
        v = self.env[var.name]
        if not isinstance(v, list):
            self.error(f"{var.name!r} is not an array", var.pos)
        return v

    def slot(self, expr: Index) -> tuple[list, int]:
        arr = self.array_of(expr.array)
        i = self.int_of(expr.index)
        if not 0 <= i < len(arr):
            self.error(f"index {i} out of range for {expr.array.name!r} of length {len(arr)}", expr.pos)
        return arr, i

    def eval(self, expr) -> Value:
        if isinstance(expr, Num):
            return expr.value
        if isinstance(expr, Var):
            return self.env[expr.name]
        if isinstance(expr, Index):
            arr, i = self.slot(expr)
            return arr[i]
        if isinstance(expr, Call):
            if expr.func == "len":
                v = self.eval(expr.arg)
                if not isinstance(v, list):
                    self.error("len() of an integer", expr.pos)
                return len(v)
            n = self.int_of(expr.arg)
            if n < 0:
                self.error("array() of negative length", expr.pos)
            return [0] * n
        if isinstance(expr, Unary):
            v = self.int_of(expr.operand)
            return -v if expr.op == "-" else int(not v)
        return self.binary(expr)

    def binary(self, e: Binary) -> int:
        op = e.op
        if op == "&&":
            return int(bool(self.int_of(e.left)) and bool(self.int_of(e.right)))
        if op == "||":
            return int(bool(self.int_of(e.left)) or bool(self.int_of(e.right)))
        a, b = self.int_of(e.left), self.int_of(e.right)
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        if op == "*":
            return a * b
        if op == "/":
            if b == 0:
                self.error("division by zero", e.pos)
            return _trunc_div(a, b)
        return int({
            "==": a == b, "!=": a != b, "<": a < b,
            "<=": a <= b, ">": a > b, ">=": a >= b,
        }[op])

    # -- statements --

    def assign(self, s: Assign) -> None:
        v = self.eval(s.value)
        if isinstance(s.target, Var):
            self.env[s.target.name] = list(v) if isinstance(v, list) else v
        else:
            if not isinstance(v, int):
                self.error("cannot store an array in an array element", s.pos)
            arr, i = self.slot(s.target)
            arr[i] = v

    def run(self, stmts) -> None:
        for s in stmts:
            self.tick(s)
            if isinstance(s, Assign):
                self.assign(s)
            elif isinstance(s, Print):
                self.out.append(" ".join(_fmt(self.eval(a)) for a in s.args) + "\n")
            elif isinstance(s, If):
                self.run(s.then if self.int_of(s.cond) else s.orelse)
            elif isinstance(s, While):
                while self.int_of(s.cond):
                    self.run(s.body)
                    self.tick(s)
            elif isinstance(s, For):
                self.assign(s.init)
                while self.int_of(s.cond):
                    self.run(s.body)
                    self.tick(s)
                    self.assign(s.step)


def _bind_inputs(program: Program, inputs: Mapping[str, Value]) -> dict:
    missing = set(program.inputs) - set(inputs)
    extra = set(inputs) - set(program.inputs)
    if missing or extra:
        parts = []
        if missing:
            parts.append("missing inputs " + ", ".join(sorted(missing)))
        if extra:
            parts.append("undeclared inputs " + ", ".join(sorted(extra)))
        raise ValueError("; ".join(parts))
    return {k: list(v) if isinstance(v, (list, tuple)) else int(v) for k, v in inputs.items()}


def run_traced(
    program: Program,
    cfg: ProgramFlowGraph,
    test: TestCase,
    fuel: int = DEFAULT_FUEL,
) -> RunTrace:
    """Run ``program`` on one test case and record block hits.

    A runtime error yields a failing trace (``error == 1``) with the hits
    collected up to the fault. Running out of fuel raises
    :class:`NonTerminationError` carrying the partial, failing trace.
    Missing or undeclared inputs raise ``ValueError``.
    """
    if fuel <= 0:
        raise ValueError("fuel must be positive")
    m = _Machine(cfg, _bind_inputs(program, test.inputs), fuel)
    m.hits = [0] * len(cfg.blocks)
    status, message = "ok", ""
    try:
        m.run(program.body)
    except MiniLangRuntimeError as exc:
        status, message = "runtime-error", str(exc)
    except _OutOfFuel:
        trace = RunTrace(BinaryVector(m.hits), "".join(m.out), 1,
                         "fuel-exhausted", f"no termination within {fuel} steps", test.name)
        raise NonTerminationError(fuel, trace) from None

    observed = "".join(m.out)
    error = int(status != "ok" or not outputs_match(observed, test.expected_output))
    return RunTrace(BinaryVector(m.hits), observed, error, status, message, test.name)


def run_suite(program, cfg, tests, fuel: int = DEFAULT_FUEL) -> list[RunTrace]:
    """Run every test; non-terminating runs are kept as failing traces."""
    traces = []
    for t in tests:
        try:
            traces.append(run_traced(program, cfg, t, fuel))
        except NonTerminationError as exc:
            traces.append(exc.trace)
    return traces


def build_spectrum(traces, labels=None) -> SpectrumMatrix:
    traces = list(traces)
    if not traces:
        raise ValueError("no traces to build a spectrum from")
    width = len(traces[0].hits)
    for t in traces:
        if len(t.hits) != width:
            raise ValueError(f"inconsistent block counts: {len(t.hits)} != {width}")
    return SpectrumMatrix([t.hits for t in traces], [t.error for t in traces], labels)
