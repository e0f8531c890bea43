"""MiniLang: a small imperative language used to produce block spectra
from real executions."""

from .ast import Program
from .cfg import BasicBlock, ProgramFlowGraph, build_cfg
from .interpreter import (
    DEFAULT_FUEL,
    MiniLangRuntimeError,
    NonTerminationError,
    RunTrace,
    TestCase,
    build_spectrum,
    normalize_output,
    run_suite,
    run_traced,
)
from .parser import MiniLangError, MiniLangSyntaxError, UseBeforeAssignError, parse
from .suite import SuiteFormatError, parse_suite, read_suite

__all__ = [
    "BasicBlock", "DEFAULT_FUEL", "MiniLangError", "MiniLangRuntimeError",
    "MiniLangSyntaxError", "NonTerminationError", "Program", "ProgramFlowGraph",
    "RunTrace", "SuiteFormatError", "TestCase", "UseBeforeAssignError",
    "build_cfg", "build_spectrum", "normalize_output", "parse", "parse_suite",
    "read_suite", "run_suite", "run_traced",
]
