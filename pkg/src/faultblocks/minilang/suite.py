"""Line-oriented test-suite files.

Records are separated by blank lines::

    # comment
    name S1
    input n=4
    input num=1,1,1,1
    expect 1 1 1 1
    expect 6 5 4 2

``input`` values are a single integer, or a comma-separated list (optionally
bracketed) for an array; ``[]`` is the empty array and ``[7]`` a one-element
array. Repeated ``expect`` lines are joined with newlines.
"""

from __future__ import annotations

import re

from .interpreter import TestCase

_INPUT_RE = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)=(.*)")
_INT_RE = re.compile(r"-?\d+")


class SuiteFormatError(ValueError):
    def __init__(self, message: str, record: int | None = None, lineno: int | None = None):
        self.record = record
        self.lineno = lineno
        where = []
        if record is not None:
            where.append(f"record {record}")
        if lineno is not None:
            where.append(f"line {lineno}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


def _parse_value(text: str):
    text = text.strip()
    bracketed = text.startswith("[") and text.endswith("]")
    if bracketed:
        text = text[1:-1].strip()
        if not text:
            return []
    parts = [p.strip() for p in text.split(",")]
    if not all(_INT_RE.fullmatch(p) for p in parts):
        raise ValueError(f"bad value list {text!r}")
    values = [int(p) for p in parts]
    if len(values) == 1 and not bracketed:
        return values[0]
    return values


def _records(text: str):
    record = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if not stripped:
            if record:
                yield record
                record = []
            continue
        record.append((lineno, line.rstrip("\r\n")))
    if record:
        yield record


def parse_suite(text: str) -> list[TestCase]:
    cases = []
    for index, record in enumerate(_records(text), start=1):
        name, inputs, expect = f"t{index}", {}, []
        for lineno, line in record:
            keyword, _, rest = line.strip().partition(" ")
            if keyword == "name":
                name = rest.strip()
            elif keyword == "input":
                m = _INPUT_RE.fullmatch(rest.strip())
                if m is None:
                    raise SuiteFormatError("expected 'input <name>=<values>'", index, lineno)
                if m.group(1) in inputs:
                    raise SuiteFormatError(f"duplicate input {m.group(1)!r}", index, lineno)
                try:
                    inputs[m.group(1)] = _parse_value(m.group(2))
                except ValueError as exc:
                    raise SuiteFormatError(str(exc), index, lineno) from None
            elif keyword == "expect":
                # keep inner spacing, only the separator after the keyword goes
                expect.append(line.lstrip()[len("expect"):].removeprefix(" "))
            else:
                raise SuiteFormatError(f"unknown directive {keyword!r}", index, lineno)
        if not expect or not "\n".join(expect).strip():
            raise SuiteFormatError(f"test {name!r} has no expected output", index, record[0][0])
        cases.append(TestCase(inputs, "\n".join(expect), name))
    if not cases:
        raise SuiteFormatError("no test cases")
    return cases


def read_suite(path) -> list[TestCase]:
    with open(path, encoding="utf-8") as fh:
        return parse_suite(fh.read())
