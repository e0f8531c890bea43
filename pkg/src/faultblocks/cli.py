"""Command-line entry point: ``faultblocks run|localize|eval|report``.

Exit status is 0 on success (warnings go to stderr) and 2 on any usage or
data error.
"""

from __future__ import annotations

import sys

import click

from .localizer import SuspiciousnessReport, evaluate_rank, localize
from .minilang import (
    DEFAULT_FUEL, MiniLangError, SuiteFormatError, build_cfg, build_spectrum,
    parse, parse_suite, run_suite,
)
from .spectrum import SpectrumFormatError, dumps_csv, loads_csv


class DataError(click.ClickException):
    exit_code = 2


def _read(path: str) -> str:
    try:
        with click.open_file(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        with click.open_file(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from None


def _load_spectrum(path: str):
    try:
        return loads_csv(_read(path))
    except SpectrumFormatError as exc:
        raise DataError(f"{path}: {exc}") from None


def _warn(msg: str) -> None:
    click.echo(f"warning: {msg}", err=True)


@click.group()
def main():
    """Rank basic blocks of a program by suspiciousness."""


@main.command()
@click.argument("program", type=click.Path(exists=True, dir_okay=False))
@click.argument("suite", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", default="-", show_default=True, help="Spectrum CSV destination.")
@click.option("--fuel", type=click.IntRange(min=1), default=DEFAULT_FUEL, show_default=True,
              help="Step limit per run.")
def run(program, suite, output, fuel):
    """Run a MiniLang PROGRAM on every test in SUITE and write the spectrum CSV."""
    try:
        prog = parse(_read(program))
    except MiniLangError as exc:
        raise DataError(f"{program}:{exc}") from None
    try:
        cases = parse_suite(_read(suite))
    except SuiteFormatError as exc:
        raise DataError(f"{suite}: {exc}") from None

    cfg = build_cfg(prog)
    try:
        traces = run_suite(prog, cfg, cases, fuel)
    except ValueError as exc:
        raise DataError(f"{suite}: {exc}") from None
    for t in traces:
        if t.status != "ok":
            _warn(f"test {t.name}: {t.status}: {t.message}; counted as failing")
    _write(output, dumps_csv(build_spectrum(traces, cfg.labels)))


@main.command(name="localize")
@click.argument("spectrum", type=click.Path(exists=True, dir_okay=False, allow_dash=True))
@click.option("--with-baselines", is_flag=True, help="Add Tarantula, Ochiai, Jaccard, DStar.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
def localize_cmd(spectrum, with_baselines, fmt):
    """Score and rank the blocks of a SPECTRUM CSV."""
    report = localize(_load_spectrum(spectrum), with_baselines)
    for c in report.caveats:
        _warn(c)
    click.echo(report.to_json() if fmt == "json" else report.to_text(), nl=False)


@main.command(name="eval")
@click.argument("spectrum", type=click.Path(exists=True, dir_okay=False, allow_dash=True))
@click.option("--fault", "fault", type=int, required=True, help="Id of the truly faulty block.")
def eval_cmd(spectrum, fault):
    """Print the fraction of blocks ranked at or above the true fault."""
    report = localize(_load_spectrum(spectrum))
    try:
        score = evaluate_rank(report, fault)
    except KeyError:
        raise DataError(f"unknown block id {fault}") from None
    click.echo(f"{float(score):.4f}")


@main.command()
@click.argument("report", type=click.Path(exists=True, dir_okay=False, allow_dash=True))
def report(report):
    """Render a JSON REPORT as a text table."""
    try:
        rep = SuspiciousnessReport.from_json(_read(report))
    except ValueError as exc:  # json.JSONDecodeError included
        raise DataError(f"{report}: {exc}") from None
    click.echo(rep.to_text(), nl=False)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
