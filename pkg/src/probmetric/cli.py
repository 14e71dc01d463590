"""
probmetric CLI — evaluate metrics and run invariant suites from the command line.

Usage:
    probmetric validate bundle.json
    probmetric metric kyfan:1 xi0 xi1 -f bundle.json
    probmetric hat lp:2 P0 P1 -f bundle.json --witness
    probmetric suite identities --seeds 0..199
    probmetric gap-explore --seed 7 --budget 16 --out gaps/
"""

from __future__ import annotations

import json
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import click

from . import __version__
from .descriptors import parse_descriptor, parse_gauge
from .errors import (
    DescriptorSyntaxError,
    InfeasibleProfileError,
    ProbMetricError,
    SizeLimitError,
    UnknownSuiteError,
)
from .gauges import coreflect, limit_operator, reflect
from .instances import (
    dump_instance,
    generate,
    load_instance,
    load_profiles,
    print_instance,
    resolve_profile,
)
from .metrics import EXACT, Comparator, MetricValue
from .minimal import hat_with_witness
from .probability import realize_chain
from .reporters import REPORT_FORMATS, emit_report
from .runners import SuiteRunner, explore_gaps
from .suite import get_suite, list_suites

logger = logging.getLogger(__name__)

FLOAT_MODE = Comparator(exact=False)


class SeedRange(click.ParamType):
    """`a..b` (inclusive) or a single seed."""

    name = "seeds"

    def convert(self, value, param, ctx) -> list[int]:
        if isinstance(value, list):
            return value
        text = str(value).strip()
        try:
            if ".." in text:
                lo, hi = (int(part) for part in text.split("..", 1))
            else:
                lo = hi = int(text)
        except ValueError:
            self.fail(f"'{value}' is not a seed or a range a..b", param, ctx)
        if lo < 0 or hi < lo:
            self.fail(f"bad seed range '{value}'", param, ctx)
        return list(range(lo, hi + 1))


@contextmanager
def _cli_errors() -> Iterator[None]:
    """Map library errors to exit codes: usage 2, size 2, anything else 1."""
    try:
        yield
    except (DescriptorSyntaxError, UnknownSuiteError, InfeasibleProfileError) as e:
        raise click.UsageError(str(e)) from None
    except SizeLimitError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(2)
    except ProbMetricError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)


def _show(value: MetricValue, floating: bool) -> str:
    return f"{value.approx:.12g}" if floating else value.describe()


@click.group()
@click.version_option(version=__version__)
@click.option("--verbose", "-v", count=True, help="-v for info logs, -vv for debug")
def main(verbose: int) -> None:
    """probmetric — exact probability metrics, minimal metrics and gauges."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def validate(file: str) -> None:
    """Check that an instance file is well formed."""
    try:
        bundle = load_instance(file)
    except ProbMetricError as e:
        click.echo(f"invalid: {e}", err=True)
        sys.exit(1)
    click.echo(
        f"ok: {bundle.space.size} points, {len(bundle.laws)} laws, "
        f"{len(bundle.rvs)} random variables, {len(bundle.sequences)} sequences"
    )


@main.command()
@click.argument("descriptor")
@click.argument("rv1")
@click.argument("rv2")
@click.option("--file", "-f", "file", required=True, type=click.Path(exists=True))
@click.option("--float", "floating", is_flag=True, help="Print a floating approximation")
def metric(descriptor: str, rv1: str, rv2: str, file: str, floating: bool) -> None:
    """Evaluate a metric on two named random variables."""
    with _cli_errors():
        desc = parse_descriptor(descriptor)
        bundle = load_instance(file)
        value = desc.evaluate(bundle.rv(rv1), bundle.rv(rv2))
    click.echo(_show(value, floating))


@main.command()
@click.argument("descriptor")
@click.argument("law_p")
@click.argument("law_q")
@click.option("--file", "-f", "file", required=True, type=click.Path(exists=True))
@click.option("--witness", is_flag=True, help="Also print an optimal coupling and its realization")
@click.option("--float", "floating", is_flag=True, help="Print a floating approximation")
def hat(descriptor: str, law_p: str, law_q: str, file: str, witness: bool, floating: bool) -> None:
    """Evaluate the minimal metric of a descriptor on two named laws."""
    with _cli_errors():
        desc = parse_descriptor(descriptor)
        bundle = load_instance(file)
        value, coupling = hat_with_witness(desc, bundle.law(law_p), bundle.law(law_q))
    click.echo(_show(value, floating))
    if witness:
        xi, eta = realize_chain(coupling)
        payload = {
            "coupling": coupling.to_dict(),
            "realization": {"xi": xi.to_triples(), "eta": eta.to_triples()},
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))


@main.command()
@click.argument("gauge")
@click.argument("sequence")
@click.argument("target")
@click.option("--file", "-f", "file", required=True, type=click.Path(exists=True))
def limit(gauge: str, sequence: str, target: str, file: str) -> None:
    """Evaluate the limit operator of a gauge on a named sequence."""
    with _cli_errors():
        g = parse_gauge(gauge)
        bundle = load_instance(file)
        value = limit_operator(g, bundle.sequence(sequence), bundle.rv(target))
    click.echo(value.describe())


@main.command("reflect")
@click.argument("gauge")
def reflect_cmd(gauge: str) -> None:
    """Print the reflection of a gauge."""
    with _cli_errors():
        click.echo(reflect(parse_gauge(gauge)).spec())


@main.command("coreflect")
@click.argument("gauge")
def coreflect_cmd(gauge: str) -> None:
    """Print the coreflection metric of a gauge."""
    with _cli_errors():
        click.echo(coreflect(parse_gauge(gauge)).spec())


@main.command()
@click.argument("name")
@click.option("--seeds", type=SeedRange(), default="0..9", show_default=True)
@click.option("--float", "floating", is_flag=True, help="Compare with tolerance 1e-9")
@click.option(
    "--format", "fmt", type=click.Choice(REPORT_FORMATS), default="table", show_default=True
)
@click.option("--output", "-o", default=None, type=click.Path(), help="Write the report here")
@click.option("--profile", default=None, help="Override the suite's generation profile")
@click.option("--profile-file", default=None, type=click.Path(exists=True))
@click.option("--dump-dir", default=None, type=click.Path(), help="Dump failing bundles here")
@click.option("--instance", default=None, type=click.Path(exists=True), help="Re-run one file")
@click.option("--workers", default=1, show_default=True, help="Bundles evaluated concurrently")
@click.option("--details", is_flag=True, help="List every failing check in table output")
def suite(
    name: str,
    seeds: list[int],
    floating: bool,
    fmt: str,
    output: Optional[str],
    profile: Optional[str],
    profile_file: Optional[str],
    dump_dir: Optional[str],
    instance: Optional[str],
    workers: int,
    details: bool,
) -> None:
    """Run an invariant suite; exit 1 on any failure."""
    with _cli_errors():
        invariant_suite = get_suite(name)
        extra = load_profiles(profile_file) if profile_file else None
        runner = SuiteRunner(
            comparator=FLOAT_MODE if floating else EXACT,
            workers=workers,
            dump_dir=dump_dir,
            profiles=extra,
        )
        if instance:
            report = runner.run_bundle(invariant_suite, load_instance(instance))
        else:
            report = runner.run(invariant_suite, seeds, profile)
    text = emit_report(report, fmt, verbose=details)
    if output:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        Path(output).write_text(text, encoding="utf-8")
        click.echo(f"Report saved to {output}")
    else:
        click.echo(text, nl=False)
    sys.exit(0 if report.passed else 1)


@main.command("gap-explore")
@click.option("--seed", required=True, type=int)
@click.option("--budget", default=8, show_default=True, help="Random versions per gauge")
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
def gap_explore(seed: int, budget: int, out_dir: str) -> None:
    """Search one bundle for minimal limit gaps; write candidates to OUT."""
    with _cli_errors():
        findings = explore_gaps(seed, budget, out_dir)
    for f in findings:
        line = (
            f"{f.sequence} {f.gauge}: L={f.report.lower.describe()} "
            f"U={f.report.upper.describe()} gap={f.report.gap:.6g}"
        )
        if f.instance_file:
            line += f" candidate {f.instance_file}"
        click.echo(line)


@main.command("generate")
@click.option("--seed", required=True, type=int)
@click.option("--profile", default="default", show_default=True)
@click.option("--profile-file", default=None, type=click.Path(exists=True))
@click.option("--output", "-o", default=None, type=click.Path(dir_okay=False))
def generate_cmd(
    seed: int, profile: str, profile_file: Optional[str], output: Optional[str]
) -> None:
    """Generate a bundle and print or save it."""
    with _cli_errors():
        if profile_file:
            bundle = generate(seed, resolve_profile(profile, load_profiles(profile_file)))
        else:
            bundle = generate(seed, profile)
    if output:
        dump_instance(bundle, output)
        click.echo(f"Instance saved to {output}")
    else:
        click.echo(print_instance(bundle), nl=False)


@main.command("list-suites")
def list_suites_cmd() -> None:
    """List the registered invariant suites."""
    for s in list_suites():
        click.echo(f"  {s.name:<15} {s.profile:<10} {s.description}")


if __name__ == "__main__":
    main()
