"""
Reproducibility: generation, instance printing and check output are functions
of the seed alone.
"""

from __future__ import annotations

from ..instances.generator import generate
from ..instances.loader import InstanceBundle, parse_instance, print_instance
from ..results import CheckResult
from ..suite import CheckContext, InvariantSuite, register_suite
from .common import predicate
from .simplicity import check_simple_invariance


def check_generation_repeatable(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    first, second = generate(ctx.seed), generate(ctx.seed)
    return [
        predicate("generate-repeatable", print_instance(first) == print_instance(second))
    ]


def check_print_parse(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    text = print_instance(bundle)
    again = parse_instance(text)
    return [
        predicate("print-parse", print_instance(again) == text),
        predicate("print-parse-laws", again.laws == bundle.laws),
    ]


def check_output_repeatable(bundle: InstanceBundle, ctx: CheckContext) -> list[CheckResult]:
    """The same seed drives the same random choices inside a check."""
    runs = [
        [r.to_dict() for r in check_simple_invariance(bundle, CheckContext.for_seed(ctx.seed))]
        for _ in range(2)
    ]
    return [predicate("check-repeatable", runs[0] == runs[1])]


register_suite(
    InvariantSuite(
        name="determinism",
        profile="default",
        description="Seeded generation, printing and checks are reproducible",
    ).add_checks([check_generation_repeatable, check_print_parse, check_output_repeatable])
)
