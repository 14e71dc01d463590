"""
Suite runner — executes invariant suites over generated bundles.

Orchestrates:
1. Generate a bundle for each seed
2. Run every check of the suite on it
3. Run the suite-level finalize step
4. Dump failing bundles for replay
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from pathlib import Path
from typing import Callable, Iterable, Optional, Union

from ..instances.generator import GenerationProfile, generate, resolve_profile
from ..instances.loader import InstanceBundle, dump_instance
from ..metrics.base import EXACT, Comparator
from ..results import CaseResult, CheckResult, SuiteReport, Verdict
from ..suite import CheckContext, InvariantSuite, get_suite

logger = logging.getLogger(__name__)


class SuiteRunner:
    """
    Runs invariant suites over seeded bundles.

    Usage:
        runner = SuiteRunner(workers=4, dump_dir="failures/")
        report = runner.run(get_suite("axioms"), range(0, 100))
    """

    def __init__(
        self,
        comparator: Comparator = EXACT,
        workers: int = 1,
        dump_dir: Optional[Union[str, Path]] = None,
        profiles: Optional[dict[str, GenerationProfile]] = None,
        on_case_complete: Optional[Callable[[CaseResult], None]] = None,
    ):
        """
        Args:
            comparator: Exact or floating comparisons for every check.
            workers: Bundles evaluated concurrently (1 = sequential).
            dump_dir: Directory for instance files of failing bundles.
            profiles: Extra generation profiles by name.
            on_case_complete: Callback(case_result) after each bundle.
        """
        self._comparator = comparator
        self._workers = max(1, workers)
        self._dump_dir = Path(dump_dir) if dump_dir is not None else None
        self._profiles = profiles or {}
        self._on_case_complete = on_case_complete

    def run(
        self,
        suite: InvariantSuite,
        seeds: Iterable[int],
        profile: Optional[str] = None,
    ) -> SuiteReport:
        """
        Run a suite on one generated bundle per seed.

        Raises:
            InfeasibleProfileError: for unknown or infeasible profiles.
        """
        seeds = list(seeds)
        resolved = resolve_profile(profile or suite.profile, self._profiles)
        logger.info(
            "Starting suite: '%s' (%d checks, %d seeds, profile=%s, mode=%s)",
            suite.name,
            len(suite),
            len(seeds),
            resolved.name,
            self._comparator.mode,
        )
        report = SuiteReport(
            suite_name=suite.name, mode=self._comparator.mode, started_at=datetime.now()
        )

        def task(seed: int) -> CaseResult:
            return self._eval_case(suite, seed, generate(seed, resolved))

        if self._workers <= 1:
            cases = [task(seed) for seed in seeds]
        else:
            with ThreadPoolExecutor(max_workers=self._workers) as pool:
                cases = list(pool.map(task, seeds))
        report.case_results = sorted(cases, key=lambda c: c.seed)

        if suite.finalize is not None and report.case_results:
            report.aggregate_results = suite.finalize(report.case_results)
        self._dump_failures(report)
        report.finished_at = datetime.now()

        logger.info(
            "Suite complete: '%s' — %d/%d bundles passed",
            suite.name,
            report.passed_cases,
            report.total_cases,
        )
        return report

    def run_bundle(self, suite: InvariantSuite, bundle: InstanceBundle) -> SuiteReport:
        """Re-run a suite on one loaded bundle; suite-level steps are skipped."""
        seed = bundle.seed if bundle.seed is not None else 0
        logger.info("Starting suite: '%s' on %s", suite.name, bundle.provenance or "instance")
        report = SuiteReport(
            suite_name=suite.name, mode=self._comparator.mode, started_at=datetime.now()
        )
        report.case_results = [self._eval_case(suite, seed, bundle)]
        report.finished_at = datetime.now()
        return report

    def _eval_case(self, suite: InvariantSuite, seed: int, bundle: InstanceBundle) -> CaseResult:
        """Run every check on one bundle; a check that raises records an ERROR."""
        ctx = CheckContext.for_seed(seed, self._comparator)
        start = time.monotonic()
        results: list[CheckResult] = []
        for check in suite.checks:
            name = check.__name__.removeprefix("check_").replace("_", "-")
            try:
                results.extend(check(bundle, ctx))
            except Exception as e:
                logger.warning("Check '%s' failed for seed %d: %s", name, seed, e)
                results.append(
                    CheckResult(check=name, verdict=Verdict.ERROR, detail=f"Check error: {e}")
                )
        case = CaseResult(
            seed=seed,
            bundle=bundle,
            check_results=results,
            elapsed_ms=(time.monotonic() - start) * 1000,
        )
        logger.debug(
            "Seed %d: %s (%d results)", seed, "PASS" if case.passed else "FAIL", len(results)
        )
        if self._on_case_complete:
            self._on_case_complete(case)
        return case

    def _dump_failures(self, report: SuiteReport) -> None:
        if self._dump_dir is None:
            return
        for case in report.case_results:
            if case.passed or case.bundle is None:
                continue
            path = self._dump_dir / f"{report.suite_name}-seed{case.seed}.json"
            dump_instance(case.bundle, path)
            report.dumped_files.append(str(path))


def run_suite(
    name: str,
    seeds: Iterable[int],
    comparator: Comparator = EXACT,
    profile: Optional[str] = None,
    **runner_options,
) -> SuiteReport:
    """
    Run a registered suite by name.

    Raises:
        UnknownSuiteError: for unknown suite names.
    """
    return SuiteRunner(comparator=comparator, **runner_options).run(
        get_suite(name), seeds, profile
    )
