"""Run a verification suite over its case grid and write the report."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from boolechar.shared.constants import EXIT_FAIL, EXIT_PASS, FORMAT_CSV
from boolechar.verify.models import SuiteConfig
from boolechar.verify.registry import Case, SuiteError, SuiteRegistry
from boolechar.verify.report import SuiteRun, VerificationReport, render_csv, render_json
from boolechar.verify.suites import default_registry

logger = logging.getLogger(__name__)


def _check(
    registry: SuiteRegistry, suite: str, params: Case, tol: float | None
) -> VerificationReport:
    try:
        return registry.execute(suite, params, tol)
    except SuiteError as exc:
        cause = exc.__cause__ if exc.__cause__ is not None else exc
        return VerificationReport.failure(params, f"{type(cause).__name__}: {cause}")


def _run_case(suite: str, params: Case, tol: float | None) -> VerificationReport:
    """Worker entry point; each process resolves the suite from its own default registry."""
    return _check(default_registry(), suite, params, tol)


def run_suite(config: SuiteConfig, registry: SuiteRegistry | None = None) -> SuiteRun:
    """Build the grid, check every case and collect the reports in case order.

    Cases fan out to a process pool when ``config.jobs > 1`` and the
    default registry is in use; a custom registry always runs in-process.
    """
    shared = registry is None
    reg = default_registry() if registry is None else registry
    definition = reg.get_suite(config.suite)
    cases = reg.build_cases(config.suite, config)
    logger.info(
        "Suite '%s' v%s: %d cases, %d job(s)",
        config.suite,
        definition.version,
        len(cases),
        config.jobs,
    )

    start = time.monotonic()
    if shared and config.jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [pool.submit(_run_case, config.suite, case, config.tol) for case in cases]
            reports = [future.result() for future in futures]
    else:
        reports = [_check(reg, config.suite, case, config.tol) for case in cases]
    elapsed = time.monotonic() - start

    run = SuiteRun(
        suite=config.suite,
        version=definition.version,
        cases=reports,
        config=config.summary(),
        elapsed_s=elapsed,
    )
    for report in run.cases:
        if not report.passed:
            logger.error(
                "Suite '%s' case %s failed: defect %s %s",
                config.suite,
                report.params,
                report.defect,
                report.route_meta.get("error", ""),
            )
    logger.info(
        "Suite '%s' finished in %.2fs: %d/%d passed, max defect %.3e",
        config.suite,
        elapsed,
        len(run.cases) - run.failures,
        len(run.cases),
        run.max_defect,
    )
    return run


def render(run: SuiteRun, output_format: str, generated_at: str | None = None) -> str:
    if output_format == FORMAT_CSV:
        return render_csv(run)
    return render_json(run, generated_at)


def write_report(run: SuiteRun, config: SuiteConfig, generated_at: str | None = None) -> str:
    """Render the run and write it to ``config.out`` when set; return the text."""
    text = render(run, config.output_format, generated_at)
    if config.out:
        path = Path(config.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Wrote %s report to %s", config.output_format, path)
    return text


def exit_status(run: SuiteRun) -> int:
    """0 iff every case ran and passed."""
    return EXIT_PASS if run.passed else EXIT_FAIL
