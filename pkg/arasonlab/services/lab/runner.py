"""CheckRunner: high-level driver for the theorem lab.

Responsibilities
----------------
1. Resolve check names (``all`` expands to every registered check).
2. For each check, draw ``cfg.trials`` instances from per-trial seeded
   generators and verify the law on each.
3. Minimize every counterexample by entry-height reduction.
4. Aggregate per-check reports into a result dictionary and, when anything
   failed, write ``check_failures_<timestamp>.json`` under the reports dir.

All mathematics lives in the services; the runner only handles iteration,
logging and aggregation.
"""
import json
import math
import os
from copy import deepcopy
from datetime import datetime
from functools import partial
from time import perf_counter
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

from arasonlab.config import config
from arasonlab.exceptions import PreconditionError, WitnessNotFoundError
from arasonlab.utils.logger import setup_logger
from arasonlab.utils.timing import elapsed_ms
from .checks import CHECKS, LawCheck, get_check
from .generators import InstanceGenerator
from .models import CheckReport, GenConfig

logger = setup_logger("CheckRunner")

_SHRINK = (1, -1, 2, -2, 3, -3)
QUOTA_MIN_TRIALS = 100


def create_result_dictionary(status: str, message: str, stats: dict, results: list, **kwargs) -> dict:
    """Standardized result dictionary for lab runs."""
    result = {
        "status": status,
        "message": message,
        "stats": {
            **stats,
            "checks_passed": len([r for r in results if not r.get("failures")]),
            "checks_failed": len([r for r in results if r.get("failures")]),
        },
        "results": results,
    }
    result.update({k: v for k, v in kwargs.items() if v is not None})
    return result


def _classify_exception(exc: Exception) -> str:
    if isinstance(exc, AssertionError):
        return "violation"
    if isinstance(exc, WitnessNotFoundError):
        return "witness"
    if isinstance(exc, PreconditionError):
        return "precondition"
    return "error"


def run_instance(check: LawCheck, instance: dict) -> Tuple[Optional[str], Optional[dict]]:
    """(outcome label, None) on success, (None, failure record) otherwise."""
    try:
        return check.verify(instance), None
    except Exception as exc:
        kind = _classify_exception(exc)
        if kind == "error":
            logger.error(f"Unexpected error in check '{check.name}' on {instance}: {exc}", exc_info=True)
        return None, {
            "kind": kind,
            "message": str(exc),
            "details": getattr(exc, "details", None) or {},
        }


def _entry_paths(instance: dict) -> List[tuple]:
    paths: List[tuple] = []
    if instance.get("delta") is not None:
        paths.append(("delta",))
    for name, entries in instance.get("forms", {}).items():
        paths.extend(("forms", name, i) for i in range(len(entries)))
    paths.extend(("scalars", name) for name in instance.get("scalars", {}))
    return paths


def _get(instance: dict, path: tuple):
    node = instance
    for key in path:
        node = node[key]
    return node


def _set(instance: dict, path: tuple, value) -> None:
    node = instance
    for key in path[:-1]:
        node = node[key]
    node[path[-1]] = value


def minimize(check: LawCheck, instance: dict, kind: str) -> dict:
    """Greedy entry-by-entry replacement with +-1, +-2, +-3 while the failure persists."""
    current = deepcopy(instance)
    improved = True
    while improved:
        improved = False
        for path in _entry_paths(current):
            value = _get(current, path)
            if not isinstance(value, int):
                continue
            for candidate in _SHRINK:
                if abs(candidate) >= abs(value):
                    continue
                trial = deepcopy(current)
                _set(trial, path, candidate)
                _, failure = run_instance(check, trial)
                if failure is not None and failure["kind"] == kind:
                    current = trial
                    improved = True
                    break
    return current


def _instance_sources(check: LawCheck, cfg: GenConfig, exhaustive: bool) -> Iterator[Callable[[], dict]]:
    if not exhaustive:
        for i in range(cfg.trials):
            yield partial(check.generate, InstanceGenerator(cfg, f"{check.name}:{i}"))
        return
    instances = check.all_instances(cfg.height_bound)
    if instances is None:
        raise ValueError(f"check {check.name!r} has no exhaustive mode")
    for instance in instances:
        yield partial(deepcopy, instance)


def run_check(name: str, cfg: GenConfig, *, timing: bool = False, exhaustive: bool = False) -> CheckReport:
    """Run one named law over ``cfg.trials`` generated instances.

    With ``exhaustive`` the law runs once on every instance it enumerates up
    to ``cfg.height_bound`` and ``trials`` reports how many there were.
    """
    check = get_check(name)
    start = perf_counter()
    report = CheckReport(check=name, seed=cfg.seed, trials=cfg.trials)
    sources = _instance_sources(check, cfg, exhaustive)
    if exhaustive:
        sources = list(sources)
        report.trials = len(sources)

    for i, source in enumerate(sources):
        try:
            instance = source()
        except Exception as exc:
            logger.error(f"Check '{name}' could not generate trial {i + 1}: {exc}", exc_info=True)
            report.trials_run += 1
            report.stats["generation"] = report.stats.get("generation", 0) + 1
            report.failures.append({"trial": i, "kind": "generation", "message": str(exc),
                                    "details": getattr(exc, "details", None) or {}, "instance": None,
                                    "original": None})
            continue
        logger.debug(f"[{i + 1}/{report.trials}] {name}: {instance}")
        outcome, failure = run_instance(check, instance)
        report.trials_run += 1
        if failure is None:
            if outcome:
                report.stats[outcome] = report.stats.get(outcome, 0) + 1
            continue
        kind = failure["kind"]
        report.stats[kind] = report.stats.get(kind, 0) + 1
        minimized = instance if kind in ("precondition", "error") else minimize(check, instance, kind)
        logger.warning(f"Check '{name}' failed on trial {i + 1} ({kind}): {failure['message']}")
        report.failures.append({"trial": i, **failure, "instance": minimized, "original": instance})

    _check_outcome_quota(check, report)

    if timing:
        report.elapsed_ms = elapsed_ms(start)
    logger.info(
        f"Check '{name}': {report.trials_run} trials, {len(report.failures)} failure(s), outcomes {report.stats}"
    )
    return report


def _check_outcome_quota(check: LawCheck, report: CheckReport) -> None:
    """Record a coverage failure when an outcome the law must exhibit is too rare."""
    if report.trials_run < QUOTA_MIN_TRIALS:
        return
    for outcome, share in sorted(check.outcome_quota.items()):
        required = math.ceil(share * report.trials_run)
        seen = report.stats.get(outcome, 0)
        if seen < required:
            logger.warning(f"Check '{report.check}': outcome '{outcome}' seen {seen} time(s), {required} required")
            report.failures.append({
                "trial": None,
                "kind": "coverage",
                "message": f"outcome '{outcome}' seen {seen} time(s), at least {required} required",
                "details": {"outcome": outcome, "seen": seen, "required": required},
                "instance": None,
                "original": None,
            })


def replay(name: str, instance: dict) -> dict:
    """Re-run a single law on a serialized instance."""
    check = get_check(name)
    outcome, failure = run_instance(check, instance)
    if failure is None:
        return {"check": name, "status": "pass", "outcome": outcome, "instance": instance}
    return {"check": name, "status": "fail", **failure, "instance": instance}


def resolve_check_names(names: Iterable[str]) -> List[str]:
    out: List[str] = []
    for name in names:
        if name == "all":
            out.extend(sorted(CHECKS))
        else:
            get_check(name)
            out.append(name)
    return out


class FailureLogger:
    """Collects failing reports and writes them to a dedicated JSON file."""

    def __init__(self, output_dir: str, logger=None):
        self.output_dir = output_dir
        self.logger = logger
        self.failures: List[dict] = []
        self.log_file_path: Optional[str] = None

    def log_report(self, report: CheckReport) -> None:
        for failure in report.failures:
            self.failures.append({"check": report.check, "seed": report.seed, **failure})
            if self.logger:
                self.logger.warning(f"FAILURE [{failure['kind']}] {report.check} trial {failure['trial']}: "
                                    f"{failure['message']}")

    def write_failure_log(self) -> Optional[str]:
        if not self.failures:
            return None
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        self.log_file_path = os.path.join(self.output_dir, f"check_failures_{timestamp}.json")
        os.makedirs(self.output_dir, exist_ok=True)
        payload = {
            "timestamp": timestamp,
            "total_failures": len(self.failures),
            "summary_by_check": self._summary("check"),
            "summary_by_kind": self._summary("kind"),
            "failures": self.failures,
            "instructions": {
                "replay": "python -m arasonlab check replay <check> '<instance json>'",
                "kinds": {
                    "violation": "two computations of the same invariant disagree",
                    "witness": "decision true but the bounded witness search failed",
                    "precondition": "the generator produced an instance outside the law's hypotheses",
                    "error": "unexpected exception; see app.log",
                    "generation": "the generator itself raised; no instance to replay",
                    "coverage": "an outcome the law must exhibit occurred too rarely in the sample",
                },
            },
        }
        try:
            with open(self.log_file_path, "w", encoding="utf-8") as f:
                json.dump(payload, f, indent=2, sort_keys=True)
            if self.logger:
                self.logger.info(f"Failure log written to: {self.log_file_path}")
            return self.log_file_path
        except OSError as e:
            if self.logger:
                self.logger.error(f"Error writing failure log: {e}")
            return None

    def _summary(self, key: str) -> dict:
        summary: dict = {}
        for item in self.failures:
            summary[item[key]] = summary.get(item[key], 0) + 1
        return dict(sorted(summary.items(), key=lambda x: x[1], reverse=True))


class CheckRunner:

    def __init__(self, cfg: GenConfig, *, reports_dir: Optional[str] = None, timing: bool = False,
                 write_failure_log: bool = True, exhaustive: bool = False):
        self.cfg = cfg
        self.timing = timing
        self.exhaustive = exhaustive
        self.reports_dir = reports_dir or config.get("base_dirs", {}).get("reports", "reports")
        self.write_failure_log = write_failure_log
        self.logger = logger

    def run(self, names: Iterable[str]) -> dict:
        selected = resolve_check_names(names)
        self.logger.info(f"Running {len(selected)} check(s) with seed {self.cfg.seed}, {self.cfg.trials} trials each")
        failure_logger = FailureLogger(self.reports_dir, logger=self.logger)
        results: List[dict] = []
        trials_run = 0

        for i, name in enumerate(selected):
            self.logger.info(f"[{i + 1}/{len(selected)}] Check: {name}")
            report = run_check(name, self.cfg, timing=self.timing, exhaustive=self.exhaustive)
            trials_run += report.trials_run
            failure_logger.log_report(report)
            results.append(report.to_json())

        failed = [r["check"] for r in results if r["failures"]]
        failure_log = failure_logger.write_failure_log() if self.write_failure_log else None
        if failed:
            status, message = "failed", f"{len(failed)} check(s) found counterexamples: {', '.join(failed)}"
        else:
            status, message = "success", f"All {len(results)} check(s) passed."
        return create_result_dictionary(
            status,
            message,
            {"checks_run": len(results), "trials_run": trials_run,
             "failures": sum(len(r["failures"]) for r in results)},
            results,
            config=self.cfg.model_dump(),
            failure_log=failure_log,
        )
