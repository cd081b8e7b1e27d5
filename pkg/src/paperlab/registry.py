"""
Registry of named checks, the suite runner and the report models.
"""

import asyncio
import importlib
import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum
from fnmatch import fnmatchcase
from typing import Any

from pydantic import BaseModel, Field

from src.core.context import SuiteContext
from src.core.errors import CremonaError

logger = logging.getLogger(__name__)


class Status(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    EVIDENCE = "evidence-only"


class CheckResult(BaseModel):
    check_id: str
    paper_ref: str
    status: Status
    elapsed_ms: int = 0
    details: dict[str, Any] = Field(default_factory=dict)


class Report(BaseModel):
    seed: int
    version: str
    pass_count: int
    fail_count: int
    evidence_count: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return self.fail_count == 0


@dataclass
class Outcome:
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    evidence: bool
    func: Callable[[SuiteContext], Outcome]


REGISTRY: dict[str, Check] = {}

CHECK_MODULES = (
    "src.paperlab.checks.maps",
    "src.paperlab.checks.one_singularity",
    "src.paperlab.checks.lemmas",
    "src.paperlab.checks.invariance",
    "src.paperlab.checks.transversal",
    "src.paperlab.checks.degrees",
)


def check(check_id: str, anchor: str, evidence: bool = False):
    """Register `func` under a stable id."""

    def register(func: Callable[[SuiteContext], Outcome]):
        if check_id in REGISTRY:
            raise ValueError(f"duplicate check id {check_id}")
        REGISTRY[check_id] = Check(check_id, anchor, evidence, func)
        return func

    return register


def load_checks() -> dict[str, Check]:
    for module in CHECK_MODULES:
        importlib.import_module(module)
    return REGISTRY


def matches(check_id: str, pattern: str) -> bool:
    """Empty pattern, id prefix or glob."""
    if not pattern:
        return True
    return check_id.startswith(pattern) or fnmatchcase(check_id, pattern)


def select(pattern: str = "") -> list[Check]:
    return sorted(
        (c for c in load_checks().values() if matches(c.id, pattern)), key=lambda c: c.id
    )


def execute(item: Check, ctx: SuiteContext) -> CheckResult:
    started = time.perf_counter()
    try:
        outcome = item.func(ctx)
    except CremonaError as e:
        logger.warning("check %s raised %s: %s", item.id, type(e).__name__, e)
        outcome = Outcome(False, {"error": f"{type(e).__name__}: {e}"})
    except Exception as e:
        logger.exception("check %s crashed", item.id)
        outcome = Outcome(False, {"error": f"{type(e).__name__}: {e}"})
    elapsed = int((time.perf_counter() - started) * 1000)
    if not outcome.passed:
        status = Status.FAIL
    elif item.evidence:
        status = Status.EVIDENCE
    else:
        status = Status.PASS
    logger.info("%s: %s", item.id, status)
    return CheckResult(
        check_id=item.id,
        paper_ref=item.anchor,
        status=status,
        elapsed_ms=elapsed if ctx.config.REPORT_TIMINGS else 0,
        details=outcome.details,
    )


async def run_suite(ctx: SuiteContext, pattern: str = "") -> list[CheckResult]:
    """Run the matching checks, at most WORKERS at a time, ordered by id."""
    selected = select(pattern)
    logger.info("running %d checks (workers=%d)", len(selected), ctx.config.WORKERS)
    limit = asyncio.Semaphore(ctx.config.WORKERS)

    async def run_one(item: Check) -> CheckResult:
        async with limit:
            return await asyncio.to_thread(execute, item, ctx)

    results = await asyncio.gather(*(run_one(c) for c in selected))
    return sorted(results, key=lambda r: r.check_id)


def build_report(ctx: SuiteContext, results: list[CheckResult]) -> Report:
    counts = {s: sum(1 for r in results if r.status == s) for s in Status}
    return Report(
        seed=ctx.seed,
        version=ctx.version,
        pass_count=counts[Status.PASS],
        fail_count=counts[Status.FAIL],
        evidence_count=counts[Status.EVIDENCE],
        checks=results,
    )
