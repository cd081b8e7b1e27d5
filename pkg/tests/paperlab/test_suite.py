from src.config import load_config
from src.core.context import suite_context
from src.paperlab.registry import Status, build_report, run_suite, select


async def test_default_suite_has_no_failures():
    """测试默认配置下完整运行所有注册检查没有失败项"""
    async with suite_context(load_config(REPORT_TIMINGS=False)) as context:
        results = await run_suite(context)
        report = build_report(context, results)
    failed = {r.check_id: r.details for r in results if r.status == Status.FAIL}
    assert failed == {}  # nosec
    assert report.passed  # nosec
    assert len(results) == len(select())  # nosec
    assert report.evidence_count > 0  # nosec
