"""full-run 테스트."""

import logging
from pathlib import Path

import pytest

from holobrace.errors import FingerprintMismatchError
from holobrace.groups.abelian import make_group
from holobrace.orchestrator.context import ContextStore
from holobrace.orchestrator.pipeline import full_run, prepare_context


class TestFullRun:
    """전체 실행 테스트."""

    async def test_c4(self, tmp_path: Path) -> None:
        """C4 전체 실행 결과와 층별 통계를 확인한다."""
        result = await full_run(make_group([4]), tmp_path)
        assert result.classes == 2
        assert result.final == tmp_path / "layer-2.hbl"
        assert [s.classes for s in result.stats] == [1, 3, 2]
        assert ContextStore(tmp_path).load_stats() == result.stats

    async def test_trivial_group(self, tmp_path: Path) -> None:
        """자명군은 층 0 샤드가 곧 결과인지 확인한다."""
        result = await full_run(make_group([]), tmp_path)
        assert result.classes == 1
        assert result.final == tmp_path / "layer-0.hbl"

    async def test_job_count_independence(self, tmp_path: Path) -> None:
        """작업 수가 달라도 마지막 샤드가 같은지 확인한다."""
        group = make_group([2, 4])
        one = await full_run(group, tmp_path / "one", jobs=1)
        three = await full_run(group, tmp_path / "three", jobs=3)
        assert one.final.read_text() == three.final.read_text()

    async def test_resume_after_lost_output(self, tmp_path: Path) -> None:
        """작업 출력 하나를 지우고 다시 돌리면 그것만 다시 만드는지 확인한다."""
        group = make_group([4])
        first = await full_run(group, tmp_path, jobs=2)
        store = ContextStore(tmp_path)
        kept = store.job_path(2, 0)
        lost = store.job_path(2, 1)
        kept_mtime = kept.stat().st_mtime_ns
        expected = first.final.read_text()
        lost.unlink()

        second = await full_run(group, tmp_path, jobs=2)
        assert second.final.read_text() == expected
        assert lost.exists()
        assert kept.stat().st_mtime_ns == kept_mtime

    async def test_process_pool(self, tmp_path: Path) -> None:
        """프로세스 풀에서도 같은 수가 나오는지 확인한다."""
        result = await full_run(make_group([2, 2]), tmp_path, jobs=2, workers=2)
        assert result.classes == 2


def test_prepare_context_other_group(tmp_path: Path) -> None:
    """다른 군의 컨텍스트 디렉터리는 거부하는지 확인한다."""
    prepare_context(make_group([4]), tmp_path)
    with pytest.raises(FingerprintMismatchError):
        prepare_context(make_group([2, 2]), tmp_path)


def test_prepare_context_other_strategy(
    tmp_path: Path, caplog: pytest.LogCaptureFixture
) -> None:
    """저장된 정규열과 다른 전략으로 이어 실행하면 두 전략을 밝혀 경고하는지 확인한다."""
    prepare_context(make_group([2, 4]), tmp_path, "power")
    with caplog.at_level(logging.WARNING, logger="holobrace.orchestrator.pipeline"):
        ctx = prepare_context(make_group([2, 4]), tmp_path, "chief")
    assert ctx.strategy == "power"
    warnings = [r.getMessage() for r in caplog.records if r.levelno == logging.WARNING]
    assert any("power" in m and "chief" in m for m in warnings)


def test_prepare_context_same_strategy(
    tmp_path: Path, caplog: pytest.LogCaptureFixture
) -> None:
    """같은 전략으로 이어 실행하면 경고가 없는지 확인한다."""
    prepare_context(make_group([4]), tmp_path, "power")
    with caplog.at_level(logging.WARNING, logger="holobrace.orchestrator.pipeline"):
        prepare_context(make_group([4]), tmp_path, "power")
    assert not [r for r in caplog.records if r.levelno >= logging.WARNING]
