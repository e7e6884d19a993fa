"""컨텍스트 디렉터리 테스트."""

from pathlib import Path

import pytest

from holobrace.errors import FingerprintMismatchError
from holobrace.groups.abelian import make_group
from holobrace.lifting.context import LiftingContext, build_context
from holobrace.lifting.kernel import kernel_subgroup_classes
from holobrace.lifting.lift import run_layers
from holobrace.models import LayerStat
from holobrace.orchestrator.context import ContextStore, load_context, save_context


@pytest.fixture
def ctx_c4() -> LiftingContext:
    return build_context(make_group([4]))


class TestContextStore:
    """저장과 불러오기 테스트."""

    def test_roundtrip(self, tmp_path: Path, ctx_c4: LiftingContext) -> None:
        """불러온 컨텍스트의 지문, 층 수, 핵 부분군류가 같은지 확인한다."""
        save_context(ctx_c4, tmp_path)
        loaded = load_context(tmp_path)
        assert loaded.fingerprint() == ctx_c4.fingerprint()
        assert loaded.depth == ctx_c4.depth
        assert loaded.pcgs.elements == ctx_c4.pcgs.elements
        for layer in range(1, ctx_c4.depth + 1):
            assert [r.key for r in loaded.kernel_cache[layer]] == [
                r.key for r in kernel_subgroup_classes(ctx_c4, layer)
            ]

    def test_loaded_context_lifts(self, tmp_path: Path, ctx_c4: LiftingContext) -> None:
        """불러온 컨텍스트로도 같은 결과가 나오는지 확인한다."""
        save_context(ctx_c4, tmp_path)
        assert len(run_layers(load_context(tmp_path))) == 2

    def test_chief_strategy(self, tmp_path: Path) -> None:
        """chief 전략 컨텍스트도 그대로 돌아오는지 확인한다."""
        ctx = build_context(make_group([2, 2]), "chief")
        save_context(ctx, tmp_path)
        loaded = load_context(tmp_path)
        assert loaded.strategy == "chief"
        assert loaded.series.ranks == ctx.series.ranks

    def test_tampered_fingerprint(self, tmp_path: Path, ctx_c4: LiftingContext) -> None:
        """매니페스트 지문이 다르면 FingerprintMismatchError 인지 확인한다."""
        store = ContextStore(tmp_path)
        store.save(ctx_c4)
        manifest = store.manifest().model_copy(update={"fingerprint": "f" * 16})
        (tmp_path / ContextStore.MANIFEST).write_text(
            manifest.model_dump_json(), encoding="utf-8"
        )
        with pytest.raises(FingerprintMismatchError):
            store.load()

    def test_exists(self, tmp_path: Path, ctx_c4: LiftingContext) -> None:
        """매니페스트가 써져야 존재하는 것으로 보는지 확인한다."""
        store = ContextStore(tmp_path)
        assert not store.exists
        store.save(ctx_c4)
        assert store.exists
        assert store.kernel_path(1).exists()

    def test_stats(self, tmp_path: Path) -> None:
        """층별 통계를 쓰고 읽는지 확인한다."""
        store = ContextStore(tmp_path)
        assert store.load_stats() == []
        stats = [LayerStat(layer=0, classes=1, jobs=0), LayerStat(layer=1, classes=3)]
        store.save_stats(stats)
        assert store.load_stats() == stats

    def test_record_stat(self, tmp_path: Path) -> None:
        """같은 층 기록은 바꿔 쓰고 층 순으로 저장하는지 확인한다."""
        store = ContextStore(tmp_path)
        store.record_stat(LayerStat(layer=2, classes=5, jobs=1))
        store.record_stat(LayerStat(layer=0, classes=1, jobs=0))
        stats = store.record_stat(LayerStat(layer=2, classes=7, jobs=3))
        assert [(s.layer, s.classes, s.jobs) for s in stats] == [(0, 1, 0), (2, 7, 3)]
        assert store.load_stats() == stats

    def test_paths(self, tmp_path: Path) -> None:
        """작업 파일 경로 형식을 확인한다."""
        store = ContextStore(tmp_path)
        assert store.layer_path(3) == tmp_path / "layer-3.hbl"
        assert store.job_path(2, 7) == tmp_path / "jobs" / "layer-2" / "job-007.hbl"
        assert store.job_input_path(2, 7).name == "in-007.hbl"
