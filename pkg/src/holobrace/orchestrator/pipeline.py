"""full-run: 컨텍스트 생성부터 마지막 층 병합까지.

층마다 부모 목록을 ``jobs`` 개로 나누고 프로세스 풀에서 돌린다.
이미 온전한 출력이 있는 작업은 건너뛰므로 중단 뒤 다시 실행하면 이어서 한다.
"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cache
from pathlib import Path

from holobrace.config import settings
from holobrace.errors import FingerprintMismatchError
from holobrace.groups.abelian import AbelianGroup
from holobrace.groups.series import SeriesStrategy
from holobrace.lifting.context import LiftingContext, build_context
from holobrace.models import LayerStat
from holobrace.orchestrator.context import ContextStore
from holobrace.orchestrator.jobs import merge_shards, run_job, split_layer
from holobrace.orchestrator.shards import (
    ShardFile,
    is_complete,
    read_shard,
    write_shard,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class RunResult:
    """마지막 층 샤드와 층별 통계."""

    final: Path
    classes: int
    stats: list[LayerStat]


@cache
def _worker_context(directory: str) -> LiftingContext:
    return ContextStore(Path(directory)).load()


def _execute(store: ContextStore, ctx: LiftingContext, layer: int, job: int) -> int:
    """작업 하나: 입력 샤드를 읽어 들어올리고 출력 샤드를 쓴다."""
    out = run_job(ctx, read_shard(store.job_input_path(layer, job)), layer)
    write_shard(store.job_path(layer, job), out)
    return len(out)


def _job(directory: str, layer: int, job: int) -> int:
    return _execute(ContextStore(Path(directory)), _worker_context(directory), layer, job)


def _same_input(path: Path, part: ShardFile) -> bool:
    return path.exists() and path.read_text(encoding="utf-8") == part.render()


def prepare_context(
    group: AbelianGroup,
    directory: Path,
    strategy: SeriesStrategy = "power",
) -> LiftingContext:
    """디렉터리에 컨텍스트가 있으면 불러오고, 없으면 만들어 저장한다."""
    store = ContextStore(directory)
    if store.exists:
        ctx = store.load()
        if ctx.group.descriptor != group.descriptor:
            raise FingerprintMismatchError(
                f"{directory} holds a context for {ctx.group.descriptor}, "
                f"not {group.descriptor}"
            )
        if ctx.strategy != strategy:
            logger.warning(
                f"{directory} holds a {ctx.strategy} series; "
                f"requested strategy {strategy} is ignored on resume"
            )
        logger.info(f"resuming with existing context in {directory}")
        return ctx
    ctx = build_context(group, strategy)
    store.save(ctx)
    return ctx


async def _run_layer(
    store: ContextStore,
    ctx: LiftingContext,
    layer: int,
    jobs: int,
    pool: ProcessPoolExecutor | None,
) -> LayerStat:
    descriptor, fp = ctx.group.descriptor, ctx.fingerprint()
    parents = read_shard(store.layer_path(layer - 1))
    pending = []
    for j, part in enumerate(split_layer(parents, jobs)):
        in_path = store.job_input_path(layer, j)
        if is_complete(store.job_path(layer, j), descriptor, fp, layer) and _same_input(
            in_path, part
        ):
            logger.debug(f"layer {layer} job {j}: output present, skipped")
            continue
        write_shard(in_path, part)
        pending.append(j)

    directory = str(store.directory)
    if pool is None:
        for j in pending:
            _execute(store, ctx, layer, j)
    else:
        loop = asyncio.get_running_loop()
        await asyncio.gather(
            *(loop.run_in_executor(pool, _job, directory, layer, j) for j in pending)
        )

    merged = merge_shards([read_shard(store.job_path(layer, j)) for j in range(jobs)])
    write_shard(store.layer_path(layer), merged)
    logger.info(
        f"layer {layer}/{ctx.depth}: {len(merged)} classes "
        f"({len(pending)} of {jobs} jobs run)"
    )
    return LayerStat(layer=layer, classes=len(merged), jobs=jobs)


async def full_run(
    group: AbelianGroup,
    directory: Path,
    jobs: int = 1,
    workers: int | None = None,
    strategy: SeriesStrategy = "power",
) -> RunResult:
    """모든 층을 차례로 돌리고 마지막 층 샤드 경로를 돌려준다."""
    workers = workers or settings.workers
    logger.info(f"full run for {group.descriptor}: {jobs} jobs, {workers} workers")
    store = ContextStore(directory)
    ctx = prepare_context(group, directory, strategy)
    write_shard(store.layer_path(0), store.shard(ctx, 0, [ctx.root()]))

    stats = [LayerStat(layer=0, classes=1, jobs=0)]
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for layer in range(1, ctx.depth + 1):
            stats.append(await _run_layer(store, ctx, layer, jobs, pool))
    finally:
        if pool is not None:
            pool.shutdown()
    store.save_stats(stats)

    final = store.layer_path(ctx.depth)
    classes = stats[-1].classes
    logger.info(f"full run finished: {classes} classes in {final}")
    return RunResult(final, classes, stats)
