"""컨텍스트 디렉터리: 작업이 공유하는 불변 데이터.

- ``context.json``: 서술자, 정규열, pcgs, 지문
- ``kernel-<i>.hbl``: 층 ``i`` 의 핵 부분군류 (한 번만 계산)
- ``stats.json``: 층별 통계
"""

import json
import logging
from pathlib import Path

from pydantic import TypeAdapter

from holobrace.errors import FingerprintMismatchError
from holobrace.groups.abelian import parse_descriptor
from holobrace.groups.permgroup import PermGroup
from holobrace.groups.perms import check_perm
from holobrace.groups.series import validate_series
from holobrace.lifting.context import ClassRep, LiftingContext
from holobrace.lifting.kernel import kernel_subgroup_classes
from holobrace.models import ContextManifest, LayerStat
from holobrace.orchestrator.shards import (
    ShardFile,
    atomic_write,
    encode_record,
    make_shard,
    read_shard,
    write_shard,
)
from holobrace.pcgs.pcgs import Pcgs, series_fingerprint

logger = logging.getLogger(__name__)

_stats_adapter = TypeAdapter(list[LayerStat])


def manifest_of(ctx: LiftingContext) -> ContextManifest:
    return ContextManifest(
        descriptor=ctx.group.descriptor,
        strategy=ctx.strategy,
        fingerprint=ctx.fingerprint(),
        hol_generators=[list(g) for g in ctx.hol.generators],
        series=[[list(g) for g in m.generators] for m in ctx.series.members[1:-1]],
        primes=list(ctx.pcgs.primes),
        boundaries=list(ctx.pcgs.boundaries),
        pcgs=[list(g) for g in ctx.pcgs.elements],
        target=ctx.target,
    )


class ContextStore:
    """컨텍스트 디렉터리를 읽고 쓴다."""

    MANIFEST = "context.json"
    STATS = "stats.json"

    def __init__(self, directory: Path) -> None:
        self.directory = directory

    @property
    def exists(self) -> bool:
        return (self.directory / self.MANIFEST).exists()

    def kernel_path(self, layer: int) -> Path:
        return self.directory / f"kernel-{layer}.hbl"

    def layer_path(self, layer: int) -> Path:
        return self.directory / f"layer-{layer}.hbl"

    def job_path(self, layer: int, job: int) -> Path:
        return self.directory / "jobs" / f"layer-{layer}" / f"job-{job:03d}.hbl"

    def job_input_path(self, layer: int, job: int) -> Path:
        return self.directory / "jobs" / f"layer-{layer}" / f"in-{job:03d}.hbl"

    def shard(self, ctx: LiftingContext, layer: int, reps: list[ClassRep]) -> ShardFile:
        return make_shard(
            ctx.group.descriptor,
            ctx.fingerprint(),
            layer,
            (encode_record(rep.record) for rep in reps),
        )

    def save(self, ctx: LiftingContext) -> None:
        """매니페스트와 층마다의 핵 부분군류를 쓴다."""
        for layer in range(1, ctx.depth + 1):
            write_shard(
                self.kernel_path(layer),
                self.shard(ctx, layer, kernel_subgroup_classes(ctx, layer)),
            )
        # 매니페스트는 마지막에: 매니페스트가 있으면 디렉터리가 완성된 것이다
        atomic_write(
            self.directory / self.MANIFEST,
            manifest_of(ctx).model_dump_json(indent=2) + "\n",
        )
        logger.info(f"context saved to {self.directory} ({ctx.depth} layers)")

    def manifest(self) -> ContextManifest:
        return ContextManifest.model_validate_json(
            (self.directory / self.MANIFEST).read_text(encoding="utf-8")
        )

    def load(self) -> LiftingContext:
        """매니페스트에서 컨텍스트를 다시 세우고 지문을 확인한다."""
        m = self.manifest()
        group = parse_descriptor(m.descriptor)
        degree = group.order
        s = PermGroup(degree, [check_perm(g, degree) for g in m.hol_generators])
        series = validate_series(
            s, [[check_perm(g, degree) for g in gens] for gens in m.series]
        )
        pcgs = Pcgs(s, [check_perm(g, degree) for g in m.pcgs], m.primes, m.boundaries)
        fp = series_fingerprint(m.descriptor, pcgs)
        if fp != m.fingerprint:
            raise FingerprintMismatchError(
                f"{self.directory}: manifest fingerprint {m.fingerprint}, recomputed {fp}"
            )
        ctx = LiftingContext(group, series, pcgs, m.strategy)
        for layer in range(1, ctx.depth + 1):
            ctx.kernel_cache[layer] = self._load_kernel(ctx, layer)
        logger.debug(f"context loaded from {self.directory}")
        return ctx

    def _load_kernel(self, ctx: LiftingContext, layer: int) -> list[ClassRep]:
        shard = read_shard(self.kernel_path(layer))
        shard.check(ctx.group.descriptor, ctx.fingerprint())
        lay = ctx.layer(layer)
        kernel_order = lay.kernel_record.order
        parent = ctx.kernel_record(layer - 1).key
        return [
            ClassRep(
                rec,
                layer=layer,
                quotient_order=rec.order // kernel_order,
                parent=parent,
                case=2,
            )
            for rec in shard.records(ctx.pcgs, lay.stop)
        ]

    def save_stats(self, stats: list[LayerStat]) -> None:
        atomic_write(
            self.directory / self.STATS,
            json.dumps([s.model_dump() for s in stats], indent=2) + "\n",
        )

    def load_stats(self) -> list[LayerStat]:
        path = self.directory / self.STATS
        if not path.exists():
            return []
        return _stats_adapter.validate_json(path.read_text(encoding="utf-8"))

    def record_stat(self, stat: LayerStat) -> list[LayerStat]:
        """같은 층의 이전 기록을 바꿔 쓰고 층 순으로 저장한다."""
        by_layer = {s.layer: s for s in self.load_stats()}
        by_layer[stat.layer] = stat
        stats = [by_layer[k] for k in sorted(by_layer)]
        self.save_stats(stats)
        return stats


def save_context(ctx: LiftingContext, directory: Path) -> None:
    ContextStore(directory).save(ctx)


def load_context(directory: Path) -> LiftingContext:
    return ContextStore(directory).load()
