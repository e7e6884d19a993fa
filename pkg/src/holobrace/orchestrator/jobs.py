"""분할, 작업 실행, 병합."""

import logging

from holobrace.errors import ShardFormatError
from holobrace.lifting.context import ClassRep, LiftingContext
from holobrace.lifting.lift import lift_layer
from holobrace.orchestrator.shards import ShardFile, encode_record, make_shard

logger = logging.getLogger(__name__)


def split_layer(shard: ShardFile, jobs: int) -> list[ShardFile]:
    """레코드 순서를 지키는 연속 분할. 앞쪽 샤드가 하나씩 더 받는다."""
    if jobs < 1:
        raise ValueError("job count must be at least 1")
    h = shard.header
    size, extra = divmod(len(shard), jobs)
    out = []
    start = 0
    for j in range(jobs):
        stop = start + size + (1 if j < extra else 0)
        out.append(make_shard(h.descriptor, h.fingerprint, h.layer, shard.lines[start:stop]))
        start = stop
    return out


def parents_of(ctx: LiftingContext, shard: ShardFile) -> list[ClassRep]:
    """샤드 레코드를 층 ``shard.header.layer`` 의 대표로 되돌린다."""
    layer = shard.header.layer
    kernel_order = ctx.kernel_record(layer).order
    tail = ctx.pcgs.boundaries[layer]
    return [
        ClassRep(rec, layer=layer, quotient_order=rec.order // kernel_order)
        for rec in shard.records(ctx.pcgs, tail)
    ]


def run_job(ctx: LiftingContext, shard: ShardFile, layer: int) -> ShardFile:
    """층 ``layer - 1`` 의 부모들을 층 ``layer`` 로 들어올린다.

    출력은 키 순으로 정렬되므로 같은 입력에서 같은 파일이 나온다.
    """
    shard.check(ctx.group.descriptor, ctx.fingerprint())
    if shard.header.layer != layer - 1:
        raise ShardFormatError(
            f"shard holds layer {shard.header.layer}, cannot lift to layer {layer}"
        )
    if not 1 <= layer <= ctx.depth:
        raise ShardFormatError(f"layer {layer} out of range 1..{ctx.depth}")
    reps = lift_layer(ctx, parents_of(ctx, shard))
    logger.info(f"job at layer {layer}: {len(shard)} parents -> {len(reps)} classes")
    return make_shard(
        ctx.group.descriptor,
        ctx.fingerprint(),
        layer,
        (encode_record(rep.record) for rep in reps),
    )


def merge_shards(shards: list[ShardFile]) -> ShardFile:
    """이어 붙이고 키 순으로 정렬한다. 중복 키는 하나로 합친다."""
    if not shards:
        raise ShardFormatError("nothing to merge")
    first = shards[0].header
    for s in shards[1:]:
        h = s.header
        if (h.descriptor, h.fingerprint, h.layer) != (
            first.descriptor,
            first.fingerprint,
            first.layer,
        ):
            raise ShardFormatError(
                f"header mismatch: {h.to_line()!r} vs {first.to_line()!r}"
            )
    by_key: dict[tuple[int, ...], str] = {}
    duplicates = 0
    for s in shards:
        for key, line in zip(s.keys(), s.lines, strict=True):
            if key in by_key:
                duplicates += 1
                continue
            by_key[key] = line
    if duplicates:
        logger.warning(f"merge collapsed {duplicates} duplicate records")
    lines = [by_key[k] for k in sorted(by_key)]
    logger.info(f"merged {len(shards)} shards into {len(lines)} records")
    return make_shard(first.descriptor, first.fingerprint, first.layer, lines)
