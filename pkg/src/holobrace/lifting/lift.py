"""층 ``i`` 에서 ``i+1`` 로의 들어올림과 전체 실행.

부모 ``U`` 마다 세 가지 경우를 만든다.

1. ``U`` 자신 (꼬리만 내린다)
2. ``U = N_i`` 일 때 ``N_i/N_{i+1}`` 의 부분공간 (층마다 한 번 계산)
3. U-불변 진부분공간 ``B`` 마다 ``N_i/B`` 의 여인자

후보는 가지치기 뒤 ``N_S(U)`` 켤레로 융합한다. 서로 다른 부모에서 나온 류는
켤레가 아니므로 부모 사이의 융합은 하지 않는다.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

from holobrace.groups.orbits import conjugation_orbit
from holobrace.groups.perms import Perm
from holobrace.lifting.complements import complements
from holobrace.lifting.context import ClassRep, LiftingContext
from holobrace.lifting.kernel import (
    invariant_submodules,
    kernel_subgroup_classes,
    order_admissible,
    prune,
)
from holobrace.models import LayerStat
from holobrace.pcgs.subgroups import (
    RecordKey,
    SubgroupRecord,
    conjugate_record,
    igs,
    with_tail,
)

logger = logging.getLogger(__name__)


def normalizer(ctx: LiftingContext, record: SubgroupRecord) -> SubgroupRecord:
    """``N_S(U)``: 켤레 궤도의 Schreier 생성원으로 만든 레코드.

    ``U ≥ G_tail`` 이므로 정규화군도 같은 꼬리를 갖는다.
    """
    orbit = conjugation_orbit(
        record.key,
        ctx.hol.generators,
        _record_action(ctx, {record.key: record}),
        ctx.hol.degree,
    )
    expected = ctx.pcgs.order() // len(orbit)
    return igs(
        ctx.pcgs,
        [*record.perms, *orbit.stabilizer],
        tail=record.tail,
        expected_order=expected,
    )


def _record_action(
    ctx: LiftingContext, lookup: dict[RecordKey, SubgroupRecord]
) -> Callable[[RecordKey, Perm], RecordKey]:
    def act(key: RecordKey, s: Perm) -> RecordKey:
        image = conjugate_record(ctx.pcgs, lookup[key], s)
        lookup.setdefault(image.key, image)
        return image.key

    return act


def fuse(
    ctx: LiftingContext, candidates: list[SubgroupRecord], generators: list[Perm]
) -> list[SubgroupRecord]:
    """``generators`` 켤레 궤도마다 최소 키 하나만 남긴다."""
    ordered = sorted({c.key: c for c in candidates}.values(), key=lambda c: c.key)
    if len(ordered) <= 1:
        return ordered
    lookup = {c.key: c for c in ordered}
    act = _record_action(ctx, lookup)
    processed: set[RecordKey] = set()
    out = []
    for cand in ordered:
        if cand.key in processed:
            continue
        orbit = conjugation_orbit(
            cand.key, generators, act, ctx.hol.degree, schreier=False
        )
        processed.update(orbit.points)
        out.append(cand)
    return out


def lift_parent(ctx: LiftingContext, parent: ClassRep) -> list[ClassRep]:
    """층 ``i`` 의 대표 하나를 층 ``i+1`` 의 대표들로 들어올린다."""
    layer = parent.layer + 1
    lay = ctx.layer(layer)
    record = parent.record
    if not record.rows:
        return kernel_subgroup_classes(ctx, layer)

    kernel_order = lay.kernel_record.order
    tagged: list[tuple[SubgroupRecord, int]] = [(with_tail(ctx.pcgs, record, lay.stop), 1)]
    for basis in invariant_submodules(ctx, record, layer):
        quotient = parent.quotient_order * lay.prime ** len(basis)
        if not order_admissible(quotient, kernel_order, ctx.target):
            continue
        tagged.extend((v, 3) for v in complements(ctx, record, basis, layer))

    kept = [(rec, case) for rec, case in tagged if prune(ctx, rec, layer)]
    if len(kept) > 1:
        norm = normalizer(ctx, record)
        gens = [*norm.perms, *(ctx.pcgs.elements[j] for j in lay.positions)]
        survivors = {c.key for c in fuse(ctx, [rec for rec, _ in kept], gens)}
        kept = [(rec, case) for rec, case in kept if rec.key in survivors]

    out = [
        ClassRep(
            rec,
            layer=layer,
            quotient_order=rec.order // kernel_order,
            parent=record.key,
            case=case,
        )
        for rec, case in sorted(kept, key=lambda rc: rc[0].key)
    ]
    logger.debug(
        f"layer {layer}: parent of order {record.order} -> "
        f"{len(tagged)} candidates, {len(out)} classes"
    )
    return out


def lift_layer(ctx: LiftingContext, parents: list[ClassRep]) -> list[ClassRep]:
    """부모 목록 전체를 들어올리고 키 순으로 정렬한다."""
    seen: dict[RecordKey, ClassRep] = {}
    for parent in parents:
        for rep in lift_parent(ctx, parent):
            if rep.key in seen:
                logger.warning(f"duplicate class key at layer {rep.layer}, collapsed")
                continue
            seen[rep.key] = rep
    return [seen[k] for k in sorted(seen)]


@dataclass
class LiftingRun:
    """마지막 층 대표들과 층별 통계."""

    classes: list[ClassRep]
    stats: list[LayerStat] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.classes)


def run_layers(ctx: LiftingContext) -> LiftingRun:
    """``|G|`` 위수의 추이 부분군(= 정칙 부분군)의 S-켤레류를 모두 찾는다."""
    reps = [ctx.root()]
    stats: list[LayerStat] = []
    for layer in range(1, ctx.depth + 1):
        reps = lift_layer(ctx, reps)
        stats.append(LayerStat(layer=layer, classes=len(reps), jobs=1))
        logger.info(f"layer {layer}/{ctx.depth}: {len(reps)} classes")
    return LiftingRun(reps, stats)
