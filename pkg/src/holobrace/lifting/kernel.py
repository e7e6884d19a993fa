"""가지치기, 핵 부분군류(case 2), 불변 부분가군."""

import logging

from holobrace.groups import gfp
from holobrace.groups.orbits import conjugation_orbit
from holobrace.groups.perms import Perm
from holobrace.lifting.context import ClassRep, LiftingContext, module_matrix
from holobrace.pcgs.pcgs import Pcgs
from holobrace.pcgs.subgroups import SubgroupRecord, make_record

logger = logging.getLogger(__name__)


def is_transitive_mod(pcgs: Pcgs, layer: int, perms: tuple[Perm, ...]) -> bool:
    """``⟨perms⟩·N_layer`` 의 추이성.

    ``N_layer`` 궤도는 ``S`` 의 블록계이므로 블록 위에서 BFS 한다.
    """
    blocks = pcgs.kernel_blocks(layer)
    start = blocks[0]
    seen = {start}
    stack = [start]
    while stack:
        b = stack.pop()
        for g in perms:
            c = blocks[g[b]]
            if c not in seen:
                seen.add(c)
                stack.append(c)
    return len(seen) == len(set(blocks))


def order_admissible(quotient_order: int, kernel_order: int, target: int) -> bool:
    """``|U/N_i|`` 가 target 을 나누고 ``target/|U/N_i| ≤ |N_i|``."""
    return target % quotient_order == 0 and target // quotient_order <= kernel_order


def prune(ctx: LiftingContext, record: SubgroupRecord, layer: int) -> bool:
    """후보가 살아남으면 ``True``.

    위수 조건 두 가지와 역상의 추이성을 모두 만족해야 한다.
    """
    kernel_order = ctx.pcgs.tail_order(ctx.pcgs.boundaries[layer])
    quotient = record.order // kernel_order
    if not order_admissible(quotient, kernel_order, ctx.target):
        return False
    return is_transitive_mod(ctx.pcgs, layer, record.perms)


def subspace_record(ctx: LiftingContext, layer: int, basis: gfp.Matrix) -> SubgroupRecord:
    """``W·N_layer`` (``W ≤ N_{layer-1}/N_layer``) 레코드."""
    lay = ctx.layer(layer)
    n = ctx.pcgs.length
    rows = []
    for w in basis:
        row = [0] * n
        row[lay.start : lay.stop] = (int(x) for x in w)
        rows.append(row)
    return make_record(ctx.pcgs, rows, lay.stop)


def kernel_subgroup_classes(ctx: LiftingContext, layer: int) -> list[ClassRep]:
    """``N_{layer-1}/N_layer`` 의 모든 부분공간을 S-켤레로 융합한다.

    정렬된 키 순서로 훑어 궤도의 최소 키를 대표로 낸다.
    """
    if layer in ctx.kernel_cache:
        return ctx.kernel_cache[layer]
    lay = ctx.layer(layer)
    p = lay.prime
    kernel_order = lay.kernel_record.order
    records = {}
    for w in lay.subspaces:
        rec = subspace_record(ctx, layer, w)
        records[gfp.subspace_key(w)] = (w, rec)

    def act(key: gfp.SubspaceKey, s: Perm) -> gfp.SubspaceKey:
        w = records[key][0]
        image, _ = gfp.rref(gfp.matmul(w, lay.action[s], p), p)
        return gfp.subspace_key(image)

    ordered = sorted(records, key=lambda k: records[k][1].key)
    processed: set[gfp.SubspaceKey] = set()
    out: list[ClassRep] = []
    for key in ordered:
        if key in processed:
            continue
        orbit = conjugation_orbit(
            key, ctx.hol.generators, act, ctx.hol.degree, schreier=False
        )
        processed.update(orbit.points)
        rec = records[key][1]
        if prune(ctx, rec, layer):
            out.append(
                ClassRep(
                    rec,
                    layer=layer,
                    quotient_order=rec.order // kernel_order,
                    parent=ctx.kernel_record(layer - 1).key,
                    case=2,
                )
            )
    logger.debug(
        f"layer {layer}: {len(lay.subspaces)} subspaces, {len(out)} kernel classes"
    )
    ctx.kernel_cache[layer] = out
    return out


def invariant_submodules(
    ctx: LiftingContext, parent: SubgroupRecord, layer: int
) -> list[gfp.Matrix]:
    """``U`` 의 켤레 작용 아래 불변인 진부분공간 ``B/N_layer``."""
    lay = ctx.layer(layer)
    mats = [module_matrix(ctx.pcgs, layer, u) for u in parent.perms]
    return [
        w
        for w in lay.subspaces
        if len(w) < lay.rank and gfp.is_invariant(w, mats, lay.prime)
    ]
