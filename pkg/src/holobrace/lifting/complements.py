"""여인자(complement) 계산: 1-코사이클 연립방정식.

``U = ⟨u_1, …, u_m⟩·N_{i}`` 와 U-불변 ``B`` (``N_{i+1} ≤ B < N_i``) 가 주어지면
``V = ⟨u_l·t_l⟩·B`` (``t_l ∈ M = N_i/B``) 가 여인자일 조건은 ``U/N_i`` 의
다순환 표시의 모든 관계가 ``M`` 에서 성립하는 것이다. 각 관계는 ``t`` 에 대한
아핀 일차식 하나가 된다.

글자 ``u_l`` 은 ``t_l·S_q`` 를, ``u_l⁻¹`` 은 ``−t_l·M_l⁻¹·S_q`` 를 남긴다.
``S_q`` 는 그 글자 오른쪽 접미어의 작용 행렬이다.
"""

import logging
from collections.abc import Sequence

import numpy as np

from holobrace.groups import gfp
from holobrace.lifting.context import LiftingContext, module_matrix
from holobrace.pcgs.subgroups import (
    PcPresentation,
    SubgroupRecord,
    make_record,
    pc_presentation,
)

logger = logging.getLogger(__name__)


def _letter_sums(
    letters: Sequence[tuple[int, int]],
    mats: Sequence[gfp.Matrix],
    inv_mats: Sequence[gfp.Matrix],
    p: int,
) -> dict[int, gfp.Matrix]:
    """단어 ``letters`` 의 ``t`` 계수 행렬을 행 번호별로 모은다."""
    d = mats[0].shape[0]
    out: dict[int, gfp.Matrix] = {}
    suffix = gfp.identity(d)
    for l, e in reversed(letters):
        if e > 0:
            term = suffix
            letter = mats[l]
        else:
            term = (-inv_mats[l] @ suffix) % p
            letter = inv_mats[l]
        out[l] = (out.get(l, np.zeros((d, d), dtype=np.int64)) + term) % p
        suffix = gfp.matmul(letter, suffix, p)
    return out


def cocycle_system(
    ctx: LiftingContext,
    presentation: PcPresentation,
    layer: int,
    basis: gfp.Matrix,
) -> tuple[gfp.Matrix, gfp.Matrix, gfp.Matrix]:
    """``τ·A = h`` 형태의 연립방정식 ``(A, h, E)``.

    ``τ = (τ_1 | … | τ_m)`` 는 몫 ``GF(p)^d / W_B`` 의 자유 열 좌표이며
    ``t_l = τ_l·E`` 로 되돌린다.
    """
    lay = ctx.layer(layer)
    p, d = lay.prime, lay.rank
    pivots = tuple(int(np.nonzero(row)[0][0]) for row in basis)
    q, e = gfp.quotient_maps(basis, pivots, d, p)
    f = q.shape[1]
    m = len(presentation.generators)
    mats = [module_matrix(ctx.pcgs, layer, u) for u in presentation.generators]
    inv_mats = [gfp.inverse(mt, p) for mt in mats]

    nrel = len(presentation.relations)
    a = np.zeros((m * f, nrel * f), dtype=np.int64)
    h = np.zeros(nrel * f, dtype=np.int64)
    for r, rel in enumerate(presentation.relations):
        lhs = _letter_sums(rel.lhs, mats, inv_mats, p)
        rhs = _letter_sums([(i, 1) for i in rel.rhs], mats, inv_mats, p)
        for l in range(m):
            x = (lhs.get(l, 0) - rhs.get(l, 0)) % p
            if isinstance(x, np.ndarray) and x.any():
                a[l * f : (l + 1) * f, r * f : (r + 1) * f] = (e @ x @ q) % p
        c = np.array(ctx.pcgs.layer_vector(rel.remainder, layer), dtype=np.int64)
        h[r * f : (r + 1) * f] = (-(c @ q)) % p
    return a, h, e


def complements(
    ctx: LiftingContext, parent: SubgroupRecord, basis: gfp.Matrix, layer: int
) -> list[SubgroupRecord]:
    """``V·N_{layer-1} = U`` 이고 ``V ∩ N_{layer-1} = B`` 인 모든 ``V``.

    연립방정식이 모순이면 (분할되지 않는 확대) 빈 목록이다.
    """
    if not parent.rows:
        raise ValueError("complements need a parent with nontrivial image")
    lay = ctx.layer(layer)
    p, n = lay.prime, ctx.pcgs.length
    presentation = pc_presentation(ctx.pcgs, parent)
    a, h, e = cocycle_system(ctx, presentation, layer, basis)
    f = e.shape[0]
    particular, null = gfp.solve_affine(a.T, h, p)
    if particular is None:
        return []

    b_rows = []
    for w in basis:
        row = [0] * n
        row[lay.start : lay.stop] = (int(x) for x in w)
        b_rows.append(row)

    out = []
    for tau in gfp.iter_affine(particular, null, p):
        rows = []
        for l, u in enumerate(parent.rows):
            t = (tau[l * f : (l + 1) * f] @ e) % p
            row = list(u)
            row[lay.start : lay.stop] = (int(x) for x in t)
            rows.append(row)
        out.append(make_record(ctx.pcgs, [*rows, *b_rows], lay.stop))
    logger.debug(
        f"layer {layer}: {len(out)} complements for dim B = {len(basis)}"
    )
    return out
