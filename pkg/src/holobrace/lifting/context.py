"""층별 들어올림에 쓰는 공유 불변 데이터."""

import logging
from dataclasses import dataclass, field

from holobrace.groups import gfp
from holobrace.groups.abelian import AbelianGroup
from holobrace.groups.holomorph import holomorph
from holobrace.groups.permgroup import PermGroup
from holobrace.groups.perms import Perm, conj, fmt_perm
from holobrace.groups.series import (
    NormalSeries,
    SeriesStrategy,
    elementary_abelian_series,
    validate_series,
)
from holobrace.pcgs.pcgs import Pcgs, pcgs_from_series, series_fingerprint
from holobrace.pcgs.subgroups import RecordKey, SubgroupRecord, full_record

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Layer:
    """층 ``index`` : 핵 ``N_index`` 와 인자 ``N_{index-1}/N_index`` (위수 ``p^d``)."""

    index: int
    kernel: PermGroup
    kernel_record: SubgroupRecord
    prime: int
    rank: int
    positions: range
    subspaces: tuple[gfp.Matrix, ...]
    action: dict[Perm, gfp.Matrix]

    @property
    def start(self) -> int:
        return self.positions.start

    @property
    def stop(self) -> int:
        return self.positions.stop


@dataclass(frozen=True, slots=True)
class ClassRep:
    """층 ``layer`` 의 켤레류 대표 (``N_layer ≤ U`` 인 완전 역상)."""

    record: SubgroupRecord
    layer: int
    quotient_order: int
    parent: RecordKey | None = None
    case: int = 0

    @property
    def key(self) -> RecordKey:
        return self.record.key


def module_matrix(pcgs: Pcgs, layer: int, y: Perm) -> gfp.Matrix:
    """``a ↦ y⁻¹ a y`` 의 ``N_{layer-1}/N_layer`` 위 행렬 (행 벡터 규약)."""
    return gfp.as_matrix(
        [pcgs.layer_vector(conj(pcgs.elements[j], y), layer) for j in pcgs.positions(layer)],
        pcgs.layer_rank(layer),
        pcgs.layer_prime(layer),
    )


@dataclass
class LiftingContext:
    """군, 정규열, pcgs, 층 데이터. 한 번 만들고 나면 읽기만 한다."""

    group: AbelianGroup
    series: NormalSeries
    pcgs: Pcgs
    strategy: str = "power"
    layers: list[Layer] = field(default_factory=list)
    kernel_cache: dict[int, list[ClassRep]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.layers:
            self.layers = [self._make_layer(i) for i in range(1, self.pcgs.layers + 1)]

    def _make_layer(self, index: int) -> Layer:
        pcgs = self.pcgs
        p = pcgs.layer_prime(index)
        d = pcgs.layer_rank(index)
        return Layer(
            index=index,
            kernel=pcgs.kernels[index],
            kernel_record=full_record(pcgs, pcgs.boundaries[index]),
            prime=p,
            rank=d,
            positions=pcgs.positions(index),
            subspaces=tuple(gfp.all_subspaces(d, p)),
            action={s: module_matrix(pcgs, index, s) for s in self.hol.generators},
        )

    @property
    def hol(self) -> PermGroup:
        return self.pcgs.group

    @property
    def target(self) -> int:
        return self.group.order

    @property
    def depth(self) -> int:
        """층 수 ``r``."""
        return self.pcgs.layers

    def layer(self, index: int) -> Layer:
        return self.layers[index - 1]

    def kernel_record(self, index: int) -> SubgroupRecord:
        """``N_index`` (``index = 0`` 이면 ``S``)."""
        return full_record(self.pcgs, self.pcgs.boundaries[index])

    def fingerprint(self) -> str:
        return series_fingerprint(self.group.descriptor, self.pcgs)

    def root(self) -> ClassRep:
        """층 0의 유일한 대표 ``S``."""
        return ClassRep(full_record(self.pcgs, 0), layer=0, quotient_order=1)


def build_context(
    group: AbelianGroup,
    strategy: SeriesStrategy = "power",
    members: list[list[Perm]] | None = None,
    max_order: int | None = None,
) -> LiftingContext:
    """``Hol(G)``, 정규열, pcgs 를 만든다. ``members`` 가 있으면 검증해 쓴다."""
    s = holomorph(group, max_order)
    logger.debug(f"Hol generators: {', '.join(fmt_perm(g) for g in s.generators)}")
    if members is not None:
        series = validate_series(s, members)
        strategy_name = "file"
    else:
        series = elementary_abelian_series(s, strategy)
        strategy_name = strategy
    pcgs = pcgs_from_series(series)
    ctx = LiftingContext(group, series, pcgs, strategy_name)
    logger.info(
        f"context for {group.descriptor}: |S| = {s.order()}, "
        f"{ctx.depth} layers, ranks {series.ranks}"
    )
    return ctx
