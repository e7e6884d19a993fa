"""기본 아벨 인자를 갖는 정규열.

유도열의 각 아벨 인자를 ``A ≥ A^p ≥ …`` 로 쪼갠다. ``chief`` 전략은
``S'`` 아래 인자들을 다시 주인자(chief factor)로 세분한다.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np
from sympy import factorint

from holobrace.errors import SeriesError
from holobrace.groups import gfp
from holobrace.groups.permgroup import PermGroup, derived_series
from holobrace.groups.perms import Perm, check_perm, comm, conj, identity, mul, power
from holobrace.models import SeriesFile

logger = logging.getLogger(__name__)

type SeriesStrategy = Literal["power", "chief"]


@dataclass(frozen=True, slots=True)
class NormalSeries:
    """``S = N_0 ≥ N_1 ≥ … ≥ N_r = 1``. ``N_{i-1}/N_i`` 은 위수 ``p_i^{d_i}``."""

    members: tuple[PermGroup, ...]
    primes: tuple[int, ...]
    ranks: tuple[int, ...]

    @property
    def group(self) -> PermGroup:
        return self.members[0]

    @property
    def length(self) -> int:
        return len(self.members) - 1

    def orders(self) -> list[int]:
        return [m.order() for m in self.members]


def _prime_power(n: int) -> tuple[int, int] | None:
    f = factorint(n)
    if len(f) != 1:
        return None
    ((p, e),) = f.items()
    return int(p), int(e)


def _factor_data(top: PermGroup, bottom: PermGroup) -> tuple[int, int]:
    index = top.order() // bottom.order()
    pe = _prime_power(index)
    if pe is None:
        raise SeriesError(f"factor of order {index} is not a p-group")
    return pe


def _is_elementary_abelian_factor(top: PermGroup, bottom: PermGroup, p: int) -> bool:
    gens = top.generators
    return all(bottom.contains(power(g, p)) for g in gens) and all(
        bottom.contains(comm(a, b)) for a in gens for b in gens
    )


def _power_steps(top: PermGroup, bottom: PermGroup) -> list[PermGroup]:
    """아벨 인자 ``top/bottom`` 사이의 ``A^p`` 사슬 (top 제외, bottom 포함)."""
    steps: list[PermGroup] = []
    current = top
    while current.order() > bottom.order():
        index = current.order() // bottom.order()
        p = min(int(q) for q in factorint(index))
        current = PermGroup(
            top.degree,
            [*bottom.generators, *(power(g, p) for g in current.generators)],
        )
        steps.append(current)
    return steps


class _FactorModule:
    """기본 아벨 인자 ``top/bottom`` 을 ``GF(p)^d`` 좌표로 본다."""

    def __init__(self, top: PermGroup, bottom: PermGroup, p: int) -> None:
        self.p = p
        self.bottom = bottom
        self.basis: list[Perm] = []
        span = PermGroup(top.degree, bottom.generators)
        for g in top.generators:
            if not span.contains(g):
                self.basis.append(g)
                span = PermGroup(top.degree, [*span.generators, g])
        self.d = len(self.basis)
        self._coords: dict[Perm, tuple[int, ...]] = {}
        for vec in np.ndindex(*([p] * self.d)):
            self._coords[bottom.coset_minimum(self.word(vec))] = tuple(vec)

    def word(self, vec: tuple[int, ...] | np.ndarray) -> Perm:
        out = identity(self.bottom.degree)
        for b, e in zip(self.basis, vec, strict=True):
            if e:
                out = mul(out, power(b, int(e)))
        return out

    def coords(self, x: Perm) -> tuple[int, ...]:
        return self._coords[self.bottom.coset_minimum(x)]

    def action(self, s: Perm) -> np.ndarray:
        return np.array([self.coords(conj(b, s)) for b in self.basis], dtype=np.int64)


def _chief_steps(
    s: PermGroup, top: PermGroup, bottom: PermGroup, p: int
) -> list[PermGroup]:
    """``top/bottom`` 을 S-불변 극대 부분공간을 따라 주인자로 쪼갠다."""
    module = _FactorModule(top, bottom, p)
    mats = [module.action(g) for g in s.generators]
    invariant = [
        w for w in gfp.all_subspaces(module.d, p) if gfp.is_invariant(w, mats, p)
    ]
    steps: list[PermGroup] = []
    current = gfp.identity(module.d)
    while len(current):
        below = [
            w
            for w in invariant
            if len(w) < len(current) and gfp.contains_subspace(current, w, p)
        ]
        nxt = max(below, key=len)
        gens = [*bottom.generators, *(module.word(row) for row in nxt)]
        steps.append(PermGroup(top.degree, gens))
        current = nxt
    return steps


def elementary_abelian_series(
    s: PermGroup, strategy: SeriesStrategy = "power"
) -> NormalSeries:
    """유도열을 세분해 기본 아벨 인자를 갖는 S-정규열을 만든다."""
    derived = derived_series(s)
    members = [s]
    for depth, (top, bottom) in enumerate(zip(derived, derived[1:], strict=False)):
        steps = _power_steps(top, bottom)
        if strategy == "chief" and depth >= 1:
            refined: list[PermGroup] = []
            upper = top
            for lower in steps:
                p, _ = _factor_data(upper, lower)
                refined.extend(_chief_steps(s, upper, lower, p))
                upper = lower
            steps = refined
        members.extend(steps)
    series = _tag(members)
    logger.info(
        f"{strategy} series of length {series.length}: orders {series.orders()}"
    )
    return series


def _tag(members: list[PermGroup]) -> NormalSeries:
    primes, ranks = [], []
    for top, bottom in zip(members, members[1:], strict=False):
        p, d = _factor_data(top, bottom)
        primes.append(p)
        ranks.append(d)
    return NormalSeries(tuple(members), tuple(primes), tuple(ranks))


def validate_series(s: PermGroup, members: list[list[Perm]]) -> NormalSeries:
    """사용자가 준 ``N_1 … N_{r-1}`` 을 검증해 정규열로 만든다.

    각 원소의 정규성, 포함 관계, 기본 아벨 인자를 모두 확인한다.
    """
    if s.is_trivial() and not members:
        return _tag([s])
    groups = [s, *(PermGroup(s.degree, gens) for gens in members)]
    groups.append(PermGroup(s.degree, []))
    for i, (top, bottom) in enumerate(zip(groups, groups[1:], strict=False), 1):
        if not bottom.is_normal_in(s):
            raise SeriesError(f"N_{i} is not normal in S")
        if not bottom.is_subgroup_of(top):
            raise SeriesError(f"N_{i} is not contained in N_{i - 1}")
        if bottom.order() == top.order():
            raise SeriesError(f"N_{i} equals N_{i - 1}")
        p, _ = _factor_data(top, bottom)
        if not _is_elementary_abelian_factor(top, bottom, p):
            raise SeriesError(f"N_{i - 1}/N_{i} is not elementary abelian")
    return _tag(groups)


def read_series_file(path: Path, degree: int) -> list[list[Perm]]:
    """JSON 정규열 파일을 읽는다."""
    data = SeriesFile.model_validate_json(path.read_text(encoding="utf-8"))
    try:
        return [[check_perm(p, degree) for p in gens] for gens in data.members]
    except ValueError as e:
        raise SeriesError(f"{path}: {e}") from e
