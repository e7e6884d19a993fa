"""순열군: sympy ``PermutationGroup`` 위의 래퍼.

위수, 소속, 궤도, 추이성, 유도열은 sympy 가 계산한다. pcgs 좌표계가 쓰는
튜플 순열 체와 잉여류 대표원은 sympy 가 만든 기저와 기본 횡단에서 꺼낸다.
"""

import logging
import random
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.core import random as sympy_random

from holobrace.errors import InsolubleGroupError, InvalidGroupError
from holobrace.groups.perms import Perm, conj, identity, inv, is_identity, mul

logger = logging.getLogger(__name__)

# 정규 폐포가 난수를 쓰므로 유도열 계산 전에 고정한다
DERIVED_SERIES_SEED = 0


def to_sympy(g: Perm) -> Permutation:
    return Permutation(list(g))


def from_sympy(g: Permutation | Sequence[int]) -> Perm:
    """sympy 순열 또는 배열 형태를 튜플 순열로."""
    form = g.array_form if isinstance(g, Permutation) else g
    return tuple(int(x) for x in form)


@dataclass(frozen=True, slots=True)
class _Level:
    """사슬의 한 단계: 기저점과 ``궤도점 → (u, u⁻¹)``, ``u(point) == 궤도점``."""

    point: int
    transversal: dict[int, tuple[Perm, Perm]]


class StabilizerChain:
    """sympy BSGS 의 기저점과 기본 횡단을 튜플 순열로 옮긴 사슬."""

    def __init__(self, group: PermutationGroup) -> None:
        self.degree = int(group.degree)
        self.levels: list[_Level] = []
        if group.is_trivial:
            return
        for point, transversal in zip(
            group.base, group.basic_transversals, strict=True
        ):
            table: dict[int, tuple[Perm, Perm]] = {}
            for c in sorted(transversal):
                u = from_sympy(transversal[c])
                table[int(c)] = (u, inv(u))
            self.levels.append(_Level(int(point), table))

    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self.levels]

    def order(self) -> int:
        result = 1
        for lvl in self.levels:
            result *= len(lvl.transversal)
        return result

    def coset_minimum(self, x: Perm) -> Perm:
        """오른쪽 잉여류 ``x·H`` 의 정규 대표원.

        기저점 위의 상을 사전식으로 최소화한 원소이며 잉여류마다 유일하다.
        """
        for lvl in self.levels:
            best = min(lvl.transversal, key=lambda c: x[c])
            x = mul(x, lvl.transversal[best][0])
        return x

    def elements(self) -> Iterator[Perm]:
        """모든 원소 (결정적 순서)."""

        def walk(i: int, prefix: Perm) -> Iterator[Perm]:
            if i == len(self.levels):
                yield prefix
                return
            for u, _ in self.levels[i].transversal.values():
                yield from walk(i + 1, mul(prefix, u))

        yield from walk(0, identity(self.degree))

    def random_element(self, rng: random.Random) -> Perm:
        """균등 분포 원소."""
        out = identity(self.degree)
        for lvl in self.levels:
            u, _ = rng.choice(list(lvl.transversal.values()))
            out = mul(out, u)
        return out


class PermGroup:
    """생성원으로 주어진 순열군. sympy 군과 사슬은 처음 필요할 때 만든다."""

    def __init__(self, degree: int, generators: Iterable[Perm]) -> None:
        self.degree = degree
        gens: list[Perm] = []
        for g in dict.fromkeys(generators):
            if len(g) != degree:
                raise InvalidGroupError(f"generator of degree {len(g)} != {degree}")
            if not is_identity(g):
                gens.append(g)
        self.generators: tuple[Perm, ...] = tuple(gens)
        self._sympy: PermutationGroup | None = None
        self._chain: StabilizerChain | None = None

    @classmethod
    def from_sympy(cls, group: PermutationGroup) -> "PermGroup":
        out = cls(int(group.degree), (from_sympy(g) for g in group.generators))
        out._sympy = group
        return out

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order()})"

    @property
    def sympy(self) -> PermutationGroup:
        if self._sympy is None:
            gens = self.generators or (identity(self.degree),)
            self._sympy = PermutationGroup([to_sympy(g) for g in gens])
        return self._sympy

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.sympy)
        return self._chain

    def order(self) -> int:
        return int(self.sympy.order())

    def contains(self, g: Perm) -> bool:
        return len(g) == self.degree and bool(self.sympy.contains(to_sympy(g)))

    def coset_minimum(self, x: Perm) -> Perm:
        return self.chain.coset_minimum(x)

    def elements(self) -> Iterator[Perm]:
        return self.chain.elements()

    def is_trivial(self) -> bool:
        return not self.generators

    def orbit(self, point: int) -> set[int]:
        return {int(x) for x in self.sympy.orbit(point)}

    def orbits(self) -> list[set[int]]:
        return [{int(x) for x in o} for o in self.sympy.orbits()]

    def is_transitive(self) -> bool:
        return bool(self.sympy.is_transitive())

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and bool(self.sympy.is_subgroup(other.sympy))

    def is_normal_in(self, other: "PermGroup") -> bool:
        """``self`` 가 ``other`` 의 정규 부분군인지 생성원 켤레로 확인한다."""
        return self.is_subgroup_of(other) and all(
            self.contains(conj(n, s)) for n in self.generators for s in other.generators
        )

    def derived_subgroup(self) -> "PermGroup":
        return PermGroup.from_sympy(self.sympy.derived_subgroup())


def derived_series(group: PermGroup) -> list[PermGroup]:
    """``[G, G', G'', …, 1]``. 1에 도달하지 않으면 가해군이 아니다."""
    sympy_random.seed(DERIVED_SERIES_SEED)
    series = [group, *(PermGroup.from_sympy(h) for h in group.sympy.derived_series()[1:])]
    if not series[-1].is_trivial():
        raise InsolubleGroupError(
            f"derived series stalls at order {series[-1].order()}; "
            "the holomorph is not soluble"
        )
    logger.debug(f"derived series orders: {[g.order() for g in series]}")
    return series
