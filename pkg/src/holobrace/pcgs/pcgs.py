"""정규열에 맞춘 다순환 생성열(pcgs)과 지수 벡터 좌표계.

원소 ``x ∈ S`` 는 ``x = g_1^{e_1} g_2^{e_2} ⋯ g_n^{e_n}`` (``0 ≤ e_j < p_j``) 로
유일하게 쓰인다. 층 ``L`` 의 원소들은 위치 ``boundaries[L-1] .. boundaries[L]-1``
에 놓이며 ``N_{L-1}/N_L`` 의 기저를 이룬다.
"""

import hashlib
import logging
import math
from collections.abc import Iterator, Sequence
from functools import cached_property

from holobrace.config import settings
from holobrace.errors import NotInGroupError, SeriesError, ShardFormatError
from holobrace.groups.permgroup import PermGroup
from holobrace.groups.perms import Perm, identity, inv, mul, power
from holobrace.groups.series import NormalSeries

logger = logging.getLogger(__name__)

type ExponentVector = tuple[int, ...]


class Pcgs:
    """``S`` 의 pcgs.

    ``|S| ≤ element_table_limit`` 이면 기저점 상 → 지수 벡터 전체 테이블을 만들고,
    그보다 크면 층마다 ``N_L`` 잉여류의 정규 대표원 테이블을 쓴다.
    """

    def __init__(
        self,
        group: PermGroup,
        elements: Sequence[Perm],
        primes: Sequence[int],
        boundaries: Sequence[int],
        table_limit: int | None = None,
    ) -> None:
        self.group = group
        self.degree = group.degree
        self.elements: tuple[Perm, ...] = tuple(elements)
        self.primes: tuple[int, ...] = tuple(primes)
        self.boundaries: tuple[int, ...] = tuple(boundaries)
        n = len(self.elements)
        if len(self.primes) != n or self.boundaries[0] != 0 or self.boundaries[-1] != n:
            raise SeriesError("inconsistent pcgs data")
        if math.prod(self.primes) != group.order():
            raise SeriesError(
                f"relative orders multiply to {math.prod(self.primes)}, "
                f"but |S| = {group.order()}"
            )

        # g_j^e, 0 ≤ e < p_j
        self._powers = [
            [power(g, e) for e in range(p)]
            for g, p in zip(self.elements, self.primes, strict=True)
        ]
        self.radices = tuple(math.prod(self.primes[:j]) for j in range(n + 1))
        self.kernels = [
            PermGroup(self.degree, self.elements[b:]) for b in self.boundaries
        ]
        self._base = tuple(group.chain.base)

        limit = settings.element_table_limit if table_limit is None else table_limit
        self._table: dict[tuple[int, ...], ExponentVector] | None = None
        self._layer_tables: list[dict[tuple[int, ...], ExponentVector]] = []
        if group.order() <= limit:
            self._table = self._build_element_table()
        else:
            self._layer_tables = self._build_layer_tables()
        logger.debug(
            f"pcgs of length {n}, relative orders {self.primes}, "
            f"{'element' if self._table is not None else 'coset'} tables"
        )

    @property
    def length(self) -> int:
        return len(self.elements)

    @property
    def layers(self) -> int:
        return len(self.boundaries) - 1

    def order(self) -> int:
        return self.radices[-1]

    def positions(self, layer: int) -> range:
        """층 ``layer`` (1부터) 의 pcgs 위치."""
        return range(self.boundaries[layer - 1], self.boundaries[layer])

    def layer_prime(self, layer: int) -> int:
        return self.primes[self.boundaries[layer - 1]]

    def layer_rank(self, layer: int) -> int:
        return self.boundaries[layer] - self.boundaries[layer - 1]

    def tail_order(self, tail: int) -> int:
        """``|G_tail| = Π_{j ≥ tail} p_j``."""
        return self.order() // self.radices[tail]

    @cached_property
    def _kernel_blocks(self) -> list[list[int]]:
        blocks = []
        for kernel in self.kernels:
            block_of = list(range(self.degree))
            for points in kernel.orbits():
                least = min(points)
                for y in points:
                    block_of[y] = least
            blocks.append(block_of)
        return blocks

    def kernel_blocks(self, layer: int) -> list[int]:
        """``N_layer`` 궤도: 점 → 그 궤도의 최소점."""
        return self._kernel_blocks[layer]

    def _key(self, x: Perm) -> tuple[int, ...]:
        return tuple(x[b] for b in self._base)

    def _build_element_table(self) -> dict[tuple[int, ...], ExponentVector]:
        table: dict[tuple[int, ...], ExponentVector] = {}
        n = self.length
        stack: list[tuple[int, Perm, ExponentVector]] = [(0, identity(self.degree), ())]
        while stack:
            j, prefix, vec = stack.pop()
            if j == n:
                table[self._key(prefix)] = vec
                continue
            for e in range(self.primes[j]):
                stack.append((j + 1, mul(prefix, self._powers[j][e]), (*vec, e)))
        return table

    def _build_layer_tables(self) -> list[dict[tuple[int, ...], ExponentVector]]:
        tables = []
        for layer in range(1, self.layers + 1):
            kernel = self.kernels[layer]
            pos = self.positions(layer)
            p = self.layer_prime(layer)
            table: dict[tuple[int, ...], ExponentVector] = {}
            words: list[tuple[Perm, ExponentVector]] = [(identity(self.degree), ())]
            for j in pos:
                words = [
                    (mul(w, self._powers[j][e]), (*vec, e))
                    for w, vec in words
                    for e in range(p)
                ]
            for w, vec in words:
                table[self._key(kernel.coset_minimum(w))] = vec
            tables.append(table)
        return tables

    def word(self, vec: Sequence[int], start: int = 0) -> Perm:
        """``Π g_j^{vec[j - start]}`` (위치 ``start`` 부터)."""
        out = identity(self.degree)
        for j, e in enumerate(vec, start):
            if e:
                out = mul(out, self._powers[j][e % self.primes[j]])
        return out

    def layer_vector(self, x: Perm, layer: int) -> ExponentVector:
        """``x ∈ N_{layer-1}`` 의 ``N_{layer-1}/N_layer`` 좌표."""
        if self._table is not None:
            pos = self.positions(layer)
            return self._table[self._key(x)][pos.start : pos.stop]
        kernel = self.kernels[layer]
        return self._layer_tables[layer - 1][self._key(kernel.coset_minimum(x))]

    def exponents(self, x: Perm, stop: int | None = None) -> ExponentVector:
        """``x ∈ S`` 의 지수 벡터 앞 ``stop`` 성분 (층 경계에서 끊는다).

        소속 검사는 하지 않는다.
        """
        stop = self.length if stop is None else stop
        if self._table is not None:
            return self._table[self._key(x)][:stop]
        out: list[int] = []
        for layer in range(1, self.layers + 1):
            if self.boundaries[layer - 1] >= stop:
                break
            vec = self.layer_vector(x, layer)
            out.extend(vec)
            x = mul(inv(self.word(vec, self.boundaries[layer - 1])), x)
        return tuple(out[:stop])

    def exponent_vector(self, x: Perm) -> ExponentVector:
        """검증된 지수 벡터. ``x ∉ S`` 이면 :class:`NotInGroupError`."""
        if len(x) != self.degree or not self.group.contains(x):
            raise NotInGroupError("element is not in the group of the pcgs")
        return self.exponents(x)

    def depth(self, vec: Sequence[int], stop: int | None = None) -> int:
        """첫 번째 0 아닌 위치 (없으면 ``stop``)."""
        stop = len(vec) if stop is None else stop
        return next((j for j in range(stop) if vec[j]), stop)

    def pack(self, vec: Sequence[int]) -> int:
        """``e_1 + p_1·(e_2 + p_2·(…))``."""
        out = 0
        for e, p in zip(reversed(vec), reversed(self.primes), strict=True):
            out = out * p + e
        return out

    def unpack(self, value: int) -> ExponentVector:
        if not 0 <= value < self.order():
            raise ShardFormatError(f"packed value {value} out of range for this pcgs")
        out = []
        for p in self.primes:
            value, e = divmod(value, p)
            out.append(e)
        return tuple(out)

    def unit(self, j: int) -> ExponentVector:
        return tuple(1 if k == j else 0 for k in range(self.length))

    def iter_tail(self, tail: int) -> Iterator[Perm]:
        """``G_tail`` 의 모든 원소."""
        words: list[Perm] = [identity(self.degree)]
        for j in range(tail, self.length):
            words = [mul(w, self._powers[j][e]) for w in words for e in range(self.primes[j])]
        yield from words


def pcgs_from_series(series: NormalSeries, table_limit: int | None = None) -> Pcgs:
    """각 인자 ``N_{i-1}/N_i`` 에서 기저를 골라 pcgs 를 만든다."""
    s = series.group
    elements: list[Perm] = []
    primes: list[int] = []
    boundaries = [0]
    for top, bottom, p in zip(
        series.members, series.members[1:], series.primes, strict=False
    ):
        span = PermGroup(s.degree, bottom.generators)
        for g in top.generators:
            if not span.contains(g):
                elements.append(g)
                primes.append(p)
                span = PermGroup(s.degree, [*span.generators, g])
        boundaries.append(len(elements))
    return Pcgs(s, elements, primes, boundaries, table_limit)


def series_fingerprint(descriptor: str, pcgs: Pcgs) -> str:
    """서술자, 층 경계, 상대 위수, pcgs 원소의 SHA-256 앞 16자리."""
    h = hashlib.sha256()
    h.update(descriptor.encode())
    h.update(repr(pcgs.boundaries).encode())
    h.update(repr(pcgs.primes).encode())
    for g in pcgs.elements:
        h.update(",".join(map(str, g)).encode())
        h.update(b";")
    return h.hexdigest()[:16]
