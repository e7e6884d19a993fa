"""부분군 레코드: 유도 생성열(igs)의 정규형.

레코드는 ``⟨perms⟩·G_tail`` 을 뜻한다. ``tail`` 은 항상 층 경계이고
행 벡터는 다음을 만족한다.

- 선두 위치가 순증가하고 모두 ``tail`` 보다 작다
- 선두 성분은 1, 다른 행의 선두 위치 성분은 0
- ``tail`` 이상 위치의 성분은 0

이 정규형은 부분군마다 유일하므로 그대로 중복 제거 키가 된다.
"""

import itertools
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from holobrace.errors import ShardFormatError
from holobrace.groups.abelian import AbelianGroup
from holobrace.groups.holomorph import translation_generators
from holobrace.groups.perms import Perm, comm, conj, identity, inv, mul, power
from holobrace.pcgs.pcgs import ExponentVector, Pcgs

logger = logging.getLogger(__name__)

type RecordKey = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class SubgroupRecord:
    """정규 igs 로 저장한 부분군 ``⟨perms⟩·G_tail``."""

    rows: tuple[ExponentVector, ...]
    perms: tuple[Perm, ...]
    tail: int
    key: RecordKey
    order: int

    @property
    def leads(self) -> tuple[int, ...]:
        return tuple(next(j for j, e in enumerate(row) if e) for row in self.rows)

    def __lt__(self, other: "SubgroupRecord") -> bool:
        return self.key < other.key


def make_record(pcgs: Pcgs, rows: Iterable[Sequence[int]], tail: int) -> SubgroupRecord:
    """이미 정규형인 행으로 레코드를 만든다. 순열은 행의 pcgs 단어다."""
    rows_t = tuple(tuple(int(e) for e in row) for row in rows)
    perms = tuple(pcgs.word(row) for row in rows_t)
    key = tuple(pcgs.pack(row) for row in rows_t) + tuple(
        pcgs.radices[j] for j in range(tail, pcgs.length)
    )
    order = pcgs.tail_order(tail)
    for row in rows_t:
        order *= pcgs.primes[pcgs.depth(row)]
    return SubgroupRecord(rows_t, perms, tail, key, order)


def full_record(pcgs: Pcgs, tail: int = 0) -> SubgroupRecord:
    """``G_tail`` 자신 (``tail = 0`` 이면 ``S``)."""
    return make_record(pcgs, (), tail)


def _sift(
    pcgs: Pcgs, table: dict[int, tuple[ExponentVector, Perm]], x: Perm, tail: int
) -> tuple[Perm, ExponentVector, int]:
    """``x ← row^{-a}·x`` 를 반복해 선두가 표에 없는 곳까지 내린다."""
    while True:
        vec = pcgs.exponents(x, tail)
        lead = pcgs.depth(vec, tail)
        if lead == tail or lead not in table:
            return x, vec, lead
        a = vec[lead]
        x = mul(power(table[lead][1], -a), x)


def igs(
    pcgs: Pcgs,
    generators: Iterable[Perm],
    tail: int | None = None,
    expected_order: int | None = None,
) -> SubgroupRecord:
    """``⟨generators⟩·G_tail`` 의 정규 레코드.

    체로 걸러 선두에 넣고, 새 행의 p 거듭제곱과 기존 행과의 교환자를 다시
    큐에 넣는다. 선두 성분을 1로 맞추려고 ``x^k`` 를 행으로 쓸 때는
    ``⟨x^k⟩`` 가 ``⟨x⟩`` 보다 작을 수 있으므로 ``x`` 도 다시 큐에 넣는다.
    ``expected_order`` 에 도달하면 일찍 멈춘다.
    """
    tail = pcgs.length if tail is None else tail
    table: dict[int, tuple[ExponentVector, Perm]] = {}
    current = pcgs.tail_order(tail)
    queue = list(generators)
    while queue:
        if expected_order is not None and current >= expected_order:
            break
        x, vec, lead = _sift(pcgs, table, queue.pop(), tail)
        if lead == tail:
            continue
        p = pcgs.primes[lead]
        k = pow(vec[lead], -1, p)
        if k != 1:
            queue.append(x)
            x = power(x, k)
            vec = pcgs.exponents(x, tail)
        queue.append(power(x, p))
        queue.extend(comm(x, r) for _, r in table.values())
        table[lead] = (vec, x)
        current *= p
    return _canonical(pcgs, table, tail)


def _canonical(
    pcgs: Pcgs, table: dict[int, tuple[ExponentVector, Perm]], tail: int
) -> SubgroupRecord:
    leads = sorted(table)
    rows = []
    for i, lead in enumerate(leads):
        vec, x = table[lead]
        for deeper in leads[i + 1 :]:
            c = vec[deeper]
            if c:
                x = mul(x, power(table[deeper][1], -c))
                vec = pcgs.exponents(x, tail)
        rows.append((*vec, *([0] * (pcgs.length - tail))))
    return make_record(pcgs, rows, tail)


def record_contains(pcgs: Pcgs, record: SubgroupRecord, x: Perm) -> bool:
    """레코드 행으로 체를 거쳐 잉여가 ``G_tail`` 에 떨어지는지 본다."""
    if len(x) != pcgs.degree or not pcgs.group.contains(x):
        return False
    table = dict(zip(record.leads, zip(record.rows, record.perms, strict=True), strict=True))
    _, _, lead = _sift(pcgs, table, x, record.tail)
    return lead == record.tail


def conjugate_record(pcgs: Pcgs, record: SubgroupRecord, s: Perm) -> SubgroupRecord:
    """``s⁻¹ U s``."""
    return igs(
        pcgs,
        (conj(r, s) for r in record.perms),
        tail=record.tail,
        expected_order=record.order,
    )


def with_tail(pcgs: Pcgs, record: SubgroupRecord, tail: int) -> SubgroupRecord:
    """꼬리를 더 깊은 경계로 내리고 사이 위치를 단위 행으로 채운다."""
    if tail < record.tail:
        raise ValueError("tail can only move deeper")
    units = [pcgs.unit(j) for j in range(record.tail, tail)]
    return make_record(pcgs, [*record.rows, *units], tail)


def record_from_key(pcgs: Pcgs, key: Sequence[int], tail: int) -> SubgroupRecord:
    """키를 풀어 꼬리 ``tail`` 레코드로 되돌린다. 정규형이 아니면 거부한다."""
    vectors = [pcgs.unpack(v) for v in key]
    units = [pcgs.unit(j) for j in range(tail, pcgs.length)]
    if len(vectors) < len(units) or vectors[len(vectors) - len(units) :] != units:
        raise ShardFormatError("record does not contain the layer kernel")
    rows = vectors[: len(vectors) - len(units)]
    leads = [pcgs.depth(row) for row in rows]
    for i, (row, lead) in enumerate(zip(rows, leads, strict=True)):
        if lead >= tail or row[lead] != 1 or any(row[tail:]):
            raise ShardFormatError(f"row {i} is not in canonical form")
        if i and lead <= leads[i - 1]:
            raise ShardFormatError("row leads are not increasing")
        if any(row[other] for other in leads if other != lead):
            raise ShardFormatError(f"row {i} is not reduced")
    record = make_record(pcgs, rows, tail)
    if record.key != tuple(key):
        raise ShardFormatError("record key does not round-trip")
    return record


def record_elements(pcgs: Pcgs, record: SubgroupRecord) -> Iterator[Perm]:
    """레코드가 나타내는 부분군의 모든 원소."""
    tail_elements = list(pcgs.iter_tail(record.tail))
    powers = [
        [power(r, e) for e in range(pcgs.primes[lead])]
        for r, lead in zip(record.perms, record.leads, strict=True)
    ]
    for exps in itertools.product(*(range(len(ps)) for ps in powers)):
        x = identity(pcgs.degree)
        for ps, e in zip(powers, exps, strict=True):
            if e:
                x = mul(x, ps[e])
        for t in tail_elements:
            yield mul(x, t)


def translation_subgroup(pcgs: Pcgs, group: AbelianGroup) -> SubgroupRecord:
    """평행이동 부분군 ``{(g, id)}``."""
    return igs(pcgs, translation_generators(group), expected_order=group.order)


@dataclass(frozen=True, slots=True)
class Relation:
    """``lhs = rhs · remainder``, ``remainder ∈ G_tail``.

    ``lhs`` 는 (행 번호, ±1) 글자열, ``rhs`` 는 행 번호의 양의 글자열이다.
    """

    lhs: tuple[tuple[int, int], ...]
    rhs: tuple[int, ...]
    remainder: Perm


@dataclass(frozen=True, slots=True)
class PcPresentation:
    """``U/G_tail`` 의 다순환 표시: 거듭제곱 관계와 켤레 관계 (j < k)."""

    generators: tuple[Perm, ...]
    relative_orders: tuple[int, ...]
    relations: tuple[Relation, ...]


def _evaluate(pcgs: Pcgs, gens: Sequence[Perm], letters: Iterable[tuple[int, int]]) -> Perm:
    out = identity(pcgs.degree)
    for i, e in letters:
        out = mul(out, gens[i] if e > 0 else inv(gens[i]))
    return out


def _decompose(pcgs: Pcgs, record: SubgroupRecord, x: Perm) -> tuple[tuple[int, ...], Perm]:
    """``x = row_{l_1} ⋯ row_{l_k} · r`` (``r ∈ G_tail``) 로 체를 거른다."""
    index = {lead: i for i, lead in enumerate(record.leads)}
    letters: list[int] = []
    while True:
        vec = pcgs.exponents(x, record.tail)
        lead = pcgs.depth(vec, record.tail)
        if lead == record.tail:
            return tuple(letters), x
        i = index[lead]
        a = vec[lead]
        letters.extend([i] * a)
        x = mul(power(record.perms[i], -a), x)


def pc_presentation(pcgs: Pcgs, record: SubgroupRecord) -> PcPresentation:
    """레코드 행들에 대한 ``U/G_tail`` 의 완전한 다순환 표시."""
    gens = record.perms
    orders = tuple(pcgs.primes[lead] for lead in record.leads)
    relations: list[Relation] = []
    for j, p in enumerate(orders):
        lhs = tuple((j, 1) for _ in range(p))
        rhs, rem = _decompose(pcgs, record, _evaluate(pcgs, gens, lhs))
        relations.append(Relation(lhs, rhs, rem))
    for j, k in itertools.combinations(range(len(gens)), 2):
        lhs = ((j, -1), (k, 1), (j, 1))
        rhs, rem = _decompose(pcgs, record, _evaluate(pcgs, gens, lhs))
        relations.append(Relation(lhs, rhs, rem))
    return PcPresentation(gens, orders, tuple(relations))


def check_relation(pcgs: Pcgs, presentation: PcPresentation, relation: Relation) -> bool:
    """관계가 실제 순열에서 성립하는지."""
    gens = presentation.generators
    lhs = _evaluate(pcgs, gens, relation.lhs)
    rhs = _evaluate(pcgs, gens, ((i, 1) for i in relation.rhs))
    return lhs == mul(rhs, relation.remainder)
