"""부분군 레코드 테스트."""

import itertools
import random

import pytest

from holobrace.errors import ShardFormatError
from holobrace.groups.abelian import make_group
from holobrace.groups.holomorph import holomorph
from holobrace.groups.permgroup import PermGroup
from holobrace.groups.perms import inv, mul, power
from holobrace.groups.series import elementary_abelian_series
from holobrace.pcgs.pcgs import Pcgs, pcgs_from_series
from holobrace.pcgs.subgroups import (
    check_relation,
    conjugate_record,
    full_record,
    igs,
    pc_presentation,
    record_contains,
    record_elements,
    record_from_key,
    translation_subgroup,
    with_tail,
)


@pytest.fixture(scope="module")
def pcgs_s4() -> Pcgs:
    """Hol(C2×C2) = S4 의 pcgs (상대 위수 2, 3, 2, 2)."""
    return pcgs_from_series(elementary_abelian_series(holomorph(make_group([2, 2]))))


@pytest.fixture(scope="module")
def pcgs_c9() -> Pcgs:
    """Hol(C9) 의 pcgs."""
    return pcgs_from_series(elementary_abelian_series(holomorph(make_group([9]))))


class TestIgs:
    """정규 igs 테스트."""

    def test_canonical_form_is_unique(self, pcgs_s4: Pcgs) -> None:
        """같은 부분군의 다른 생성 집합이 같은 키를 내는지 확인한다."""
        elements = list(pcgs_s4.group.elements())
        for a, b in itertools.product(elements, repeat=2):
            one = igs(pcgs_s4, [a, b])
            other = igs(pcgs_s4, [b, mul(a, b)])
            assert one.key == other.key
            assert one.order == PermGroup(4, [a, b]).order()

    def test_whole_group(self, pcgs_s4: Pcgs) -> None:
        """S 전체의 igs 가 ``full_record(0)`` 과 같은 키인지 확인한다."""
        rec = igs(pcgs_s4, pcgs_s4.group.generators)
        assert rec.order == 24
        assert rec.key == full_record(pcgs_s4, 0).key

    def test_trivial_subgroup(self, pcgs_s4: Pcgs) -> None:
        """자명 부분군은 행이 없는지 확인한다."""
        rec = igs(pcgs_s4, [])
        assert rec.rows == ()
        assert rec.key == ()
        assert rec.order == 1

    def test_rows_are_reduced(self, pcgs_c9: Pcgs) -> None:
        """선두 성분이 1이고 다른 선두 위치가 0인지 확인한다."""
        rng = random.Random(3)
        for _ in range(20):
            gens = [pcgs_c9.group.chain.random_element(rng) for _ in range(2)]
            rec = igs(pcgs_c9, gens)
            for row, lead in zip(rec.rows, rec.leads, strict=True):
                assert row[lead] == 1
                assert all(row[other] == 0 for other in rec.leads if other != lead)
            assert list(rec.leads) == sorted(rec.leads)


def _pcgs_of(factors: list[int]) -> Pcgs:
    return pcgs_from_series(elementary_abelian_series(holomorph(make_group(factors))))


@pytest.fixture(
    scope="module",
    params=[
        [2, 2],
        [9],
        [3, 3],
        [3, 4],
        [2, 4],
        pytest.param([2, 2, 4], marks=pytest.mark.slow),
    ],
    ids=str,
)
def pcgs_small(request: pytest.FixtureRequest) -> Pcgs:
    """S4, Hol(C9), Hol(C3×C3)=432, Hol(C12)=48, Hol(C2×C4)=64, Hol(C2×C2×C4)=3072."""
    return _pcgs_of(request.param)


class TestIgsClosure:
    """igs 위수를 순열군 폐포와 비교하는 테스트."""

    def test_cyclic_subgroups(self, pcgs_small: Pcgs) -> None:
        """모든 원소 x 에 대해 ⟨x⟩ 의 igs 위수가 폐포 위수와 같은지 확인한다."""
        for x in pcgs_small.group.elements():
            rec = igs(pcgs_small, [x])
            assert rec.order == PermGroup(pcgs_small.degree, [x]).order(), x
            assert record_contains(pcgs_small, rec, x)

    def test_mixed_prime_element(self) -> None:
        """위수 6인 원소의 igs 가 위수 2, 3 부분을 모두 담는지 확인한다."""
        pcgs = _pcgs_of([3, 3])
        for x in pcgs.group.elements():
            if PermGroup(pcgs.degree, [x]).order() == 6:
                rec = igs(pcgs, [x])
                assert rec.order == 6
                assert record_contains(pcgs, rec, power(x, 2))
                assert record_contains(pcgs, rec, power(x, 3))
                return
        pytest.fail("no element of order 6")

    def test_random_pairs(self, pcgs_small: Pcgs) -> None:
        """두 원소가 생성하는 부분군의 위수와 키가 생성 집합에 무관한지 확인한다."""
        rng = random.Random(11)
        chain = pcgs_small.group.chain
        for _ in range(200):
            a, b = chain.random_element(rng), chain.random_element(rng)
            rec = igs(pcgs_small, [a, b])
            assert rec.order == PermGroup(pcgs_small.degree, [a, b]).order()
            assert igs(pcgs_small, [b, a]).key == rec.key
            assert igs(pcgs_small, [b, mul(a, b)]).key == rec.key
            assert igs(pcgs_small, [mul(a, b), inv(a)]).key == rec.key

    def test_equal_keys_iff_equal_subgroups(self, pcgs_small: Pcgs) -> None:
        """키가 같을 때만 서로의 생성원을 담는지 확인한다."""
        rng = random.Random(5)
        chain = pcgs_small.group.chain
        records = [
            igs(pcgs_small, [chain.random_element(rng) for _ in range(rng.randint(1, 2))])
            for _ in range(60)
        ]
        for one, other in itertools.combinations(records, 2):
            mutual = all(record_contains(pcgs_small, one, x) for x in other.perms) and all(
                record_contains(pcgs_small, other, x) for x in one.perms
            )
            assert (one.key == other.key) == mutual


class TestRecordOperations:
    """레코드 연산 테스트."""

    def test_translation_subgroup(self, pcgs_s4: Pcgs) -> None:
        """평행이동 부분군이 위수 4의 정규 부분군인지 확인한다."""
        g = make_group([2, 2])
        rec = translation_subgroup(pcgs_s4, g)
        assert rec.order == 4
        for s in pcgs_s4.group.generators:
            assert conjugate_record(pcgs_s4, rec, s).key == rec.key

    def test_elements(self, pcgs_s4: Pcgs) -> None:
        """원소 열거가 순열군의 원소와 같은지 확인한다."""
        gens = [(1, 2, 0, 3)]
        rec = igs(pcgs_s4, gens)
        assert set(record_elements(pcgs_s4, rec)) == set(PermGroup(4, gens).elements())

    def test_contains(self, pcgs_s4: Pcgs) -> None:
        """소속 판정을 확인한다."""
        rec = igs(pcgs_s4, [(1, 0, 3, 2)])
        assert record_contains(pcgs_s4, rec, (0, 1, 2, 3))
        assert record_contains(pcgs_s4, rec, (1, 0, 3, 2))
        assert not record_contains(pcgs_s4, rec, (2, 3, 0, 1))

    def test_with_tail(self, pcgs_s4: Pcgs) -> None:
        """꼬리를 내리면 위수가 유지되는지 확인한다."""
        rec = full_record(pcgs_s4, 1)
        deeper = with_tail(pcgs_s4, rec, 4)
        assert deeper.order == rec.order == 12
        with pytest.raises(ValueError):
            with_tail(pcgs_s4, deeper, 1)


class TestRecordFromKey:
    """키 복원 테스트."""

    def test_round_trip(self, pcgs_s4: Pcgs) -> None:
        """키에서 같은 레코드가 나오는지 확인한다."""
        for x in pcgs_s4.group.elements():
            rec = igs(pcgs_s4, [x])
            assert record_from_key(pcgs_s4, rec.key, rec.tail) == rec
        root = full_record(pcgs_s4, 0)
        assert record_from_key(pcgs_s4, root.key, 0) == root

    @pytest.mark.parametrize("key", [(1, 1), (2, 1), (48,), (4,)])
    def test_rejects_non_canonical_key(self, pcgs_s4: Pcgs, key: tuple[int, ...]) -> None:
        """정규형이 아닌 키를 거부하는지 확인한다."""
        with pytest.raises(ShardFormatError):
            record_from_key(pcgs_s4, key, pcgs_s4.length)


class TestPcPresentation:
    """다순환 표시 테스트."""

    def test_relations_hold(self, pcgs_s4: Pcgs, pcgs_c9: Pcgs) -> None:
        """모든 관계가 실제 순열에서 성립하는지 확인한다."""
        for pcgs in (pcgs_s4, pcgs_c9):
            rec = igs(pcgs, pcgs.group.generators)
            pres = pc_presentation(pcgs, rec)
            m = len(rec.rows)
            assert len(pres.relations) == m + m * (m - 1) // 2
            assert all(check_relation(pcgs, pres, r) for r in pres.relations)
