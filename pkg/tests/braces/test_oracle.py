"""브루트포스 오라클 테스트."""

import pytest

from holobrace.braces.oracle import (
    oracle_regular_classes,
    oracle_regular_subgroups,
    semiregular_subgroups,
)
from holobrace.errors import GroupTooLargeError
from holobrace.groups.abelian import make_group
from holobrace.groups.perms import fixed_points, identity


@pytest.mark.parametrize(
    ("factors", "expected"),
    [([], 1), ([2], 1), ([4], 2), ([2, 2], 2), ([9], 2), ([3, 3], 2)],
)
def test_small_counts(factors: list[int], expected: int) -> None:
    """작은 군의 류 수를 확인한다."""
    assert oracle_regular_classes(make_group(factors)) == expected


def test_order_eight_total() -> None:
    """위수 8 의 brace 가 모두 27 개인지 확인한다."""
    total = sum(oracle_regular_classes(make_group(f)) for f in ([8], [2, 4], [2, 2, 2]))
    assert total == 27


def test_representatives_are_regular() -> None:
    """대표마다 위수가 |G| 이고 항등원 외에는 고정점이 없는지 확인한다."""
    group = make_group([2, 4])
    e = identity(group.order)
    for sub in oracle_regular_subgroups(group):
        assert len(sub) == group.order
        assert e in sub
        assert all(not fixed_points(x) for x in sub if x != e)


def test_semiregular_orders_divide() -> None:
    """모든 반정칙 부분군의 위수가 |G| 를 나누는지 확인한다."""
    subs = semiregular_subgroups(make_group([4]))
    assert all(4 % len(s) == 0 for s in subs)
    assert {len(s) for s in subs} == {1, 2, 4}


def test_too_large() -> None:
    """|Hol(G)| 가 상한을 넘으면 GroupTooLargeError 인지 확인한다."""
    with pytest.raises(GroupTooLargeError):
        semiregular_subgroups(make_group([2, 2, 2, 2]))
    with pytest.raises(GroupTooLargeError):
        semiregular_subgroups(make_group([4]), max_holomorph=7)
