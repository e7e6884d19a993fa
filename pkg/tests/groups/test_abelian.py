"""유한 아벨 군 테스트."""

import pytest

from holobrace.errors import GroupTooLargeError, InvalidGroupError
from holobrace.groups.abelian import (
    Endomorphism,
    aut_elements,
    aut_order_formula,
    iter_automorphisms,
    make_group,
    parse_descriptor,
    scalar_endo,
)


class TestParseDescriptor:
    """서술자 파싱 테스트."""

    def test_sorts_factors_by_prime_then_exponent(self) -> None:
        """인수를 소수, 지수 순으로 정렬하는지 확인한다."""
        g = parse_descriptor("9,4,2,3")
        assert g.factors == (2, 4, 3, 9)
        assert g.order == 216

    def test_descriptor_round_trip(self) -> None:
        """서술자가 그대로 되돌아오는지 확인한다."""
        assert parse_descriptor("2,2,4,4").descriptor == "2,2,4,4"

    def test_trivial_group(self) -> None:
        """``"1"`` 이 자명군인지 확인한다."""
        g = parse_descriptor("1")
        assert g.order == 1
        assert g.descriptor == "1"

    @pytest.mark.parametrize("text", ["", "6", "a,b", "1,2", "0"])
    def test_rejects_bad_descriptor(self, text: str) -> None:
        """소수 거듭제곱이 아니거나 형식이 틀리면 거부하는지 확인한다."""
        with pytest.raises(InvalidGroupError):
            parse_descriptor(text)


class TestAbelianGroup:
    """군 연산 테스트."""

    def test_mixed_radix_index(self) -> None:
        """색인이 ``e_1 + m_1·e_2`` 인지 확인한다."""
        g = make_group([2, 4])
        assert g.index((1, 3)) == 7
        assert g.element(7) == (1, 3)

    def test_add_and_neg(self) -> None:
        """성분별 덧셈과 역원을 확인한다."""
        g = make_group([2, 4])
        assert g.add((1, 3), (1, 2)) == (0, 1)
        assert g.neg((1, 3)) == (1, 1)

    def test_element_order(self) -> None:
        """원소 위수가 성분 위수의 최소공배수인지 확인한다."""
        g = make_group([2, 8])
        assert g.element_order((1, 2)) == 4
        assert g.element_order(g.zero) == 1

    def test_add_table_is_latin_square(self) -> None:
        """덧셈표의 각 행이 순열인지 확인한다."""
        g = make_group([2, 2, 3])
        table = g.add_table()
        assert table[0] == list(range(g.order))
        assert all(sorted(row) == list(range(g.order)) for row in table)


class TestAutomorphisms:
    """자기동형군 테스트."""

    @pytest.mark.parametrize(
        ("factors", "expected"),
        [
            ([4], 2),
            ([2, 2], 6),
            ([8], 4),
            ([2, 4], 8),
            ([2, 2, 2], 168),
            ([9], 6),
            ([3, 3], 48),
            ([2, 8], 16),
            ([2, 2, 4], 192),
            ([3, 9], 108),
            ([4, 16], 256),
            ([2, 2, 16], 768),
            ([4, 3], 4),
        ],
    )
    def test_order_formula(self, factors: list[int], expected: int) -> None:
        """위수 공식이 알려진 값과 같은지 확인한다."""
        assert aut_order_formula(make_group(factors)) == expected

    @pytest.mark.parametrize("factors", [[4], [2, 2], [2, 4], [3, 3], [2, 2, 4], [3, 9]])
    def test_enumeration_matches_formula(self, factors: list[int]) -> None:
        """전수 열거한 자기동형 수가 공식과 같은지 확인한다."""
        g = make_group(factors)
        autos = aut_elements(g)
        assert len(autos) == aut_order_formula(g)
        assert all(a.is_bijective() for a in autos)
        assert len({a.as_permutation() for a in autos}) == len(autos)

    def test_enumeration_bound(self) -> None:
        """상한을 넘으면 ``GroupTooLargeError`` 가 나는지 확인한다."""
        with pytest.raises(GroupTooLargeError):
            next(iter_automorphisms(make_group([2, 32]), max_order=16))

    def test_rejects_non_homomorphism(self) -> None:
        """위수 조건을 어기는 생성원 상을 거부하는지 확인한다."""
        g = make_group([2, 4])
        with pytest.raises(InvalidGroupError):
            Endomorphism(g, ((0, 1), (0, 1)))

    def test_scalar_endomorphism(self) -> None:
        """``x ↦ 3x`` 가 C8 의 자기동형인지 확인한다."""
        g = make_group([8])
        alpha = scalar_endo(g, 3)
        assert alpha.is_bijective()
        assert alpha.apply((5,)) == (7,)
