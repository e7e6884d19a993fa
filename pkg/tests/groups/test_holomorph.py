"""홀로모프 테스트."""

import itertools

import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from holobrace.groups.abelian import aut_elements, aut_order_formula, make_group
from holobrace.groups.holomorph import (
    HolElement,
    from_permutation,
    hol_generators,
    hol_inv,
    hol_mul,
    holomorph,
    translation,
)
from holobrace.groups.perms import fixed_points, identity, mul


class TestHolomorph:
    """``Hol(G)`` 순열군 테스트."""

    @pytest.mark.parametrize(
        ("factors", "expected"),
        [([4], 8), ([2, 2], 24), ([8], 32), ([2, 4], 64), ([9], 54), ([3, 3], 432)],
    )
    def test_order(self, factors: list[int], expected: int) -> None:
        """``|Hol(G)| = |G|·|Aut(G)|`` 를 확인한다."""
        assert holomorph(make_group(factors)).order() == expected

    @pytest.mark.parametrize("factors", [[2, 8], [2, 2, 4], [3, 9]])
    def test_order_matches_sympy(self, factors: list[int]) -> None:
        """sympy 로 독립 계산한 위수와 같은지 확인한다."""
        g = make_group(factors)
        gens = [Permutation(list(p)) for p in hol_generators(g)]
        assert PermutationGroup(gens).order() == g.order * aut_order_formula(g)

    def test_translations_are_fixed_point_free(self) -> None:
        """0이 아닌 평행이동에 고정점이 없는지 확인한다."""
        g = make_group([2, 4])
        for x in g.elements()[1:]:
            assert not fixed_points(translation(g, x).as_permutation())


class TestHolElement:
    """``(shift, auto)`` 원소 테스트."""

    @pytest.fixture
    def elements(self) -> list[HolElement]:
        """C2×C4 홀로모프의 일부 원소."""
        g = make_group([2, 4])
        return [
            HolElement(shift, alpha)
            for shift, alpha in itertools.islice(
                itertools.product(g.elements(), aut_elements(g)), 0, 64, 5
            )
        ]

    def test_product_matches_permutation_product(
        self, elements: list[HolElement]
    ) -> None:
        """원소 곱이 순열 곱과 같은지 확인한다."""
        for a, b in itertools.product(elements[:6], repeat=2):
            assert hol_mul(a, b).as_permutation() == mul(
                a.as_permutation(), b.as_permutation()
            )

    def test_inverse(self, elements: list[HolElement]) -> None:
        """역원과의 곱이 항등 순열인지 확인한다."""
        for a in elements:
            assert hol_mul(a, hol_inv(a)).as_permutation() == identity(8)

    def test_from_permutation_round_trip(self, elements: list[HolElement]) -> None:
        """순열에서 ``(shift, auto)`` 를 되찾는지 확인한다."""
        for a in elements:
            back = from_permutation(a.group, a.as_permutation())
            assert back.as_permutation() == a.as_permutation()
            assert back.shift == a.shift

    def test_from_permutation_rejects_foreign_permutation(self) -> None:
        """홀로모프 밖의 순열을 거부하는지 확인한다."""
        with pytest.raises(ValueError, match="holomorph"):
            from_permutation(make_group([4]), (0, 2, 1, 3))
