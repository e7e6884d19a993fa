"""GF(p) 선형대수 테스트."""

import numpy as np
import pytest

from holobrace.groups import gfp


class TestRref:
    """행 사다리꼴 테스트."""

    def test_reduced_form(self) -> None:
        """피벗 열이 단위 벡터가 되는지 확인한다."""
        r, pivots = gfp.rref(np.array([[2, 4, 1], [1, 2, 2]]), 5)
        assert pivots == (0, 2)
        assert r.tolist() == [[1, 2, 0], [0, 0, 1]]

    def test_rank_drops_dependent_rows(self) -> None:
        """종속인 행을 버리는지 확인한다."""
        assert gfp.rank(np.array([[1, 1], [2, 2]]), 3) == 1

    def test_inverse(self) -> None:
        """역행렬을 확인한다."""
        m = np.array([[1, 1], [0, 1]])
        assert (gfp.matmul(m, gfp.inverse(m, 2), 2) == gfp.identity(2)).all()

    def test_singular_inverse(self) -> None:
        """특이 행렬은 ``ValueError`` 를 내는지 확인한다."""
        with pytest.raises(ValueError):
            gfp.inverse(np.array([[1, 1], [1, 1]]), 2)


class TestSolveAffine:
    """아핀 연립방정식 테스트."""

    def test_solution_set(self) -> None:
        """모든 해가 방정식을 만족하고 개수가 ``p^{null}`` 인지 확인한다."""
        a = np.array([[1, 1, 0], [0, 1, 1]])
        b = np.array([1, 2])
        x, null = gfp.solve_affine(a, b, 3)
        assert x is not None
        sols = list(gfp.iter_affine(x, null, 3))
        assert len(sols) == 3
        assert all(((a @ s) % 3 == b).all() for s in sols)

    def test_nullspace(self) -> None:
        """영공간 기저가 방정식을 만족하고 차원이 n − rank 인지 확인한다."""
        a = np.array([[1, 2, 3, 0], [0, 1, 4, 2]])
        null = gfp.nullspace(a, 5)
        assert null.shape == (2, 4)
        assert not ((a @ null.T) % 5).any()
        assert gfp.rank(null, 5) == 2
        assert len(gfp.nullspace(np.array([[1, 1], [0, 1]]), 2)) == 0
        assert gfp.nullspace(np.zeros((0, 3), dtype=np.int64), 3).shape == (3, 3)

    def test_inconsistent(self) -> None:
        """모순인 연립방정식은 특수해가 없는지 확인한다."""
        x, _ = gfp.solve_affine(np.array([[1, 1], [1, 1]]), np.array([0, 1]), 2)
        assert x is None


class TestSubspaces:
    """부분공간 열거 테스트."""

    @pytest.mark.parametrize(("d", "p", "expected"), [(2, 2, 5), (2, 3, 6), (3, 2, 16)])
    def test_counts(self, d: int, p: int, expected: int) -> None:
        """부분공간 수가 가우스 이항계수의 합인지 확인한다."""
        subspaces = gfp.all_subspaces(d, p)
        assert len(subspaces) == expected
        assert expected == sum(gfp.gaussian_binomial(d, k, p) for k in range(d + 1))
        assert len({gfp.subspace_key(w) for w in subspaces}) == expected

    def test_all_in_rref(self) -> None:
        """열거된 기저가 이미 RREF 인지 확인한다."""
        for w in gfp.all_subspaces(3, 3):
            if len(w):
                r, _ = gfp.rref(w, 3)
                assert (r == w).all()

    def test_invariance(self) -> None:
        """``x ↦ x + y`` 행렬의 불변 부분공간을 확인한다."""
        m = np.array([[1, 1], [0, 1]])
        invariant = [w for w in gfp.all_subspaces(2, 2) if gfp.is_invariant(w, [m], 2)]
        assert [gfp.subspace_key(w) for w in invariant] == [(), ((0, 1),), ((1, 0), (0, 1))]

    def test_quotient_maps(self) -> None:
        """``Q`` 가 부분공간을 죽이고 ``E·Q`` 가 항등인지 확인한다."""
        basis = np.array([[1, 0, 2]])
        q, e = gfp.quotient_maps(basis, (0,), 3, 3)
        assert not (basis @ q % 3).any()
        assert (e @ q % 3 == gfp.identity(2)).all()
