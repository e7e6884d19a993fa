"""GF(p) 선형대수: 기약 행 사다리꼴, 영공간, 아핀 해, 부분공간 열거.

행 줄이기, 영공간, 역행렬은 ``galois.GF(p)`` 배열로 계산한다. 함수들은
``np.int64`` 배열을 주고받으며 벡터는 행 벡터 규약 ``v @ M`` 을 따른다.
"""

import itertools
from collections.abc import Iterator, Sequence
from functools import cache

import galois
import numpy as np

type Matrix = np.ndarray
type SubspaceKey = tuple[tuple[int, ...], ...]


@cache
def field(p: int) -> type[galois.FieldArray]:
    return galois.GF(p)


def _lift(mat: Matrix | Sequence[Sequence[int]], p: int) -> galois.FieldArray:
    return field(p)(np.asarray(mat, dtype=np.int64) % p)


def _lower(mat: galois.FieldArray) -> Matrix:
    return np.asarray(mat.view(np.ndarray), dtype=np.int64)


def as_matrix(rows: Sequence[Sequence[int]] | Matrix, ncols: int, p: int) -> Matrix:
    """행 목록을 ``(len(rows), ncols)`` 배열로 만든다."""
    a = np.array(rows, dtype=np.int64).reshape(-1, ncols)
    return a % p


def identity(d: int) -> Matrix:
    return np.eye(d, dtype=np.int64)


def rref(mat: Matrix, p: int) -> tuple[Matrix, tuple[int, ...]]:
    """기약 행 사다리꼴과 피벗 열. 영행은 버린다."""
    a = np.asarray(mat, dtype=np.int64)
    if a.size == 0:
        return a.reshape(0, a.shape[-1] if a.ndim == 2 else 0), ()
    reduced = _lower(_lift(a, p).row_reduce())
    reduced = reduced[reduced.any(axis=1)]
    return reduced, _pivots_of(reduced)


def rank(mat: Matrix, p: int) -> int:
    return len(rref(mat, p)[1])


def subspace_key(basis: Matrix) -> SubspaceKey:
    """RREF 기저의 해시 가능한 형태."""
    return tuple(tuple(int(x) for x in row) for row in basis)


def reduce_vector(v: Matrix, basis: Matrix, pivots: Sequence[int], p: int) -> Matrix:
    """RREF ``basis`` 의 스팬을 법으로 ``v`` 를 정규화한다."""
    out = np.array(v, dtype=np.int64) % p
    for row, c in zip(basis, pivots, strict=True):
        if out[c]:
            out = (out - out[c] * row) % p
    return out


def in_span(v: Matrix, basis: Matrix, pivots: Sequence[int], p: int) -> bool:
    return not reduce_vector(v, basis, pivots, p).any()


def contains_subspace(outer: Matrix, inner: Matrix, p: int) -> bool:
    """``span(inner) ⊆ span(outer)`` (``outer`` 는 RREF)."""
    pivots = _pivots_of(outer)
    return all(in_span(row, outer, pivots, p) for row in inner)


def _pivots_of(basis: Matrix) -> tuple[int, ...]:
    return tuple(int(np.nonzero(row)[0][0]) for row in basis)


def quotient_maps(
    basis: Matrix, pivots: Sequence[int], d: int, p: int
) -> tuple[Matrix, Matrix]:
    """몫공간 ``GF(p)^d / span(basis)`` 의 좌표.

    ``(Q, E)`` 를 돌려준다. ``Q`` (d×f) 는 정규화 뒤 자유 열로의 사영,
    ``E`` (f×d) 는 자유 열로의 매장이다.
    """
    free = [c for c in range(d) if c not in set(pivots)]
    f = len(free)
    q = np.zeros((d, f), dtype=np.int64)
    for a in range(d):
        unit = np.zeros(d, dtype=np.int64)
        unit[a] = 1
        reduced = reduce_vector(unit, basis, pivots, p)
        q[a] = reduced[free]
    e = np.zeros((f, d), dtype=np.int64)
    for k, c in enumerate(free):
        e[k, c] = 1
    return q, e


def nullspace(mat: Matrix, p: int) -> Matrix:
    """``mat @ x = 0`` 의 해공간 기저 (행으로)."""
    a = np.asarray(mat, dtype=np.int64)
    if a.shape[0] == 0:
        return identity(a.shape[1])
    return _lower(_lift(a, p).null_space())


def solve_affine(mat: Matrix, rhs: Matrix, p: int) -> tuple[Matrix | None, Matrix]:
    """``mat @ x = rhs`` 의 (특수해, 영공간 기저). 해가 없으면 특수해는 ``None``."""
    n = mat.shape[1]
    aug = np.concatenate([mat % p, (np.asarray(rhs) % p).reshape(-1, 1)], axis=1)
    r, pivots = rref(aug, p)
    null = nullspace(mat, p)
    if pivots and pivots[-1] == n:
        return None, null
    x = np.zeros(n, dtype=np.int64)
    x[list(pivots)] = r[:, n]
    return x, null


def iter_affine(particular: Matrix, null: Matrix, p: int) -> Iterator[Matrix]:
    """``particular + span(null)`` 의 모든 원소."""
    for coeffs in itertools.product(range(p), repeat=len(null)):
        x = particular.copy()
        for c, row in zip(coeffs, null, strict=True):
            if c:
                x = (x + c * row) % p
        yield x


def matmul(a: Matrix, b: Matrix, p: int) -> Matrix:
    return (a @ b) % p


def inverse(mat: Matrix, p: int) -> Matrix:
    try:
        return _lower(np.linalg.inv(_lift(mat, p)))
    except np.linalg.LinAlgError as e:
        raise ValueError("matrix is singular") from e


def is_invariant(basis: Matrix, mats: Sequence[Matrix], p: int) -> bool:
    """``span(basis)`` 가 모든 ``v ↦ v @ M`` 아래 불변인지."""
    if not len(basis):
        return True
    pivots = _pivots_of(basis)
    return all(
        in_span(row @ m % p, basis, pivots, p) for m in mats for row in basis
    )


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """``GF(p)^n`` 의 ``k`` 차원 부분공간 수."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def all_subspaces(d: int, p: int) -> list[Matrix]:
    """``GF(p)^d`` 의 모든 부분공간을 RREF 기저로 열거한다.

    차원, 피벗 조합, 자유 성분 순의 결정적 순서다.
    """
    out: list[Matrix] = []
    for k in range(d + 1):
        for pivots in itertools.combinations(range(d), k):
            pivot_set = set(pivots)
            free = [
                (i, j)
                for i, pc in enumerate(pivots)
                for j in range(pc + 1, d)
                if j not in pivot_set
            ]
            for values in itertools.product(range(p), repeat=len(free)):
                m = np.zeros((k, d), dtype=np.int64)
                for i, pc in enumerate(pivots):
                    m[i, pc] = 1
                for (i, j), v in zip(free, values, strict=True):
                    m[i, j] = v
                out.append(m)
    return out
