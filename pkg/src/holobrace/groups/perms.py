"""순열 연산.

순열은 ``tuple[int, ...]`` 이며 ``p[x]`` 가 점 ``x`` 의 상이다.
곱은 함수 합성 규약 ``(a * b)(x) = a(b(x))`` 을 따른다.
"""

from collections.abc import Sequence
from math import lcm

from holobrace.errors import InvalidGroupError

type Perm = tuple[int, ...]


def identity(degree: int) -> Perm:
    """항등 순열."""
    return tuple(range(degree))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def check_perm(images: Sequence[int], degree: int | None = None) -> Perm:
    """이미지 목록을 검증해 순열로 만든다."""
    p = tuple(int(x) for x in images)
    if degree is not None and len(p) != degree:
        raise InvalidGroupError(f"degree mismatch: {len(p)} != {degree}")
    if sorted(p) != list(range(len(p))):
        raise InvalidGroupError("not a permutation")
    return p


def mul(a: Perm, b: Perm) -> Perm:
    """``a * b``: ``b`` 를 먼저 적용한다."""
    return tuple([a[i] for i in b])


def inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def power(p: Perm, e: int) -> Perm:
    """``p`` 의 ``e`` 제곱 (음수 허용)."""
    if e < 0:
        p, e = inv(p), -e
    out = identity(len(p))
    base = p
    while e:
        if e & 1:
            out = mul(out, base)
        base = mul(base, base)
        e >>= 1
    return out


def conj(x: Perm, s: Perm) -> Perm:
    """``x^s = s⁻¹ x s``."""
    return mul(inv(s), mul(x, s))


def comm(a: Perm, b: Perm) -> Perm:
    """교환자 ``[a, b] = a⁻¹ b⁻¹ a b``."""
    return mul(mul(inv(a), inv(b)), mul(a, b))


def order(p: Perm) -> int:
    """순열의 위수 (사이클 길이의 최소공배수)."""
    seen = [False] * len(p)
    result = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        result = lcm(result, length)
    return result


def fixed_points(p: Perm) -> list[int]:
    return [i for i, x in enumerate(p) if i == x]


def fmt_perm(p: Perm) -> str:
    """사이클 표기로 출력한다."""
    seen: set[int] = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cycle = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cycle.append(j)
            j = p[j]
        out.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(out) or "()"
