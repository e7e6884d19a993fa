"""들어올림과 독립인 브루트포스 오라클.

``Hol(G)`` 의 원소를 모두 펼친 뒤, 반정칙(semiregular) 부분군을 위수 순으로
순환 확장해 만든다. 반정칙 부분군의 부분군도 반정칙이므로 위수 ``|G|`` 의
반정칙 부분군, 곧 정칙 부분군은 모두 이 사슬 위에 있다.
"""

import logging

from sympy import primefactors

from holobrace.config import settings
from holobrace.errors import GroupTooLargeError
from holobrace.groups.abelian import AbelianGroup, aut_order_formula
from holobrace.groups.holomorph import holomorph
from holobrace.groups.perms import Perm, conj, fixed_points, identity, mul, power

logger = logging.getLogger(__name__)

type ElementSet = frozenset[Perm]


def _set_key(members: ElementSet) -> tuple[Perm, ...]:
    return tuple(sorted(members))


def _extend(members: ElementSet, x: Perm, p: int) -> ElementSet:
    """``⟨K, x⟩ = K ∪ Kx ∪ … ∪ Kx^{p-1}`` (``x`` 가 ``K`` 를 정규화하고 ``x^p ∈ K``)."""
    out = set(members)
    xi = x
    for _ in range(1, p):
        out.update(mul(k, xi) for k in members)
        xi = mul(xi, x)
    return frozenset(out)


def semiregular_subgroups(
    group: AbelianGroup, max_holomorph: int | None = None
) -> list[ElementSet]:
    """위수가 ``|G|`` 를 나누는 ``Hol(G)`` 의 반정칙 부분군 전부."""
    limit = max_holomorph or settings.oracle_max_holomorph
    hol_order = group.order * aut_order_formula(group)
    if hol_order > limit:
        raise GroupTooLargeError(
            f"|Hol({group.descriptor})| = {hol_order} exceeds oracle bound {limit}"
        )
    hol = holomorph(group)
    n = group.order
    free = sorted(x for x in hol.elements() if not fixed_points(x))
    free_set = set(free)
    primes = primefactors(n)
    powers = {p: {x: power(x, p) for x in free} for p in primes}

    start = frozenset({identity(n)})
    found: dict[tuple[Perm, ...], ElementSet] = {_set_key(start): start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for k in frontier:
            gens = sorted(k)
            covered = set(k)
            for x in free:
                if x in covered:
                    continue
                p = next((q for q in primes if powers[q][x] in k), None)
                if p is None or n % (len(k) * p):
                    continue
                if any(conj(g, x) not in k for g in gens):
                    continue
                bigger = _extend(k, x, p)
                covered |= bigger
                if not all(y in free_set for y in bigger - k):
                    continue
                key = _set_key(bigger)
                if key not in found:
                    found[key] = bigger
                    next_frontier.append(bigger)
        frontier = next_frontier
    logger.debug(f"oracle: {len(found)} semiregular subgroups in Hol({group.descriptor})")
    return list(found.values())


def oracle_regular_subgroups(
    group: AbelianGroup, max_holomorph: int | None = None
) -> list[ElementSet]:
    """정칙 부분군의 켤레류 대표 (류마다 정렬 키가 최소인 것)."""
    hol_gens = holomorph(group).generators
    regular = sorted(
        (s for s in semiregular_subgroups(group, max_holomorph) if len(s) == group.order),
        key=_set_key,
    )
    seen: set[ElementSet] = set()
    reps = []
    for sub in regular:
        if sub in seen:
            continue
        reps.append(sub)
        seen.add(sub)
        stack = [sub]
        while stack:
            cur = stack.pop()
            for s in hol_gens:
                image = frozenset(conj(y, s) for y in cur)
                if image not in seen:
                    seen.add(image)
                    stack.append(image)
    logger.info(
        f"oracle: {len(regular)} regular subgroups in {len(reps)} classes "
        f"for {group.descriptor}"
    )
    return reps


def oracle_regular_classes(group: AbelianGroup, max_holomorph: int | None = None) -> int:
    """정칙 부분군의 ``Hol(G)``-켤레류 수."""
    return len(oracle_regular_subgroups(group, max_holomorph))
