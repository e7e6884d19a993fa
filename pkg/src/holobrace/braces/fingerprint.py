"""Cayley 표로 주어진 군의 지문."""

from collections import Counter
from collections.abc import Iterable

import numpy as np
from sympy import factorint, integer_log

from holobrace.braces.brace import Brace
from holobrace.models import GroupFingerprint


def _element_orders(table: np.ndarray) -> list[int]:
    n = len(table)
    orders = []
    for x in range(n):
        k, y = 1, x
        while y != 0:
            y = int(table[y, x])
            k += 1
        orders.append(k)
    return orders


def _inverses(table: np.ndarray) -> np.ndarray:
    return np.argmax(table == 0, axis=1)


def _closure(table: np.ndarray, generators: set[int]) -> set[int]:
    """``generators`` 가 생성하는 부분군 (유한군이므로 곱으로 닫으면 된다)."""
    members = {0}
    frontier = [0]
    gens = sorted(generators)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = int(table[x, g])
            if y not in members:
                members.add(y)
                frontier.append(y)
    return members


def _derived_subgroup(table: np.ndarray) -> set[int]:
    inv = _inverses(table)
    # [a, b] = a⁻¹ b⁻¹ a b
    left = table[inv[:, None], inv[None, :]]
    comms = table[left, table]
    return _closure(table, {int(c) for c in np.unique(comms)})


def _abelian_invariants(table: np.ndarray, derived: set[int]) -> tuple[int, ...]:
    """``G/G'`` 의 준소 불변인자 (오름차순)."""
    n = len(table)
    quotient = n // len(derived)
    if quotient == 1:
        return ()
    # x 의 몫 위수: x^k ∈ G' 인 가장 작은 k
    counts: Counter[int] = Counter()
    for x in range(n):
        k, y = 1, x
        while y not in derived:
            y = int(table[y, x])
            k += 1
        counts[k] += 1
    counts = Counter({k: c // len(derived) for k, c in counts.items()})

    invariants: list[int] = []
    for p in sorted(factorint(quotient)):
        # r_j = log_p |Q[p^j]|
        ranks = [0]
        j = 1
        while True:
            torsion = sum(c for k, c in counts.items() if p**j % k == 0)
            ranks.append(int(integer_log(torsion, p)[0]))
            if ranks[-1] == ranks[-2]:
                break
            j += 1
        at_least = [ranks[i] - ranks[i - 1] for i in range(1, len(ranks))]
        for i, c in enumerate(at_least):
            exact = c - (at_least[i + 1] if i + 1 < len(at_least) else 0)
            invariants.extend([p ** (i + 1)] * exact)
    return tuple(sorted(invariants))


def group_fingerprint(table: np.ndarray | list[list[int]]) -> GroupFingerprint:
    """색인 0을 항등원으로 하는 Cayley 표의 동형 불변량."""
    t = np.asarray(table, dtype=np.int64)
    orders = Counter(_element_orders(t))
    center = int((t == t.T).all(axis=1).sum())
    derived = _derived_subgroup(t)
    return GroupFingerprint(
        order_counts=tuple(sorted(orders.items())),
        abelian_invariants=_abelian_invariants(t, derived),
        center_order=center,
        derived_order=len(derived),
    )


def fingerprint(brace: Brace) -> GroupFingerprint:
    """곱셈군의 지문."""
    return group_fingerprint(brace.mul)


def brace_summary(braces: Iterable[Brace]) -> list[tuple[GroupFingerprint, int]]:
    """곱셈군 지문별 brace 수 (많은 순, 같으면 라벨 순)."""
    counts = Counter(fingerprint(b) for b in braces)
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0].label()))
