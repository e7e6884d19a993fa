"""정칙 부분군 → 왼쪽 brace.

정칙 부분군의 원소 ``r_x`` 는 ``r_x(0) = x`` 로 유일하게 정해지고
곱셈은 ``x·y = r_x(y)`` 이다. 호환 조건 ``x(y+z) = xy − x + xz`` 는
``|G|³`` 조합 전부를 numpy 로 확인한다.
"""

import logging
from dataclasses import dataclass

import numpy as np

from holobrace.errors import BraceAxiomError
from holobrace.groups.abelian import AbelianGroup
from holobrace.groups.permgroup import PermGroup
from holobrace.pcgs.pcgs import Pcgs
from holobrace.pcgs.subgroups import RecordKey, SubgroupRecord, record_elements

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Brace:
    """덧셈표와 곱셈표 (색인 위), 그리고 원래 정칙 부분군의 키."""

    group: AbelianGroup
    add: np.ndarray
    mul: np.ndarray
    origin: RecordKey

    @property
    def size(self) -> int:
        return self.group.order

    def neg(self) -> np.ndarray:
        """덧셈 역원 색인."""
        return np.argmax(self.add == 0, axis=1)


def is_regular(pcgs: Pcgs, record: SubgroupRecord, group: AbelianGroup) -> bool:
    """위수가 ``|G|`` 이고 0의 궤도가 전체이며 0의 안정자가 자명한지."""
    if record.order != group.order:
        return False
    gens = [*record.perms, *pcgs.elements[record.tail :]]
    if len(PermGroup(pcgs.degree, gens).orbit(0)) != group.order:
        return False
    fixing = [x for x in record_elements(pcgs, record) if x[0] == 0]
    return len(fixing) == 1


def brace_from_regular(pcgs: Pcgs, record: SubgroupRecord, group: AbelianGroup) -> Brace:
    """정칙 부분군에서 brace 를 만들고 공리를 모두 확인한다."""
    n = group.order
    table = np.full((n, n), -1, dtype=np.int64)
    for r in record_elements(pcgs, record):
        x = r[0]
        if table[x, 0] >= 0:
            raise BraceAxiomError(f"two elements send 0 to {x}; subgroup is not regular")
        table[x] = r
    if (table < 0).any():
        raise BraceAxiomError("subgroup is not transitive")
    brace = Brace(group, np.array(group.add_table(), dtype=np.int64), table, record.key)
    violation = find_violation(brace)
    if violation is not None:
        raise BraceAxiomError(f"compatibility fails at (x, y, z) = {violation}")
    return brace


def _is_group_table(m: np.ndarray) -> bool:
    n = len(m)
    ident = np.arange(n)
    if not (m[0] == ident).all() or not (m[:, 0] == ident).all():
        return False
    if not (np.sort(m, axis=0) == ident[:, None]).all():
        return False
    if not (np.sort(m, axis=1) == ident[None, :]).all():
        return False
    return bool((m[m] == m[:, m]).all())


def find_violation(brace: Brace) -> tuple[int, int, int] | None:
    """첫 번째로 깨지는 ``(x, y, z)`` 또는 ``None``.

    곱셈표가 군이 아니면 ``(-1, -1, -1)``.
    """
    a, m = brace.add, brace.mul
    if not _is_group_table(m):
        return (-1, -1, -1)
    lhs = m[:, a]
    shifted = a[m, brace.neg()[:, None]]
    rhs = a[shifted[:, :, None], m[:, None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        x, y, z = (int(v) for v in bad[0])
        return x, y, z
    return None


def verify_brace(brace: Brace) -> bool:
    """두 군 공리와 모든 호환 조건."""
    violation = find_violation(brace)
    if violation is not None:
        logger.warning(f"brace check failed at {violation}")
    return violation is None


def is_trivial(brace: Brace) -> bool:
    """``x·y = x + y``."""
    return bool((brace.mul == brace.add).all())


def format_brace(brace: Brace, origin: str) -> str:
    """``brace <서술자> <키>`` 헤더 다음 곱셈표 ``|G|`` 줄."""
    lines = [f"brace {brace.group.descriptor} {origin}"]
    lines.extend(" ".join(map(str, row)) for row in brace.mul.tolist())
    return "\n".join(lines) + "\n"

