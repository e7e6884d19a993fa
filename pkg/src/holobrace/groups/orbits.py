"""켤레 궤도와 Schreier 안정자 생성원."""

import logging
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass, field

from holobrace.config import settings
from holobrace.errors import OrbitOverflowError
from holobrace.groups.perms import Perm, identity, inv, is_identity, mul

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class Orbit[T: Hashable]:
    """궤도 점, 점마다 ``start^t = 점`` 인 ``t``, 그리고 ``start`` 의 안정자 생성원."""

    points: list[T]
    transversal: dict[T, Perm]
    stabilizer: list[Perm] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: object) -> bool:
        return point in self.transversal


def conjugation_orbit[T: Hashable](
    start: T,
    generators: Sequence[Perm],
    act: Callable[[T, Perm], T],
    degree: int,
    max_orbit: int | None = None,
    *,
    schreier: bool = True,
) -> Orbit[T]:
    """``act`` 의 오른쪽 작용에 대한 ``start`` 의 궤도.

    ``act(act(x, a), b) == act(x, a*b)`` 여야 한다. ``schreier`` 가 참이면
    ``t_o · s · t_{o^s}⁻¹`` 꼴의 Schreier 생성원을 모은다.
    """
    cap = max_orbit or settings.max_orbit
    transversal: dict[T, Perm] = {start: identity(degree)}
    points = [start]
    stabilizer: dict[Perm, None] = {}
    pos = 0
    while pos < len(points):
        o = points[pos]
        t = transversal[o]
        for s in generators:
            image = act(o, s)
            ts = mul(t, s)
            if image not in transversal:
                if len(points) >= cap:
                    raise OrbitOverflowError(
                        f"orbit exceeds {cap} points; raise HOLOBRACE_MAX_ORBIT "
                        "or split the work"
                    )
                transversal[image] = ts
                points.append(image)
            elif schreier:
                g = mul(ts, inv(transversal[image]))
                if not is_identity(g):
                    stabilizer[g] = None
        pos += 1
    if len(points) > 1000:
        logger.debug(f"orbit of size {len(points)}")
    return Orbit(points, transversal, list(stabilizer))
