"""유한 아벨 군 연산, 원소 색인, 자기준동형과 자기동형군 열거."""

import itertools
import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from sympy import factorint

from holobrace.config import settings
from holobrace.errors import GroupTooLargeError, InvalidGroupError
from holobrace.groups.perms import Perm

logger = logging.getLogger(__name__)

type GroupElement = tuple[int, ...]


def _prime_power(m: int) -> tuple[int, int]:
    """``m = p^e`` 이면 ``(p, e)`` 를 돌려준다."""
    if m < 2:
        raise InvalidGroupError(f"cyclic factor must be >= 2, got {m}")
    factors = factorint(m)
    if len(factors) != 1:
        parts = ",".join(str(p**e) for p, e in sorted(factors.items()))
        raise InvalidGroupError(
            f"{m} is not a prime power; pass its primary decomposition [{parts}]"
        )
    ((p, e),) = factors.items()
    return int(p), int(e)


@dataclass(frozen=True, slots=True)
class AbelianGroup:
    """소수 거듭제곱 순환군들의 직합 ``C_{m_1} × … × C_{m_k}``."""

    factors: tuple[int, ...]
    primes: tuple[int, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def descriptor(self) -> str:
        """CLI와 파일 헤더에 쓰는 ``"2,2,4,4"`` 형식 서술자."""
        return ",".join(map(str, self.factors)) or "1"

    @property
    def zero(self) -> GroupElement:
        return (0,) * self.rank

    def generator(self, i: int) -> GroupElement:
        """``i`` 번째 표준 생성원."""
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple(
            (x + y) % m for x, y, m in zip(a, b, self.factors, strict=True)
        )

    def neg(self, a: GroupElement) -> GroupElement:
        return tuple((-x) % m for x, m in zip(a, self.factors, strict=True))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple(
            (x - y) % m for x, y, m in zip(a, b, self.factors, strict=True)
        )

    def scale(self, k: int, a: GroupElement) -> GroupElement:
        return tuple((k * x) % m for x, m in zip(a, self.factors, strict=True))

    def index(self, a: GroupElement) -> int:
        """혼합 기수 색인 ``e_1 + m_1·(e_2 + m_2·(…))``."""
        result = 0
        for x, m in zip(reversed(a), reversed(self.factors), strict=True):
            result = result * m + x
        return result

    def element(self, index: int) -> GroupElement:
        """:meth:`index` 의 역함수."""
        if not 0 <= index < self.order:
            raise InvalidGroupError(f"index {index} out of range [0, {self.order})")
        out = []
        for m in self.factors:
            index, r = divmod(index, m)
            out.append(r)
        return tuple(out)

    def elements(self) -> list[GroupElement]:
        """색인 순서의 모든 원소."""
        return [self.element(i) for i in range(self.order)]

    def element_order(self, a: GroupElement) -> int:
        result = 1
        for x, m in zip(a, self.factors, strict=True):
            result = math.lcm(result, m // math.gcd(x, m))
        return result

    def add_table(self) -> list[list[int]]:
        """색인 위의 덧셈 Cayley 표."""
        elems = self.elements()
        return [[self.index(self.add(a, b)) for b in elems] for a in elems]


def make_group(factors: Sequence[int]) -> AbelianGroup:
    """인수 목록을 정규 순서(소수, 지수 순)로 정렬해 군을 만든다."""
    if not factors:
        return AbelianGroup(factors=(), primes=())
    keyed = sorted((_prime_power(int(m)), int(m)) for m in factors)
    return AbelianGroup(
        factors=tuple(m for _, m in keyed),
        primes=tuple(p for (p, _), _ in keyed),
    )


def parse_descriptor(descriptor: str) -> AbelianGroup:
    """``"2,2,4,4"`` 을 파싱한다."""
    text = descriptor.strip()
    if not text:
        raise InvalidGroupError("empty group descriptor")
    if text == "1":
        return make_group([])
    try:
        factors = [int(part) for part in text.split(",")]
    except ValueError as e:
        raise InvalidGroupError(f"bad group descriptor {descriptor!r}") from e
    return make_group(factors)


@dataclass(frozen=True, slots=True)
class Endomorphism:
    """자기준동형. ``images[i]`` 는 ``i`` 번째 표준 생성원의 상."""

    group: AbelianGroup
    images: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.group.rank:
            raise InvalidGroupError("one image per generator required")
        for m, image in zip(self.group.factors, self.images, strict=True):
            if self.group.scale(m, image) != self.group.zero:
                raise InvalidGroupError(
                    f"image {image} of a generator of order {m} violates the hom condition"
                )

    def apply(self, a: GroupElement) -> GroupElement:
        out = self.group.zero
        for e, image in zip(a, self.images, strict=True):
            if e:
                out = self.group.add(out, self.group.scale(e, image))
        return out

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """``self ∘ other``."""
        return Endomorphism(
            self.group, tuple(self.apply(image) for image in other.images)
        )

    def as_permutation(self) -> Perm:
        """색인 위에 유도되는 사상 (전단사일 때 순열)."""
        g = self.group
        return tuple(g.index(self.apply(g.element(x))) for x in range(g.order))

    def is_bijective(self) -> bool:
        return len(set(self.as_permutation())) == self.group.order


def identity_endo(group: AbelianGroup) -> Endomorphism:
    return Endomorphism(group, tuple(group.generator(i) for i in range(group.rank)))


def scalar_endo(group: AbelianGroup, k: int) -> Endomorphism:
    """``x ↦ k·x``."""
    return Endomorphism(
        group, tuple(group.scale(k, group.generator(i)) for i in range(group.rank))
    )


def _component_automorphisms(
    group: AbelianGroup, positions: list[int]
) -> list[dict[int, GroupElement]]:
    """한 소수 성분의 자기동형을 생성원 상의 사전으로 모두 찾는다.

    자기준동형은 소칼(socle) 위에서 단사일 때만 전단사다.
    """
    p = group.primes[positions[0]]
    sub_factors = [group.factors[i] for i in positions]
    component = list(itertools.product(*(range(m) for m in sub_factors)))

    def killed_by(x: tuple[int, ...], k: int) -> bool:
        return all((k * a) % m == 0 for a, m in zip(x, sub_factors, strict=True))

    candidates = [[x for x in component if killed_by(x, m)] for m in sub_factors]
    socle = [x for x in component if any(x) and killed_by(x, p)]

    found: list[dict[int, GroupElement]] = []
    for images in itertools.product(*candidates):
        ok = True
        for s in socle:
            image = [0] * len(positions)
            for coeff, img in zip(s, images, strict=True):
                if coeff:
                    for j, m in enumerate(sub_factors):
                        image[j] = (image[j] + coeff * img[j]) % m
            if not any(image):
                ok = False
                break
        if ok:
            found.append(
                {
                    pos: _embed(group, positions, img)
                    for pos, img in zip(positions, images, strict=True)
                }
            )
    return found


def _embed(
    group: AbelianGroup, positions: list[int], local: tuple[int, ...]
) -> GroupElement:
    out = [0] * group.rank
    for pos, x in zip(positions, local, strict=True):
        out[pos] = x
    return tuple(out)


def iter_automorphisms(
    group: AbelianGroup, max_order: int | None = None
) -> Iterator[Endomorphism]:
    """모든 자기동형을 결정적 순서로 생성한다."""
    limit = max_order or settings.max_group_order
    if group.order > limit:
        raise GroupTooLargeError(
            f"|G| = {group.order} is too large for automorphism enumeration (limit {limit})"
        )
    by_prime: dict[int, list[int]] = {}
    for i, p in enumerate(group.primes):
        by_prime.setdefault(p, []).append(i)
    per_prime = [
        _component_automorphisms(group, positions)
        for _, positions in sorted(by_prime.items())
    ]
    for parts in itertools.product(*per_prime):
        images: dict[int, GroupElement] = {}
        for part in parts:
            images.update(part)
        yield Endomorphism(group, tuple(images[i] for i in range(group.rank)))


def aut_elements(group: AbelianGroup, max_order: int | None = None) -> list[Endomorphism]:
    """모든 자기동형."""
    autos = list(iter_automorphisms(group, max_order))
    logger.debug(f"|Aut({group.descriptor})| = {len(autos)}")
    return autos


def aut_order_formula(group: AbelianGroup) -> int:
    """아벨 p-군 자기동형군 위수 공식을 소수별로 곱한다."""
    by_prime: dict[int, list[int]] = {}
    for p, m in zip(group.primes, group.factors, strict=True):
        by_prime.setdefault(p, []).append(_prime_power(m)[1])

    total = 1
    for p, exps in by_prime.items():
        e = sorted(exps)
        n = len(e)
        # d_k: e_l = e_k 인 최대 l, c_k: 최소 l (1부터)
        d = [max(t for t in range(n) if e[t] == e[k]) + 1 for k in range(n)]
        c = [min(t for t in range(n) if e[t] == e[k]) + 1 for k in range(n)]
        result = 1
        for k in range(n):
            result *= p ** d[k] - p**k
        for j in range(n):
            result *= (p ** e[j]) ** (n - d[j])
        for i in range(n):
            result *= (p ** (e[i] - 1)) ** (n - c[i] + 1)
        total *= result
    return total
