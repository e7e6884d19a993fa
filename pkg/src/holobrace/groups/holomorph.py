"""홀로모프 ``Hol(G) = G ⋊ Aut(G)`` 를 ``|G|`` 개 색인 위의 순열군으로 만든다."""

import logging
from dataclasses import dataclass

from holobrace.groups.abelian import (
    AbelianGroup,
    Endomorphism,
    GroupElement,
    aut_order_formula,
    identity_endo,
    iter_automorphisms,
)
from holobrace.groups.permgroup import PermGroup
from holobrace.groups.perms import Perm, is_identity

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class HolElement:
    """``x ↦ shift + auto(x)``."""

    shift: GroupElement
    auto: Endomorphism

    @property
    def group(self) -> AbelianGroup:
        return self.auto.group

    def act(self, x: int) -> int:
        g = self.group
        return g.index(g.add(self.shift, self.auto.apply(g.element(x))))

    def as_permutation(self) -> Perm:
        return tuple(self.act(x) for x in range(self.group.order))


def hol_mul(a: HolElement, b: HolElement) -> HolElement:
    """``(g, α)(h, β) = (g + α(h), α∘β)``."""
    g = a.group
    return HolElement(g.add(a.shift, a.auto.apply(b.shift)), a.auto.compose(b.auto))


def hol_inv(a: HolElement) -> HolElement:
    """``(g, α)⁻¹ = (−α⁻¹(g), α⁻¹)``."""
    g = a.group
    perm = a.auto.as_permutation()
    inverse_images = [0] * g.order
    for x, y in enumerate(perm):
        inverse_images[y] = x
    alpha_inv = Endomorphism(
        g,
        tuple(
            g.element(inverse_images[g.index(g.generator(i))]) for i in range(g.rank)
        ),
    )
    return HolElement(g.neg(alpha_inv.apply(a.shift)), alpha_inv)


def translation(group: AbelianGroup, shift: GroupElement) -> HolElement:
    return HolElement(shift, identity_endo(group))


def from_permutation(group: AbelianGroup, perm: Perm) -> HolElement:
    """홀로모프 순열에서 ``(shift, auto)`` 를 복원한다.

    ``shift = perm(0)``, ``auto(e_i) = perm(e_i) − shift``.
    """
    shift = group.element(perm[0])
    images = tuple(
        group.sub(group.element(perm[group.index(group.generator(i))]), shift)
        for i in range(group.rank)
    )
    element = HolElement(shift, Endomorphism(group, images))
    if element.as_permutation() != perm:
        raise ValueError("permutation is not an element of the holomorph")
    return element


def translation_generators(group: AbelianGroup) -> list[Perm]:
    """표준 생성원에 의한 평행이동."""
    return [
        translation(group, group.generator(i)).as_permutation()
        for i in range(group.rank)
    ]


def aut_generators(group: AbelianGroup, max_order: int | None = None) -> list[Perm]:
    """``Aut(G)`` 의 생성 집합.

    자기동형을 결정적 순서로 훑으며 아직 생성되지 않은 것만 고르고,
    위수 공식에 도달하면 멈춘다.
    """
    target = aut_order_formula(group)
    span = PermGroup(group.order, [])
    chosen: list[Perm] = []
    for alpha in iter_automorphisms(group, max_order):
        if span.order() == target:
            break
        perm = alpha.as_permutation()
        if is_identity(perm) or span.contains(perm):
            continue
        chosen.append(perm)
        span = PermGroup(group.order, chosen)
    return chosen


def hol_generators(group: AbelianGroup, max_order: int | None = None) -> list[Perm]:
    """평행이동과 ``Aut(G)`` 생성원."""
    return translation_generators(group) + aut_generators(group, max_order)


def holomorph(group: AbelianGroup, max_order: int | None = None) -> PermGroup:
    """``Hol(G)`` 순열군."""
    hol = PermGroup(group.order, hol_generators(group, max_order))
    logger.info(f"Hol({group.descriptor}) built: order {hol.order()}")
    return hol
