"""Reflecting hyperplanes, chamber separation and pairwise intersection.

A hyperplane is identified with its positive root.  Side tests in ``V*``
are replaced by root signs: for ``f`` in the dominant chamber,
``<x f, alpha> = <f, x^-1 alpha>`` has the sign of the root ``x^-1 alpha``.
Two distinct hyperplanes meet inside the interior of the Tits cone iff
``-1 < B(alpha_P, alpha_Q) < 1``.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .core import CoxeterSystem, GroupElement, RootVector, positive_representative, root_key, root_sign

__all__ = [
    "Hyperplane",
    "hyperplane",
    "intersects_interior",
    "separates",
    "reflect_hyperplane",
    "is_intersecting_set",
    "intersect_pairwise",
    "sorted_hyperplanes",
]


@dataclass(frozen=True)
class Hyperplane:
    """``H_alpha`` for a positive root ``alpha``."""

    system: CoxeterSystem
    alpha: RootVector

    def __post_init__(self):
        if root_sign(self.alpha) < 0:
            raise ValueError("hyperplanes are keyed by positive roots")

    def __eq__(self, other):
        if not isinstance(other, Hyperplane):
            return NotImplemented
        return self.system is other.system and self.alpha == other.alpha

    def __hash__(self):
        return hash(self.alpha)

    def sort_key(self):
        return root_key(self.alpha)

    def to_json(self):
        return [c.to_json() for c in self.alpha]

    def approx(self) -> tuple:
        return tuple(round(float(c), 6) for c in self.alpha)

    def reflection(self) -> GroupElement:
        return self.system.reflection(self.alpha)

    def __repr__(self):
        return f"H{self.approx()}"


def hyperplane(system: CoxeterSystem, root: RootVector) -> Hyperplane:
    """The hyperplane of ``root`` (either sign)."""
    return Hyperplane(system, positive_representative(tuple(root)))


def sorted_hyperplanes(planes: Iterable[Hyperplane]) -> list[Hyperplane]:
    return sorted(planes, key=Hyperplane.sort_key)


def intersects_interior(P: Hyperplane, Q: Hyperplane) -> bool:
    """``P`` and ``Q`` meet in the interior of the Tits cone.

    A hyperplane always meets the interior, so ``P == Q`` gives ``True``.
    """
    if P == Q:
        return True
    b = P.system.bilinear_form(P.alpha, Q.alpha)
    return -1 < b < 1


def separates(P: Hyperplane, x: GroupElement, y: GroupElement) -> bool:
    """``P`` separates the chambers ``xC`` and ``yC``."""
    system = P.system
    sx = root_sign(_act_inverse(system, x, P.alpha))
    sy = root_sign(_act_inverse(system, y, P.alpha))
    return sx != sy


def _act_inverse(system, x, v):
    acc = []
    zero = system.field.zero
    for row in x.inverse_matrix:
        total = zero
        for a, b in zip(row, v):
            if not a.is_zero() and not b.is_zero():
                total = total + a * b
        acc.append(total)
    return tuple(acc)


def reflect_hyperplane(w: GroupElement, P: Hyperplane) -> Hyperplane:
    """``w H_alpha = H_{w alpha}``."""
    return hyperplane(P.system, P.system.act(w, P.alpha))


def intersect_pairwise(first: Iterable[Hyperplane], second: Iterable[Hyperplane]) -> bool:
    """Every member of ``first`` meets every member of ``second``; vacuous for empty sets."""
    second = list(second)
    return all(intersects_interior(P, Q) for P in first for Q in second)


def is_intersecting_set(planes: Iterable[Hyperplane]) -> bool:
    planes = list(dict.fromkeys(planes))
    return all(intersects_interior(planes[i], planes[j])
               for i in range(len(planes)) for j in range(i + 1, len(planes)))
