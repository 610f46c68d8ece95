"""Deterministic refining families of approximations.

A family is an ordered list of approximations over one group with strictly
growing vertex counts, a fixed window radius, and tolerances halving from
level to level (1/2, 1/4, ...).  Rank sequences along such families stand
in for limit values: on exact quotient levels they are constant, so the
final level already equals the limit."""

from __future__ import annotations

from fractions import Fraction

from .approx import SoficApproximation, folner_approx, quotient_approx
from .errors import DomainError
from .groups import (
    FreeAbelianGroup,
    Group,
    TableGroup,
    ball,
    identity_hom,
    projection_hom,
)


def tolerance_schedule(count: int) -> list[Fraction]:
    """Halving tolerances 1/2, 1/4, ..., one per level."""
    if count < 1:
        raise DomainError("families need at least one level")
    return [Fraction(1, 2 ** (k + 1)) for k in range(count)]


def _check_strictly_increasing(values, what: str) -> list[int]:
    values = [int(v) for v in values]
    if not values:
        raise DomainError(f"{what} schedule is empty")
    if any(v < 1 for v in values):
        raise DomainError(f"{what} schedule has a non-positive entry")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise DomainError(f"{what} schedule must be strictly increasing")
    return values


def quotient_family(
    group: FreeAbelianGroup, orders, radius: int
) -> list[SoficApproximation]:
    """Exact quotients Z^d -> (Z/m)^d for each m in orders."""
    if not isinstance(group, FreeAbelianGroup):
        raise DomainError("quotient families need a free-abelian group")
    orders = _check_strictly_increasing(orders, "quotient")
    window = ball(group, radius)
    out = []
    for eps, m in zip(tolerance_schedule(len(orders)), orders):
        hom = projection_hom(group, (m,) * group.rank)
        out.append(
            quotient_approx(
                group, hom, window, epsilon=eps, label=f"quotient:{m}"
            )
        )
    return out


def box_family(group: FreeAbelianGroup, sides, radius: int) -> list[SoficApproximation]:
    """Translation boxes [0, n)^d for each side n."""
    if not isinstance(group, FreeAbelianGroup):
        raise DomainError("box families need a free-abelian group")
    sides = _check_strictly_increasing(sides, "box")
    window = ball(group, radius)
    return [
        folner_approx(group, n, window, epsilon=eps, label=f"box:{n}")
        for eps, n in zip(tolerance_schedule(len(sides)), sides)
    ]


def copies_family(group: TableGroup, copies_list) -> list[SoficApproximation]:
    """Disjoint copies of a finite group acting on itself; the window is the
    whole group, so every ring element is covered."""
    if not isinstance(group, TableGroup):
        raise DomainError("copies families need a finite table group")
    copies_list = _check_strictly_increasing(copies_list, "copies")
    window = list(group.elements())
    hom = identity_hom(group)
    return [
        quotient_approx(
            group, hom, window, copies=c, epsilon=eps, label=f"copies:{c}"
        )
        for eps, c in zip(tolerance_schedule(len(copies_list)), copies_list)
    ]


def build_family(group: Group, kind: str, params, radius: int) -> list[SoficApproximation]:
    """Dispatch on the schedule kind: 'quotient', 'folner', or 'copies'."""
    if kind == "quotient":
        return quotient_family(group, params, radius)
    if kind == "folner":
        if isinstance(group, TableGroup):
            raise DomainError("finite groups refine by 'copies', not 'folner'")
        return box_family(group, params, radius)
    if kind == "copies":
        return copies_family(group, params)
    raise DomainError(f"unknown family kind {kind!r}")


__all__ = [
    "box_family",
    "build_family",
    "copies_family",
    "quotient_family",
    "tolerance_schedule",
]
