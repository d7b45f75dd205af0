"""Parabolic subgroups, quotients, and the block factorization.

A subset J of the generator positions [0, n-1] cuts the window into blocks
at the complementary positions.  Every element factors uniquely as
``tau * delta`` where tau (the quotient representative) has descents only
at the complementary positions and delta lies in the parabolic subgroup;
length and color weight are additive across the factorization.

When 0 is in J the subgroup keeps colors inside the first block, so delta's
first block is the order- and color-preserving reduction of the original
first block (absolute values replaced by their in-block ranks, colors left
in place); otherwise delta is a plain uncolored block permutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import (
    ColoredPermutation,
    enumerate_group,
    order_key,
    statistics,
)

__all__ = [
    "DescentClass",
    "decompose",
    "is_in_parabolic",
    "is_in_quotient",
    "parabolic_set",
    "quotient_set",
]


@dataclass(frozen=True)
class DescentClass:
    """A generator subset J of [0, n-1] for the r-colored group on n letters."""

    r: int
    n: int
    members: frozenset

    def __post_init__(self):
        if self.r < 1 or self.n < 0:
            raise ValueError("need r >= 1 and n >= 0")
        if any(not 0 <= j < self.n for j in self.members):
            raise ValueError("J must be a subset of [0, n-1]")

    @classmethod
    def of(cls, r, n, members):
        return cls(r, n, frozenset(members))

    @property
    def complement(self):
        """The allowed descent positions d_1 < ... < d_k."""
        return tuple(sorted(set(range(self.n)) - self.members))

    @property
    def first_block_colored(self):
        return 0 in self.members

    def blocks(self):
        """Half-open 0-based position ranges [start, stop) cut by the complement."""
        cuts = sorted({0, self.n, *(d for d in self.complement if d)})
        return [(cuts[i], cuts[i + 1]) for i in range(len(cuts) - 1)]


def _check(gamma, cls):
    if gamma.r != cls.r or gamma.n != cls.n:
        raise ValueError("element and descent class must share r and n")


def decompose(gamma, cls):
    """Unique factorization ``gamma = tau * delta`` along a descent class.

    tau carries each block rearranged increasingly (first block by absolute
    value, colors dropped, when the subgroup is colored there); delta
    records the block positions that sort back, keeping first-block colors
    in place in the colored case.
    """
    _check(gamma, cls)
    n = cls.n
    tau_sigma = [0] * n
    tau_colors = [0] * n
    delta_sigma = [0] * n
    delta_colors = [0] * n
    for bi, (start, stop) in enumerate(cls.blocks()):
        block = list(range(start, stop))
        if bi == 0 and cls.first_block_colored:
            ordered = sorted(block, key=lambda i: gamma.sigma[i])
            for slot, i in enumerate(ordered):
                tau_sigma[start + slot] = gamma.sigma[i]
            rank = {gamma.sigma[i]: slot + 1 for slot, i in enumerate(ordered)}
            for i in block:
                delta_sigma[i] = start + rank[gamma.sigma[i]]
                delta_colors[i] = gamma.colors[i]
        else:
            ordered = sorted(block,
                             key=lambda i: order_key(gamma.sigma[i], gamma.colors[i]))
            for slot, i in enumerate(ordered):
                tau_sigma[start + slot] = gamma.sigma[i]
                tau_colors[start + slot] = gamma.colors[i]
            position = {i: start + slot + 1 for slot, i in enumerate(ordered)}
            for i in block:
                delta_sigma[i] = position[i]
    tau = ColoredPermutation(gamma.r, tuple(tau_sigma), tuple(tau_colors))
    delta = ColoredPermutation(gamma.r, tuple(delta_sigma), tuple(delta_colors))
    return tau, delta


def is_in_quotient(gamma, cls):
    """Membership in the quotient: descents confined to the complement of J."""
    _check(gamma, cls)
    return statistics(gamma).des_set <= set(cls.complement)


def is_in_parabolic(gamma, cls):
    """Structural membership test for the parabolic subgroup.

    Each block must map onto itself; colors vanish outside the first block,
    and in the first block only when 0 is in J.
    """
    _check(gamma, cls)
    for bi, (start, stop) in enumerate(cls.blocks()):
        for i in range(start, stop):
            if not start < gamma.sigma[i] <= stop:
                return False
            if gamma.colors[i] and not (bi == 0 and cls.first_block_colored):
                return False
    return True


def quotient_set(cls, max_elements=None):
    """Yield the quotient representatives, in group enumeration order."""
    for gamma in enumerate_group(cls.r, cls.n, max_elements):
        if statistics(gamma).des_set <= set(cls.complement):
            yield gamma


def parabolic_set(cls, max_elements=None):
    """Yield the parabolic subgroup's elements, in group enumeration order."""
    for gamma in enumerate_group(cls.r, cls.n, max_elements):
        if is_in_parabolic(gamma, cls):
            yield gamma
