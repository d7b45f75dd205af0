"""Colored biwords and their bijection with compatible-partition triples.

A biword stacks a partition over a colored sequence of the same length.
Where the top row stalls, the bottom row must grow strictly in the
colored-integer order, except that equal bottom values are allowed as long
as an uncolored entry is never followed by a colored copy of itself.  The
boundary convention prepends an uncolored zero column.

Sorting the bottom row yields a colored permutation together with two
partitions, one compatible with the skew inverse and one with the element
itself; that triple determines the biword and gives the bijection both
directions implement.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .group import BudgetExceededError, order_key, skew_inverse
from .encoding import (
    ColoredSequence,
    Partition,
    enumerate_sequences,
    is_compatible,
    lambda_gamma,
    multinomial,
    partitions_in_box,
    pi_of,
)

__all__ = [
    "Biword",
    "Triple",
    "column_multiset",
    "column_realization_count",
    "enumerate_biwords",
    "from_triple",
    "is_biword",
    "to_triple",
]


def is_biword(g, f):
    """Validity of a partition-over-sequence pair, boundary column included."""
    if g.n != f.n:
        raise ValueError("rows must have equal length")
    if not f.in_n0:
        return False
    prev_g, prev_v, prev_c = 0, 0, 0
    for gi, v, c in zip(g.parts, f.values, f.colors):
        if gi == prev_g:
            if v != prev_v:
                if order_key(prev_v, prev_c) >= order_key(v, c):
                    return False
            elif prev_c == 0 and c != 0:
                return False
        prev_g, prev_v, prev_c = gi, v, c
    return True


@dataclass(frozen=True)
class Biword:
    g: Partition
    f: ColoredSequence

    def __post_init__(self):
        if not is_biword(self.g, self.f):
            raise ValueError("rows do not form a valid biword")

    @property
    def n(self):
        return self.g.n


@dataclass(frozen=True)
class Triple:
    gamma: object
    lam: Partition
    mu: Partition

    def __post_init__(self):
        if self.gamma.n != self.lam.n or self.gamma.n != self.mu.n:
            raise ValueError("lengths do not agree")
        if not is_compatible(self.lam, skew_inverse(self.gamma)):
            raise ValueError("first partition is not skew-inverse compatible")
        if not is_compatible(self.mu, self.gamma):
            raise ValueError("second partition is not compatible with the element")


def to_triple(b):
    """Sort the bottom row: the element, the top row, and the sorted values."""
    gamma = pi_of(b.f)
    mu = Partition(tuple(b.f.values[s - 1] for s in gamma.sigma))
    return Triple(gamma=gamma, lam=b.g, mu=mu)


def from_triple(t):
    """Rebuild the biword: top row is the first partition, bottom row is the
    second partition pushed through the skew inverse with colors riding along."""
    f = lambda_gamma(t.mu, skew_inverse(t.gamma))
    return Biword(g=t.lam, f=f)


def enumerate_biwords(r, n, cap_f, cap_g, max_elements=None):
    """Yield every valid biword within the value caps, exactly once.

    Deterministic order: lexicographic in the top row, then in the bottom
    row entries.
    """
    if max_elements is not None:
        tops = math.comb(cap_g + n, n)
        bottoms = (1 + cap_f * r) ** n
        if tops * bottoms > max_elements:
            raise BudgetExceededError(
                f"{tops * bottoms} candidate biwords exceed budget {max_elements}")
    for g in partitions_in_box(n, cap_g):
        for f in enumerate_sequences(r, n, max_cap=cap_f, restrict_n0=True):
            if is_biword(g, f):
                yield Biword(g=g, f=f)


def column_multiset(b):
    """Canonical multiset of (top, value, color) columns."""
    return tuple(sorted(zip(b.g.parts, b.f.values, b.f.colors)))


def column_realization_count(columns, r):
    """Number of biwords realizing a column multiset.

    For each (top, value) cell, the colored copies may permute their colors
    freely, giving a multinomial factor; everything else is forced.
    """
    colored = {}
    for g, v, c in columns:
        if c:
            colored.setdefault((g, v), []).append(c)
    count = 1
    for _, cs in colored.items():
        per_color = [cs.count(h) for h in range(1, r)]
        count *= multinomial(per_color)
    return count
