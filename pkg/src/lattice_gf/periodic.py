"""Periodic sets of admissible time points and the cyclic shift distance.

Walks live on the half-time axis: the space origin can only be occupied at
even times ``2a``, and a restriction names the residues of ``a`` modulo a
fixed period at which touching the origin is allowed.  Residue 0 is always
admissible because every walk starts on the axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class PeriodicSet:
    """Admissible residues on the half-time axis, repeating with ``period``."""

    residues: tuple[int, ...]
    period: int

    def __post_init__(self):
        if not isinstance(self.period, int) or self.period < 1:
            raise ValueError("period must be a positive integer")
        res = tuple(self.residues)
        if not res:
            raise ValueError("at least one admissible residue is required")
        if any(not isinstance(a, int) for a in res):
            raise ValueError("residues must be integers")
        if len(set(res)) != len(res):
            raise ValueError(f"duplicate residues in {res!r}")
        if any(a < 0 or a >= self.period for a in res):
            raise ValueError(f"residues must lie in [0, {self.period})")
        res = tuple(sorted(res))
        if res[0] != 0:
            raise ValueError("residue 0 must be admissible")
        object.__setattr__(self, "residues", res)

    @classmethod
    def full(cls, period: int) -> "PeriodicSet":
        """The unrestricted set: every residue modulo ``period`` admissible."""
        return cls(tuple(range(period)), period)

    @property
    def size(self) -> int:
        return len(self.residues)

    @property
    def is_full(self) -> bool:
        return len(self.residues) == self.period

    def is_admissible_half_time(self, half_time: int) -> bool:
        """Whether the origin may be occupied at time ``2 * half_time``."""
        if half_time < 0:
            raise ValueError("half-time must be nonnegative")
        return half_time % self.period in self.residues


def shift_distance(start: int, target: int, period: int) -> int:
    """Number of forward arcs from ``start`` to ``target`` on the oriented
    ``period``-gon whose vertices are the residue classes."""
    if period < 1:
        raise ValueError("period must be positive")
    if not 0 <= start < period:
        raise ValueError(f"start residue {start} outside [0, {period})")
    if not 0 <= target < period:
        raise ValueError(f"target residue {target} outside [0, {period})")
    return (target - start) % period


def hajnal_nagy_set(k: int) -> PeriodicSet:
    """The period-``2k`` set admitting exactly the residues ``0..k-1``.

    This is the family whose even multisection of the origin-started
    restricted-walk generating function has the closed form
    ``(1 - (4t)**(2k)) ** (-1/2)`` in one dimension.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    return PeriodicSet(tuple(range(k)), 2 * k)
