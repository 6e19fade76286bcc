"""Loop counting on the integer lattice ``Z**d`` with steps ``{-1,+1}**d``.

A loop is a walk that starts and ends at the origin; it is simple when no
nonempty proper prefix returns there.  Every coordinate of a step is +-1, so
a length-``2k`` loop is a product of ``d`` independent one-dimensional loops
and there are ``comb(2k, k)**d`` of them.  Simple loops follow from the
renewal identity

    loops = loops * simple_loops + 1,

and walks that never revisit the origin after the start (escaping walks)
come from dividing the loop series out of the unrestricted walk count.
There are ``2**d`` steps, hence ``4**d`` walks per unit of ``t`` (two
lattice steps), so

    escaping = 1 / (loops * (1 - 4**d t)).

For one and two dimensions ``4**d`` coincides with ``(2d)**2``, the form in
which the factor is usually quoted.

Both derived series feed the restricted-walk linear system: between two
consecutive visits of the space origin a walk is exactly a simple loop, and
after the last visit it is escaping.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ResourceLimitError
from .series import TruncatedSeries

# Generating functions stay cheap in any dimension, but the coefficients
# comb(2k, k)**d grow fast enough that a guard keeps accidental huge inputs
# from stalling a run.  Construct a LoopModel with a larger max_dim to lift it.
MAX_GF_DIM = 4


def loop_count(dim: int, k: int) -> int:
    """Number of length-``2k`` loops of the origin in ``dim`` dimensions."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    if k < 0:
        raise ValueError("half-length must be nonnegative")
    return comb(2 * k, k) ** dim


@dataclass(frozen=True)
class LoopModel:
    """Dimension and truncation order for the loop generating functions."""

    dim: int
    order: int
    max_dim: int = MAX_GF_DIM

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if self.order < 1:
            raise ValueError("truncation order must be positive")
        if self.dim > self.max_dim:
            raise ResourceLimitError(
                f"dimension {self.dim} exceeds the configured bound {self.max_dim}"
            )

    def loop_gf(self) -> TruncatedSeries:
        """Series whose coefficient at ``t**k`` counts length-``2k`` loops."""
        return TruncatedSeries(loop_count(self.dim, k) for k in range(self.order))

    def primitive_excursion_gf(self) -> TruncatedSeries:
        """Series counting simple loops, ``1 - 1/loop_gf``."""
        return TruncatedSeries.one(self.order) - self.loop_gf().inverse()

    def escaping_gf(self) -> TruncatedSeries:
        """Series counting walks that never return to the space origin."""
        steps = TruncatedSeries.monomial(4**self.dim, 1, self.order)
        denom = self.loop_gf() * (TruncatedSeries.one(self.order) - steps)
        return denom.inverse()
