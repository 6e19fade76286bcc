"""Exact truncated formal power series over rational coefficients.

A series is a dense vector of ``fractions.Fraction`` coefficients
``c0, c1, ..., c_{N-1}`` for a fixed truncation order ``N``.  The order is
part of the value: binary operations refuse operands of different orders
instead of silently re-truncating, which keeps long identity chains honest
about how far they are exact.

Everywhere in this package one unit of the formal parameter ``t`` accounts
for two lattice steps, so the coefficient at index ``j`` counts objects of
path length ``2j``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)


class TruncatedSeries:
    """A power series known exactly up to, but not including, ``t**order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs a positive truncation order")
        self.coeffs = cs

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.constant(0, order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.constant(1, order)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "TruncatedSeries":
        if order < 1:
            raise ValueError("truncation order must be positive")
        row = [_ZERO] * order
        row[0] = Fraction(value)
        return cls(row)

    @classmethod
    def monomial(cls, coeff: Scalar, exponent: int, order: int) -> "TruncatedSeries":
        """The series ``coeff * t**exponent`` (zero if the exponent is cut off)."""
        if order < 1:
            raise ValueError("truncation order must be positive")
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        row = [_ZERO] * order
        if exponent < order:
            row[exponent] = Fraction(coeff)
        return cls(row)

    # -- basic queries -----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def coefficient(self, j: int) -> Fraction:
        if not 0 <= j < self.order:
            raise ValueError(f"index {j} outside truncation order {self.order}")
        return self.coeffs[j]

    def _require_same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scale = Fraction(other)
            return TruncatedSeries(c * scale for c in self.coeffs)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [_ZERO] * n
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse in the truncated ring."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        inv0 = 1 / a[0]
        out = [inv0]
        for j in range(1, self.order):
            acc = _ZERO
            for i in range(1, j + 1):
                if a[i]:
                    acc += a[i] * out[j - i]
            out.append(-inv0 * acc)
        return TruncatedSeries(out)

    # -- multisection and shifts --------------------------------------------

    def multisection(self, q: int, r: int) -> "TruncatedSeries":
        """Keep the coefficients at indices congruent to r mod q, zero the rest.

        The result stays full length, so sums of the q multisections rebuild
        the original series coefficient for coefficient.
        """
        if q < 1:
            raise ValueError("multisection modulus must be positive")
        if not 0 <= r < q:
            raise ValueError(f"multisection residue {r} outside [0, {q})")
        return TruncatedSeries(
            c if j % q == r else _ZERO for j, c in enumerate(self.coeffs)
        )

    def shift_by_monomial(self, coeff: Scalar, exponent: int) -> "TruncatedSeries":
        """Multiply by ``coeff * t**exponent``, truncating at the same order."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        scale = Fraction(coeff)
        n = self.order
        out = [_ZERO] * n
        for j in range(exponent, n):
            out[j] = scale * self.coeffs[j - exponent]
        return TruncatedSeries(out)

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                power = "t" if j == 1 else f"t^{j}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        if not parts:
            text = "0"
        else:
            sign, body = parts[0]
            text = ("-" if sign == "-" else "") + body
            for sign, body in parts[1:]:
                text += f" {sign} {body}"
        return f"{text} + O(t^{self.order})"

    def __repr__(self):
        return f"<TruncatedSeries {self}>"


def inv_sqrt_one_minus_monomial(coeff: Scalar, exponent: int, order: int) -> TruncatedSeries:
    """Expansion of ``(1 - coeff * t**exponent) ** (-1/2)``.

    The coefficient at ``t**(j*exponent)`` is ``comb(2j, j) * (coeff/4)**j``
    and every other coefficient vanishes.
    """
    if order < 1:
        raise ValueError("truncation order must be positive")
    if exponent < 1:
        raise ValueError("exponent must be positive")
    base = Fraction(coeff) / 4
    out = [_ZERO] * order
    j = 0
    power = Fraction(1)
    while j * exponent < order:
        out[j * exponent] = comb(2 * j, j) * power
        power *= base
        j += 1
    return TruncatedSeries(out)
