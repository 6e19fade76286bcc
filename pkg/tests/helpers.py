"""Small independent oracles used to freeze expected values in the tests.

Everything here is computed by a different route than the library code it
checks: closed-form binomials, the binomial series for square roots, and a
step-by-step polygon walk for cyclic distances.
"""

from fractions import Fraction
from math import comb


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def central_binomial(n: int) -> int:
    return comb(2 * n, n)


def sqrt_one_minus_4t(order: int) -> list[Fraction]:
    """Coefficients of (1-4t)**(1/2) from the binomial series."""
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for k in range(1, order):
        # binom(1/2, k) / binom(1/2, k-1) = (3 - 2k) / (2k), times (-4)**1
        term *= Fraction(3 - 2 * k, 2 * k) * (-4)
        coeffs.append(term)
    return coeffs


def polygon_distance(start: int, target: int, period: int) -> int:
    """Count forward arcs on the oriented period-gon, one at a time."""
    steps = 0
    vertex = start
    while vertex != target:
        vertex = (vertex + 1) % period
        steps += 1
    return steps
