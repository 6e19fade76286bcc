"""Circulant matrices of multisections and the determinant identity chain.

For an even period ``n = 2k`` the restriction system of the admissible
family ``{0..k-1} mod 2k`` is the upper-left quarter of an ``n x n``
circulant whose first row holds the multisections of the reciprocal loop
series.  A companion circulant built from multisections of the escaping
series is related entry-wise by one multiplication with ``4**d t``, and a
determinant-preserving column substitution connects the two quarters.  Via
Cramer's rule this expresses the even multisection of the restricted walk
series as a ratio of quarter determinants, and in one dimension the full
determinant collapses to ``sqrt(1 - (4t)**(2k))``.
"""

from __future__ import annotations

from .loops import LoopModel
from .periodic import hajnal_nagy_set
from .series import TruncatedSeries, inv_sqrt_one_minus_monomial
from .system import SeriesMatrix, restricted_path_gf


class Circulant:
    """Square matrix determined by its first row: entry(i, j) = row[(j - i) % n]."""

    __slots__ = ("first_row",)

    def __init__(self, first_row):
        row = tuple(first_row)
        if not row:
            raise ValueError("circulant needs at least one entry")
        if len({entry.order for entry in row}) != 1:
            raise ValueError("entries must share one truncation order")
        self.first_row = row

    @property
    def n(self) -> int:
        return len(self.first_row)

    @property
    def order(self) -> int:
        return self.first_row[0].order

    def entry(self, i: int, j: int) -> TruncatedSeries:
        return self.first_row[(j - i) % self.n]

    def to_matrix(self) -> SeriesMatrix:
        n = self.n
        return SeriesMatrix(
            [[self.entry(i, j) for j in range(n)] for i in range(n)]
        )


def restriction_circulant(dim: int, n: int, order: int) -> Circulant:
    """Circulant whose principal submatrices are restriction system matrices.

    The first row is built two equivalent ways and cross-checked: from the
    simple-loop series (diagonal entries get the extra 1) and as the
    multisections of the reciprocal loop series.
    """
    if n < 1:
        raise ValueError("circulant size must be positive")
    model = LoopModel(dim, order)
    excursions = model.primitive_excursion_gf()
    one = TruncatedSeries.one(order)
    from_excursions = [one - excursions.multisection(n, 0)] + [
        -excursions.multisection(n, j) for j in range(1, n)
    ]
    reciprocal = model.loop_gf().inverse()
    from_reciprocal = [reciprocal.multisection(n, j) for j in range(n)]
    assert from_excursions == from_reciprocal, (
        "the two constructions of the restriction row disagree"
    )
    return Circulant(from_excursions)


def escaping_circulant(dim: int, n: int, order: int) -> Circulant:
    """Circulant built from the multisections of the escaping series."""
    if n < 1:
        raise ValueError("circulant size must be positive")
    escaping = LoopModel(dim, order).escaping_gf()
    return Circulant([escaping.multisection(n, j) for j in range(n)])


def row_relation_check(dim: int, n: int, order: int) -> bool:
    """Entry-wise relation between the two first rows.

    Subtracting the reciprocal loop series from the escaping series leaves
    ``4**d t`` times the escaping series, so each difference of row entries
    is the ``t``-shift of the cyclically previous escaping entry.
    """
    restriction_row = restriction_circulant(dim, n, order).first_row
    escaping_row = escaping_circulant(dim, n, order).first_row
    weight = 4**dim
    return all(
        escaping_row[j] - restriction_row[j]
        == escaping_row[(j - 1) % n].shift_by_monomial(weight, 1)
        for j in range(n)
    )


def series_determinant(matrix: SeriesMatrix) -> TruncatedSeries:
    """Exact determinant by elimination; every pivot must be a unit."""
    n = matrix.n
    rows = [list(row) for row in matrix.rows]
    det = TruncatedSeries.one(matrix.order)
    for i in range(n):
        pivot = rows[i][i]
        if pivot.constant_term == 0:
            raise ArithmeticError(
                "determinant needs unit pivots; found zero constant term"
            )
        det = det * pivot
        inv = pivot.inverse()
        for r in range(i + 1, n):
            factor = rows[r][i] * inv
            rows[r] = [rows[r][j] - factor * rows[i][j] for j in range(n)]
    return det


def quarter(circ: Circulant, which: str) -> SeriesMatrix:
    """Upper-left ("left") or upper-right ("right") quarter of an even circulant.

    The lower band repeats the upper one with its halves swapped; that block
    symmetry is asserted on every call.
    """
    if circ.n % 2 != 0:
        raise ValueError("quarter split needs an even circulant size")
    k = circ.n // 2
    if which == "left":
        col0 = 0
    elif which == "right":
        col0 = k
    else:
        raise ValueError("which must be 'left' or 'right'")
    for i in range(k):
        for j in range(k):
            assert circ.entry(k + i, j) == circ.entry(i, k + j), (
                "lower-left block must repeat the upper-right one"
            )
            assert circ.entry(k + i, k + j) == circ.entry(i, j), (
                "lower-right block must repeat the upper-left one"
            )
    return SeriesMatrix(
        [[circ.entry(i, col0 + j) for j in range(k)] for i in range(k)]
    )


def column_substitution_check(dim: int, k: int, order: int) -> bool:
    """Replacing the first quarter column by the escaping one preserves the
    determinant of the escaping quarter.

    Column operations using the entry-wise row relation turn the substituted
    matrix into the escaping quarter without changing the determinant.
    """
    left_restriction = quarter(restriction_circulant(dim, 2 * k, order), "left")
    left_escaping = quarter(escaping_circulant(dim, 2 * k, order), "left")
    substituted = SeriesMatrix(
        [
            [
                left_escaping.entry(i, 0) if j == 0 else left_restriction.entry(i, j)
                for j in range(k)
            ]
            for i in range(k)
        ]
    )
    return series_determinant(substituted) == series_determinant(left_escaping)


def cramer_ratio_check(dim: int, k: int, order: int) -> bool:
    """The even multisection of the solved walk series times the restriction
    quarter determinant equals the escaping quarter determinant."""
    target = restricted_path_gf(dim, hajnal_nagy_set(k), 0, order).multisection(
        2 * k, 0
    )
    det_restriction = series_determinant(
        quarter(restriction_circulant(dim, 2 * k, order), "left")
    )
    det_escaping = series_determinant(
        quarter(escaping_circulant(dim, 2 * k, order), "left")
    )
    return det_escaping == target * det_restriction


def hn_determinant_check(k: int, order: int) -> bool:
    """One-dimensional determinant chain behind the Hajnal-Nagy identity.

    First, the escaping quarter determinant times the full circulant
    determinant gives back the restriction quarter determinant (the two full
    circulants are inverse to each other when ``dim == 1``).  Second, the
    full determinant is exactly ``sqrt(1 - (4t)**(2k))``.
    """
    full = restriction_circulant(1, 2 * k, order)
    det_full = series_determinant(full.to_matrix())
    det_restriction = series_determinant(quarter(full, "left"))
    det_escaping = series_determinant(
        quarter(escaping_circulant(1, 2 * k, order), "left")
    )
    block_identity = det_escaping * det_full == det_restriction
    closed_form = (
        det_full * inv_sqrt_one_minus_monomial(4 ** (2 * k), 2 * k, order)
        == TruncatedSeries.one(order)
    )
    return block_identity and closed_form
