"""Complete intersections in a product of projective spaces.

An intersection is recorded purely by the multidegrees of its defining
divisors.  Everything computed "on" the subvariety is pushed to the ambient
space: an integral over the intersection is the ambient integral against its
fundamental class, the product of the divisor classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import DegreeMismatchError, ValidationError
from .ring import AmbientSpace, CohomClass, divisor_class, integrate


def _det(entries) -> Fraction:
    n = len(entries)
    if n == 1:
        return Fraction(entries[0][0])
    if n == 2:
        return Fraction(entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0])
    total = Fraction(0)
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1:] for row in entries[1:])
        term = entries[0][j] * _det(minor)
        total += term if j % 2 == 0 else -term
    return total


@dataclass(frozen=True)
class PairingMatrix:
    """Exact intersection pairing of a row basis against a column basis."""

    row_basis: Tuple[CohomClass, ...]
    col_basis: Tuple[CohomClass, ...]
    entries: Tuple[Tuple[Fraction, ...], ...]

    @property
    def is_square(self) -> bool:
        return len(self.row_basis) == len(self.col_basis)

    @property
    def determinant(self):
        """Determinant for square matrices, ``None`` otherwise."""
        if not self.is_square:
            return None
        return _det(self.entries)

    @property
    def nondegenerate(self) -> bool:
        return self.is_square and self.determinant != 0


class CompleteIntersection:
    """Intersection of divisors of the given multidegrees in an ambient product."""

    __slots__ = ("space", "divisors", "dim", "_fundamental")

    def __init__(self, space: AmbientSpace, divisors: Sequence[Sequence[int]]):
        classes = [divisor_class(space, d) for d in divisors]
        dim = space.total_dim - len(classes)
        if dim < 1:
            raise ValidationError(
                f"{len(classes)} divisors in a {space.total_dim}-dimensional "
                f"ambient space leave dimension {dim}; need at least 1"
            )
        fundamental = space.one()
        for cls in classes:
            fundamental = fundamental * cls
        if fundamental.is_zero():
            raise ValidationError(
                "divisor classes annihilate the ambient ring (zero fundamental class)"
            )
        self.space = space
        self.divisors = tuple(tuple(d) for d in divisors)
        self.dim = dim
        self._fundamental = fundamental

    def fundamental_class(self) -> CohomClass:
        """Product of the divisor classes; the unit class for no divisors."""
        return self._fundamental

    def intersection_number(self, factors: Sequence[CohomClass]) -> Fraction:
        """Integral over the intersection of a product of ambient classes.

        Factors must be homogeneous ambient classes whose degrees sum to the
        intersection's dimension.  A zero factor short-circuits to 0 since
        the integral vanishes regardless of degree bookkeeping.
        """
        total = 0
        for f in factors:
            if f.space != self.space:
                raise ValidationError("factor lives on a different ambient space")
            d = f.degree()
            if d is None:
                return Fraction(0)
            total += d
        if total != self.dim:
            raise DegreeMismatchError(self.dim, total)
        acc = self._fundamental
        for f in factors:
            acc = acc * f
        return integrate(acc)

    def pairing_matrix(self, row_basis, col_basis) -> PairingMatrix:
        """Matrix of intersection numbers of degree-1 rows against degree dim-1 columns."""
        rows = tuple(row_basis)
        cols = tuple(col_basis)
        for i, r in enumerate(rows):
            if r.degree() != 1:
                raise ValidationError(f"row class {i} must have degree 1")
        for j, c in enumerate(cols):
            d = c.degree()
            if d is not None and d != self.dim - 1:
                raise ValidationError(
                    f"column class {j} must have degree {self.dim - 1}, got {d}"
                )
        entries = tuple(
            tuple(self.intersection_number([r, c]) for c in cols) for r in rows
        )
        return PairingMatrix(rows, cols, entries)

    def __eq__(self, other):
        if not isinstance(other, CompleteIntersection):
            return NotImplemented
        return self.space == other.space and self.divisors == other.divisors

    def __hash__(self):
        return hash((self.space, self.divisors))

    def __repr__(self):
        return f"CompleteIntersection({self.space!r}, {list(self.divisors)})"
