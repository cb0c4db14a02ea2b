"""
The MIT License (MIT)

Copyright (c) 2024-present Developer Anonymous

Permission is hereby granted, free of charge, to any person obtaining a
copy of this software and associated documentation files (the "Software"),
to deal in the Software without restriction, including without limitation
the rights to use, copy, modify, merge, publish, distribute, sublicense,
and/or sell copies of the Software, and to permit persons to whom the
Software is furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in
all copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS
OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
DEALINGS IN THE SOFTWARE.
"""

from __future__ import annotations

import itertools
from math import lcm
from typing import Any, Iterable, Iterator, Optional, Sequence

from sympy.polys.domains import QQ

from .._types import Rows, Vector
from ..errors import ScalarMismatch, UnsupportedScalar
from .matrix import Mat, hnf_rows, rref_rows, snf_rows, transpose, vector_times
from .scalars import ScalarSpec

__all__ = (
    "Submodule",
    "kernel",
    "preimage",
    "is_pure",
    "saturate",
    "rational_span",
    "integer_points",
)


class Submodule:
    """Represents a finitely generated submodule of the coordinate space ``S ** n``.

    The generators are kept in a canonical form, so two submodules are equal exactly
    when their :attr:`basis` tuples are equal:

    - over the integers, the non-zero rows of the row Hermite normal form;
    - over the rationals and prime fields, the reduced row echelon form;
    - over a composite modulus ``m``, the rows of the Hermite normal form of the
      full-rank lattice ``L + m * Z ** n`` whose pivot is not ``m``.

    .. container:: operations

        .. describe:: x == y

            Checks if two submodules are equal.

        .. describe:: x <= y

            Checks if ``x`` is contained in ``y``.

        .. describe:: x + y

            Returns the sum.

        .. describe:: x & y

            Returns the intersection.

        .. describe:: v in x

            Checks if a coordinate vector is a member.

    Attributes
    ----------
    ambient_rank: :class:`int`
        The length ``n`` of the coordinate vectors.
    scalar: :class:`ScalarSpec`
        The coefficient domain.
    basis: Tuple[Tuple[Any, ...], ...]
        The canonical generators.
    """

    __slots__ = ("ambient_rank", "scalar", "basis", "_pivots", "_lattice")

    def __init__(self, ambient_rank: int, scalar: ScalarSpec, generators: Iterable[Sequence[Any]] = ()) -> None:
        self.ambient_rank: int = ambient_rank
        self.scalar: ScalarSpec = scalar
        rows = [scalar.vector(generator) for generator in generators]
        for row in rows:
            if len(row) != ambient_rank:
                raise ScalarMismatch(f"rank {len(row)} vector", f"rank {ambient_rank} submodule")

        self._lattice: Optional[tuple[Vector, ...]] = None
        if scalar.is_field:
            reduced, pivots = rref_rows(rows, scalar, ambient_rank)
            basis = reduced[: len(pivots)]
        elif scalar.is_integer:
            reduced, _, pivots = hnf_rows(rows, ambient_rank)
            basis = reduced[: len(pivots)]
        else:
            m: int = scalar.modulus  # type: ignore
            full = rows + [[m * int(i == j) for j in range(ambient_rank)] for i in range(ambient_rank)]
            reduced, _, _ = hnf_rows(full, ambient_rank)
            lattice = tuple(tuple(row) for row in reduced[:ambient_rank])
            self._lattice = lattice
            basis = [row for i, row in enumerate(lattice) if row[i] != m]
            pivots = [i for i, row in enumerate(lattice) if row[i] != m]

        self.basis: tuple[Vector, ...] = tuple(tuple(row) for row in basis)
        self._pivots: tuple[int, ...] = tuple(pivots)

    @classmethod
    def zero(cls, ambient_rank: int, scalar: ScalarSpec) -> Submodule:
        return cls(ambient_rank, scalar)

    @classmethod
    def full(cls, ambient_rank: int, scalar: ScalarSpec) -> Submodule:
        return cls(ambient_rank, scalar, [[int(i == j) for j in range(ambient_rank)] for i in range(ambient_rank)])

    def __repr__(self) -> str:
        return f"<Submodule ambient_rank={self.ambient_rank} scalar={self.scalar} rank={self.rank}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Submodule):
            return NotImplemented
        return (
            self.ambient_rank == other.ambient_rank
            and self.scalar == other.scalar
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_rank, self.scalar, self.basis))

    def __contains__(self, vector: Sequence[Any]) -> bool:
        return self.contains(vector)

    def __le__(self, other: Submodule) -> bool:
        return self.issubset(other)

    def __add__(self, other: Submodule) -> Submodule:
        return self.sum(other)

    def __and__(self, other: Submodule) -> Submodule:
        return self.intersect(other)

    @property
    def rank(self) -> int:
        """:class:`int`: The number of canonical generators."""
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self == Submodule.full(self.ambient_rank, self.scalar)

    def generator_matrix(self) -> Mat:
        return Mat(self.basis, self.scalar, ncols=self.ambient_rank)

    def _check(self, other: Submodule) -> None:
        if self.ambient_rank != other.ambient_rank or self.scalar != other.scalar:
            raise ScalarMismatch(
                f"{self.scalar} rank {self.ambient_rank}",
                f"{other.scalar} rank {other.ambient_rank}",
            )

    def _rows(self) -> tuple[Vector, ...]:
        return self._lattice if self._lattice is not None else self.basis

    def reduce(self, vector: Sequence[Any]) -> Vector:
        """Returns the canonical representative of ``vector`` modulo this submodule.

        Two vectors have the same representative exactly when their difference is a
        member. Over fields the map is linear.
        """
        x = list(self.scalar.vector(vector))
        if len(x) != self.ambient_rank:
            raise ScalarMismatch(f"rank {len(x)} vector", f"rank {self.ambient_rank} submodule")
        modulus = self.scalar.modulus

        if self.scalar.is_field:
            for row, c in zip(self.basis, self._pivots):
                factor = x[c]
                if factor != 0:
                    x = [a - factor * b for a, b in zip(x, row)]
            return self.scalar.reduce(x)

        rows = self._rows()
        pivots = self._pivots if self._lattice is None else range(self.ambient_rank)
        for row, c in zip(rows, pivots):
            q = x[c] // row[c]
            if q:
                x = [a - q * b for a, b in zip(x, row)]
        if modulus is not None:
            x = [a % modulus for a in x]
        return tuple(x)

    def contains(self, vector: Sequence[Any]) -> bool:
        """Checks whether ``vector`` is a member of this submodule."""
        return not any(self.reduce(vector))

    def issubset(self, other: Submodule) -> bool:
        self._check(other)
        return all(other.contains(row) for row in self.basis)

    def sum(self, other: Submodule) -> Submodule:
        """Returns the smallest submodule containing both operands.

        Raises
        ------
        ScalarMismatch
            The operands live in different coordinate spaces.
        """
        self._check(other)
        return Submodule(self.ambient_rank, self.scalar, self.basis + other.basis)

    def intersect(self, other: Submodule) -> Submodule:
        """Returns the intersection, computed from the kernel of the stacked generators.

        Raises
        ------
        ScalarMismatch
            The operands live in different coordinate spaces.
        """
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Submodule.zero(self.ambient_rank, self.scalar)

        first = self._rows()
        stacked = list(first) + list(other._rows())
        spec = self.scalar if self._lattice is None else ScalarSpec.integers()
        solutions = _kernel_vectors(stacked, self.ambient_rank, spec)
        generators = [vector_times(c[: len(first)], first, spec, self.ambient_rank) for c in solutions]
        return Submodule(self.ambient_rank, self.scalar, generators)

    def map_scalar(self, scalar: ScalarSpec) -> Submodule:
        """Returns the submodule spanned by the same generators over another domain.

        This is the image under the coordinatewise map, e.g. reduction modulo ``m``
        or the inclusion of the integers into the rationals.
        """
        if scalar.is_rational:
            return Submodule(self.ambient_rank, scalar, [[QQ(int(v)) for v in row] for row in self.basis])
        if self.scalar.is_rational:
            raise UnsupportedScalar("map_scalar", self.scalar)
        return Submodule(self.ambient_rank, scalar, [[int(v) for v in row] for row in self.basis])

    def size(self) -> int:
        """Returns the number of elements of a submodule over a finite domain.

        Raises
        ------
        UnsupportedScalar
            The domain is infinite.
        """
        if not self.scalar.is_finite:
            raise UnsupportedScalar("size", self.scalar)
        m: int = self.scalar.modulus  # type: ignore
        if self.scalar.is_field:
            return m ** len(self.basis)
        count = 1
        for row, c in zip(self.basis, self._pivots):
            count *= m // row[c]
        return count

    def elements(self) -> Iterator[Vector]:
        """Iterates over every element of a submodule over a finite domain, each once.

        Raises
        ------
        UnsupportedScalar
            The domain is infinite.
        """
        if not self.scalar.is_finite:
            raise UnsupportedScalar("elements", self.scalar)
        m: int = self.scalar.modulus  # type: ignore
        if self.scalar.is_field:
            ranges = [range(m)] * len(self.basis)
        else:
            ranges = [range(m // row[c]) for row, c in zip(self.basis, self._pivots)]
        for coeffs in itertools.product(*ranges):
            yield vector_times(coeffs, self.basis, self.scalar, self.ambient_rank)


def _kernel_vectors(rows: Rows, ncols: int, scalar: ScalarSpec) -> list[Vector]:
    # generators of {x : x @ rows = 0}, not canonical
    count = len(rows)
    if scalar.is_field:
        augmented = [list(row) + [int(i == j) for j in range(count)] for i, row in enumerate(rows)]
        augmented = [scalar.vector(row) for row in augmented]
        reduced, pivots = rref_rows(augmented, scalar, ncols + count, limit=ncols)
        return [tuple(row[ncols:]) for row in reduced[len(pivots):]]

    if scalar.is_integer:
        _, transform, pivots = hnf_rows(rows, ncols, track=True)
        return [tuple(row) for row in (transform or [])[len(pivots):]]

    m: int = scalar.modulus  # type: ignore
    stacked = [list(row) for row in rows] + [[m * int(i == j) for j in range(ncols)] for i in range(ncols)]
    _, transform, pivots = hnf_rows(stacked, ncols, track=True)
    return [tuple(row[:count]) for row in (transform or [])[len(pivots):]]


def kernel(m: Mat | Rows, scalar: Optional[ScalarSpec] = None, *, ncols: Optional[int] = None) -> Submodule:
    """Computes the left kernel ``{x : x @ m = 0}`` as a canonical submodule.

    Over the integers the result is the full solution lattice, which is always
    saturated.

    Parameters
    ----------
    m: Union[:class:`Mat`, Sequence[Sequence]]
        The matrix. Plain rows need ``scalar`` and, when empty, ``ncols``.
    scalar: Optional[:class:`ScalarSpec`]
        The coefficient domain, defaults to the one of ``m``.

    Returns
    -------
    :class:`Submodule`
        A submodule of ``S ** m.nrows``.
    """
    if isinstance(m, Mat):
        rows, width, spec = m.rows, m.ncols, scalar or m.scalar
    else:
        if scalar is None:
            raise TypeError("scalar is required when passing plain rows")
        rows, spec = [scalar.vector(row) for row in m], scalar
        width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return Submodule(len(rows), spec, _kernel_vectors(rows, width, spec))


def preimage(rows: Rows, target: Submodule) -> Submodule:
    """Returns ``{x : x @ rows in target}``.

    Parameters
    ----------
    rows: Sequence[Sequence]
        The ``k x n`` matrix of a linear map ``S ** k -> S ** n``.
    target: :class:`Submodule`
        A submodule of ``S ** n``.

    Returns
    -------
    :class:`Submodule`
        A submodule of ``S ** k``.
    """
    spec = target.scalar
    count = len(rows)
    width = target.ambient_rank
    converted = [spec.vector(row) for row in rows]
    if spec.is_field or spec.is_integer:
        stacked = converted + list(target.basis)
        solutions = _kernel_vectors(stacked, width, spec)
    else:
        stacked = [list(row) for row in converted] + [list(row) for row in target._rows()]
        solutions = _kernel_vectors(stacked, width, ScalarSpec.integers())
    return Submodule(count, spec, [c[:count] for c in solutions])


def is_pure(sub: Submodule) -> bool:
    """Checks whether an integer lattice is pure in ``Z ** n``.

    The ambient quotient is torsion-free exactly when every Smith invariant factor
    of the generator matrix is one.

    Raises
    ------
    UnsupportedScalar
        The submodule is not over the integers.
    """
    if not sub.scalar.is_integer:
        raise UnsupportedScalar("is_pure", sub.scalar)
    if sub.is_zero():
        return True
    diagonal, _, _ = snf_rows(sub.basis, sub.ambient_rank)
    return all(diagonal[i][i] == 1 for i in range(sub.rank))


def saturate(sub: Submodule) -> Submodule:
    """Returns the smallest pure lattice containing ``sub``.

    This is the double orthogonal ``(sub ^ perp) ^ perp`` computed with two integer
    kernels.

    Raises
    ------
    UnsupportedScalar
        The submodule is not over the integers.
    """
    if not sub.scalar.is_integer:
        raise UnsupportedScalar("saturate", sub.scalar)
    n = sub.ambient_rank
    if sub.is_zero():
        return sub
    orthogonal = kernel(transpose(sub.basis, n), sub.scalar, ncols=sub.rank)
    return kernel(transpose(orthogonal.basis, n), sub.scalar, ncols=orthogonal.rank)


def rational_span(sub: Submodule) -> Submodule:
    """Returns the rational subspace spanned by an integer lattice."""
    return sub.map_scalar(ScalarSpec.rationals())


def integer_points(sub: Submodule) -> Submodule:
    """Returns the lattice of integer vectors in a rational subspace.

    Raises
    ------
    UnsupportedScalar
        The submodule is not over the rationals.
    """
    if not sub.scalar.is_rational:
        raise UnsupportedScalar("integer_points", sub.scalar)
    integers = ScalarSpec.integers()
    rows = []
    for row in sub.basis:
        denominator = 1
        for value in row:
            denominator = lcm(denominator, int(value.denominator))
        rows.append([int((value * denominator).numerator) for value in row])
    return saturate(Submodule(sub.ambient_rank, integers, rows))
