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

from typing import Any, Iterable, Iterator, Optional, Sequence

from .._types import Rows, Scalar, Vector
from ..errors import ScalarMismatch, UnsupportedScalar
from .scalars import ScalarSpec

__all__ = (
    "Mat",
    "hermite_normal_form",
    "smith_normal_form",
    "invariant_factors",
)


class Mat:
    """Represents an immutable dense matrix over a :class:`ScalarSpec`.

    Vectors are rows throughout the library, so ``v @ m`` style products are
    written ``vector_times(v, m.rows)``.

    .. container:: operations

        .. describe:: x == y

            Checks if two matrices have the same shape, domain and entries.

        .. describe:: x @ y

            Returns the matrix product.

        .. describe:: x[i, j]

            Returns an entry.

    Attributes
    ----------
    rows: Tuple[Tuple[Any, ...], ...]
        The entries, row by row. Modular entries are canonical residues.
    ncols: :class:`int`
        The number of columns. Kept separately so that matrices with no rows
        still have a shape.
    scalar: :class:`ScalarSpec`
        The domain of the entries.
    """

    __slots__ = ("rows", "ncols", "scalar")

    def __init__(self, rows: Rows, scalar: ScalarSpec, *, ncols: Optional[int] = None) -> None:
        converted = tuple(scalar.vector(row) for row in rows)
        if ncols is None:
            ncols = len(converted[0]) if converted else 0
        for row in converted:
            if len(row) != ncols:
                raise ValueError(f"ragged matrix: expected {ncols} columns, got {len(row)}")
        self.rows: tuple[Vector, ...] = converted
        self.ncols: int = ncols
        self.scalar: ScalarSpec = scalar

    @classmethod
    def identity(cls, size: int, scalar: ScalarSpec) -> Mat:
        return cls(_identity(size), scalar, ncols=size)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, scalar: ScalarSpec) -> Mat:
        return cls([[0] * ncols for _ in range(nrows)], scalar, ncols=ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self.rows[i][j]

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.scalar == other.scalar and self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.scalar, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"<Mat shape={self.shape} scalar={self.scalar}>"

    def __matmul__(self, other: Mat) -> Mat:
        if self.scalar != other.scalar:
            raise ScalarMismatch(str(self.scalar), str(other.scalar))
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        rows = [vector_times(row, other.rows, self.scalar, other.ncols) for row in self.rows]
        return Mat(rows, self.scalar, ncols=other.ncols)

    def transpose(self) -> Mat:
        return Mat(transpose(self.rows, self.ncols), self.scalar, ncols=len(self.rows))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def tolist(self) -> list[list[Scalar]]:
        return [list(row) for row in self.rows]

    def determinant(self) -> Scalar:
        """Returns the exact determinant of a square matrix.

        Integer matrices use fraction-free Bareiss elimination; field matrices use
        Gaussian elimination.

        Raises
        ------
        ValueError
            The matrix is not square.
        UnsupportedScalar
            The entries live over a composite modulus.
        """
        size = len(self.rows)
        if size != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.scalar.is_integer:
            return _bareiss(self.tolist())
        if not self.scalar.is_field:
            raise UnsupportedScalar("determinant", self.scalar)

        spec = self.scalar
        a = self.tolist()
        det = spec.one
        for c in range(size):
            pivot = next((i for i in range(c, size) if a[i][c] != 0), None)
            if pivot is None:
                return spec.zero
            if pivot != c:
                a[c], a[pivot] = a[pivot], a[c]
                det = -det
            det = det * a[c][c]
            inv = spec.inverse(a[c][c])
            for i in range(c + 1, size):
                factor = a[i][c] * inv
                if factor != 0:
                    a[i] = [x - factor * y for x, y in zip(a[i], a[c])]
                    if spec.modulus is not None:
                        a[i] = [x % spec.modulus for x in a[i]]
        if spec.modulus is not None:
            det %= spec.modulus
        return det


def _identity(size: int) -> list[list[int]]:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def transpose(rows: Rows, ncols: int) -> list[list[Scalar]]:
    return [[row[j] for row in rows] for j in range(ncols)]


def vector_times(vector: Sequence[Scalar], rows: Rows, scalar: ScalarSpec, ncols: int) -> Vector:
    """Returns the row vector ``vector`` times the matrix given by ``rows``."""
    out = [scalar.zero] * ncols
    for coeff, row in zip(vector, rows):
        if coeff:
            for j, value in enumerate(row):
                if value:
                    out[j] += coeff * value
    return scalar.reduce(out)


def combination(coeffs: Iterable[Scalar], vectors: Rows, scalar: ScalarSpec, size: int) -> Vector:
    """Returns the linear combination of ``vectors`` with ``coeffs``."""
    return vector_times(list(coeffs), vectors, scalar, size)


def gcdex(a: int, b: int) -> tuple[int, int, int]:
    """Returns ``(g, s, t)`` with ``g = s * a + t * b = gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _combine(a: list[list[int]], i: int, j: int, s: int, t: int, u: int, v: int) -> None:
    # rows (i, j) <- [[s, t], [u, v]] @ rows (i, j), a determinant one transform
    ri, rj = a[i], a[j]
    a[i] = [s * x + t * y for x, y in zip(ri, rj)]
    a[j] = [u * x + v * y for x, y in zip(ri, rj)]


def _combine_columns(a: list[list[int]], i: int, j: int, s: int, t: int, u: int, v: int) -> None:
    for row in a:
        x, y = row[i], row[j]
        row[i] = s * x + t * y
        row[j] = u * x + v * y


def hnf_rows(
    rows: Rows, ncols: int, *, track: bool = False
) -> tuple[list[list[int]], Optional[list[list[int]]], list[int]]:
    """Row Hermite normal form of an integer matrix.

    Returns the reduced rows (same count as the input, zero rows last), the
    unimodular left transform when ``track`` is set, and the pivot columns.
    Pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    """
    a = [list(row) for row in rows]
    count = len(a)
    u = _identity(count) if track else None
    r = 0
    pivots: list[int] = []

    for c in range(ncols):
        if r == count:
            break

        for i in range(r + 1, count):
            b = a[i][c]
            if b == 0:
                continue
            g, s, t = gcdex(a[r][c], b)
            x, y = -b // g, a[r][c] // g
            _combine(a, r, i, s, t, x, y)
            if u is not None:
                _combine(u, r, i, s, t, x, y)

        pivot = a[r][c]
        if pivot == 0:
            continue
        if pivot < 0:
            a[r] = [-x for x in a[r]]
            if u is not None:
                u[r] = [-x for x in u[r]]
            pivot = -pivot

        for i in range(r):
            q = a[i][c] // pivot
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                if u is not None:
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]

        pivots.append(c)
        r += 1

    return a, u, pivots


def rref_rows(
    rows: Rows, scalar: ScalarSpec, ncols: int, *, limit: Optional[int] = None
) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form over a field.

    Only the first ``limit`` columns are used as pivot candidates, which lets
    callers eliminate on one block of an augmented matrix. Every input row is
    returned, pivot rows first.
    """
    a = [list(row) for row in rows]
    modulus = scalar.modulus
    count = len(a)
    r = 0
    pivots: list[int] = []

    for c in range(ncols if limit is None else limit):
        if r == count:
            break
        pivot = next((i for i in range(r, count) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = scalar.inverse(a[r][c])
        row = [x * inv for x in a[r]]
        if modulus is not None:
            row = [x % modulus for x in row]
        a[r] = row

        for i in range(count):
            if i == r:
                continue
            factor = a[i][c]
            if factor != 0:
                other = [x - factor * y for x, y in zip(a[i], row)]
                if modulus is not None:
                    other = [x % modulus for x in other]
                a[i] = other

        pivots.append(c)
        r += 1

    return a, pivots


def snf_rows(
    rows: Rows, ncols: int
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form ``s = left @ m @ right`` of an integer matrix."""
    a = [list(row) for row in rows]
    nrows = len(a)
    left = _identity(nrows)
    right = _identity(ncols)
    t = 0

    while t < min(nrows, ncols):
        best: Optional[tuple[int, int]] = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break

        i, j = best
        if i != t:
            a[t], a[i] = a[i], a[t]
            left[t], left[i] = left[i], left[t]
        if j != t:
            _combine_columns(a, t, j, 0, 1, 1, 0)
            _combine_columns(right, t, j, 0, 1, 1, 0)

        while True:
            for i in range(t + 1, nrows):
                b = a[i][t]
                if not b:
                    continue
                p = a[t][t]
                if b % p == 0:
                    q = b // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    left[i] = [x - q * y for x, y in zip(left[i], left[t])]
                else:
                    g, s, k = gcdex(p, b)
                    x, y = -b // g, p // g
                    _combine(a, t, i, s, k, x, y)
                    _combine(left, t, i, s, k, x, y)

            for j in range(t + 1, ncols):
                b = a[t][j]
                if not b:
                    continue
                p = a[t][t]
                if b % p == 0:
                    q = b // p
                    for row in a:
                        row[j] -= q * row[t]
                    for row in right:
                        row[j] -= q * row[t]
                else:
                    g, s, k = gcdex(p, b)
                    x, y = -b // g, p // g
                    _combine_columns(a, t, j, s, k, x, y)
                    _combine_columns(right, t, j, s, k, x, y)

            if any(a[i][t] for i in range(t + 1, nrows)) or any(a[t][j] for j in range(t + 1, ncols)):
                continue

            p = a[t][t]
            offender = next(
                (i for i in range(t + 1, nrows) if any(a[i][j] % p for j in range(t + 1, ncols))),
                None,
            )
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            left[t] = [x + y for x, y in zip(left[t], left[offender])]

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        t += 1

    return a, left, right


def _bareiss(a: list[list[int]]) -> int:
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[-1][-1]


def _require_integer(operation: str, m: Mat) -> None:
    if not m.scalar.is_integer:
        raise UnsupportedScalar(operation, m.scalar)


def hermite_normal_form(m: Mat) -> tuple[Mat, Mat]:
    """Computes the row Hermite normal form of an integer matrix.

    Parameters
    ----------
    m: :class:`Mat`
        An integer matrix.

    Raises
    ------
    UnsupportedScalar
        The matrix is not over the integers.

    Returns
    -------
    Tuple[:class:`Mat`, :class:`Mat`]
        ``(h, transform)`` with ``h = transform @ m``, ``transform`` unimodular and
        ``h`` canonical for the row space of ``m``.
    """
    _require_integer("hermite_normal_form", m)
    h, u, _ = hnf_rows(m.rows, m.ncols, track=True)
    return Mat(h, m.scalar, ncols=m.ncols), Mat(u or [], m.scalar, ncols=m.nrows)


def smith_normal_form(m: Mat) -> tuple[Mat, Mat, Mat]:
    """Computes the Smith normal form of an integer matrix.

    Raises
    ------
    UnsupportedScalar
        The matrix is not over the integers.

    Returns
    -------
    Tuple[:class:`Mat`, :class:`Mat`, :class:`Mat`]
        ``(s, left, right)`` with ``s = left @ m @ right`` diagonal, every diagonal
        entry dividing the next one, and ``left``, ``right`` unimodular.
    """
    _require_integer("smith_normal_form", m)
    s, left, right = snf_rows(m.rows, m.ncols)
    return (
        Mat(s, m.scalar, ncols=m.ncols),
        Mat(left, m.scalar, ncols=m.nrows),
        Mat(right, m.scalar, ncols=m.ncols),
    )


def invariant_factors(m: Mat) -> tuple[int, ...]:
    """Returns the non-zero diagonal entries of the Smith normal form of ``m``."""
    _require_integer("invariant_factors", m)
    s, _, _ = snf_rows(m.rows, m.ncols)
    return tuple(s[i][i] for i in range(min(len(s), m.ncols)) if s[i][i])


def hstack(blocks: Sequence[Rows], nrows: int) -> list[list[Scalar]]:
    """Concatenates matrices with the same number of rows side by side."""
    return [[value for block in blocks for value in block[i]] for i in range(nrows)]
