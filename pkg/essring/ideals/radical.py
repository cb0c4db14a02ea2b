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

import functools
import logging
from typing import Optional

from sympy import primefactors

from ..errors import NotArtinian, UnsupportedScalar
from ..linalg.matrix import vector_times
from ..linalg.submodule import Submodule, integer_points, kernel
from ..ring import RingPresentation, quotient_mod, rationalize
from .ideal import left_annihilator, product_span

logger = logging.getLogger(__name__)

__all__ = (
    "RadicalData",
    "jacobson_radical",
    "socle_right",
    "nilradical_tffr",
    "nilpotency_index",
)


class RadicalData:
    """The radicals of a finite ring or of a finite dimensional rational algebra.

    In both settings the upper nilradical and the Jacobson radical coincide, so
    :attr:`nil` and :attr:`jacobson` are the same submodule.

    Attributes
    ----------
    ring: :class:`~essring.RingPresentation`
        The ring.
    jacobson: :class:`~essring.Submodule`
        The Jacobson radical.
    nil: :class:`~essring.Submodule`
        The largest nil ideal.
    nilpotency_index: Optional[:class:`int`]
        The smallest ``k`` with ``jacobson ** k = 0``.
    """

    __slots__ = ("ring", "jacobson", "nil", "nilpotency_index")

    def __init__(
        self,
        ring: RingPresentation,
        jacobson: Submodule,
        nil: Submodule,
        nilpotency_index: Optional[int],
    ) -> None:
        self.ring: RingPresentation = ring
        self.jacobson: Submodule = jacobson
        self.nil: Submodule = nil
        self.nilpotency_index: Optional[int] = nilpotency_index

    def __repr__(self) -> str:
        return (
            f"<RadicalData ring={self.ring.name!r} rank={self.jacobson.rank} "
            f"nilpotency_index={self.nilpotency_index}>"
        )


def nilpotency_index(ring: RingPresentation, sub: Submodule, *, cap: Optional[int] = None) -> Optional[int]:
    """Returns the smallest ``k`` with ``sub ** k = 0``.

    ``sub`` must be a two-sided ideal so that its powers decrease. ``None`` is
    returned when the powers stabilize above zero or when ``cap`` powers were
    computed without reaching zero.
    """
    current = sub
    k = 1
    while not current.is_zero():
        if cap is not None and k >= cap:
            return None
        following = product_span(ring, current, sub)
        if following == current:
            return None
        current = following
        k += 1
    return k


def _trace_form_radical(p: RingPresentation) -> Submodule:
    # x is radical iff Tr(L_{x e_j}) = 0 for every j, valid in characteristic zero
    spec = p.scalar
    n = p.rank
    traces = [sum((p.table[k][j][j] for j in range(n)), spec.zero) for k in range(n)]
    gram = [[vector_times(p.table[i][j], [[t] for t in traces], spec, 1)[0] for j in range(n)] for i in range(n)]
    return kernel(gram, spec, ncols=n)


def _power_trace(matrix: list[list[int]], exponent: int, modulus: int) -> int:
    size = len(matrix)
    result = [[int(i == j) for j in range(size)] for i in range(size)]
    base = [[value % modulus for value in row] for row in matrix]
    while exponent:
        if exponent & 1:
            result = _matmul_mod(result, base, modulus)
        base = _matmul_mod(base, base, modulus)
        exponent >>= 1
    return sum(result[i][i] for i in range(size)) % modulus


def _matmul_mod(a: list[list[int]], b: list[list[int]], modulus: int) -> list[list[int]]:
    columns = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, column)) % modulus for column in columns] for row in a]


def _prime_field_radical(p: RingPresentation) -> Submodule:
    # trace criteria on integer lifts of the left regular representation, one
    # per power p ** i up to the rank
    spec = p.scalar
    prime: int = spec.modulus  # type: ignore
    n = p.rank
    steps = 0
    while prime ** (steps + 1) <= n:
        steps += 1

    current = Submodule.full(n, spec)
    for i in range(steps + 1):
        if current.is_zero():
            break
        scale = prime**i
        modulus = scale * prime
        rows = []
        for v in current.basis:
            row = []
            for j in range(n):
                z = p.multiply(v, p.unit(j))
                trace = _power_trace([list(r) for r in p.left_matrix(z)], scale, modulus)
                row.append((trace // scale) % prime)
            rows.append(row)
        solutions = kernel(rows, spec, ncols=n)
        current = Submodule(n, spec, [vector_times(c, current.basis, spec, n) for c in solutions.basis])
        logger.debug("Radical chain of %r at step %d has rank %d", p.name, i, current.rank)
    return current


def _composite_radical(p: RingPresentation) -> Submodule:
    modulus: int = p.scalar.modulus  # type: ignore
    n = p.rank
    result = Submodule.full(n, p.scalar)
    for prime in primefactors(modulus):
        reduced = quotient_mod(p, prime).target
        local = _radical_sub(reduced)
        generators = [[int(v) for v in row] for row in local.basis]
        generators += [[prime * int(i == j) for j in range(n)] for i in range(n)]
        result = result & Submodule(n, p.scalar, generators)
    return result


@functools.lru_cache(maxsize=64)
def _radical_sub(p: RingPresentation) -> Submodule:
    if p.scalar.is_rational:
        return _trace_form_radical(p)
    if p.scalar.is_prime_field:
        return _prime_field_radical(p)
    if p.scalar.is_modular:
        return _composite_radical(p)
    raise NotArtinian("jacobson_radical", p.scalar)


def jacobson_radical(p: RingPresentation) -> RadicalData:
    """Computes the Jacobson radical of a finite ring or a rational algebra.

    Over the rationals the radical is the kernel of the trace form
    ``(x, y) -> Tr(L_{xy})``. Over a prime field it is cut out by a chain of trace
    criteria on integer lifts of the left regular representation. Over a
    composite modulus it is the intersection of the pullbacks of the radicals of
    the reductions modulo each prime factor.

    Raises
    ------
    NotArtinian
        The ring is over the integers. Use :func:`nilradical_tffr` instead.
    """
    jacobson = _radical_sub(p)
    return RadicalData(p, jacobson, jacobson, nilpotency_index(p, jacobson))


def socle_right(p: RingPresentation) -> Submodule:
    """Returns the right socle ``{x : x * J = 0}`` of a finite ring or a rational algebra.

    Raises
    ------
    NotArtinian
        The ring is over the integers.
    """
    return left_annihilator(p, _radical_sub(p))


def nilradical_tffr(p: RingPresentation) -> Submodule:
    """Returns the nilradical of an integer ring, the integer points of the radical of its rational algebra.

    Raises
    ------
    UnsupportedScalar
        The ring is not over the integers.
    """
    if not p.scalar.is_integer:
        raise UnsupportedScalar("nilradical_tffr", p.scalar)
    return integer_points(_radical_sub(rationalize(p)))
