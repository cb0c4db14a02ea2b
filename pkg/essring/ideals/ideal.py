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

import logging
from typing import Any, Iterable, Optional, Sequence, Union

from .._types import Vector
from ..enums import Side
from ..errors import IdealClosureError, InvalidPresentation, RingMismatch, ScalarMismatch, UnsupportedScalar
from ..linalg.matrix import hstack
from ..linalg.submodule import Submodule, kernel
from ..ring import RingElement, RingPresentation, opposite

logger = logging.getLogger(__name__)

__all__ = (
    "IdealRep",
    "generate",
    "is_two_sided",
    "is_right_regular",
    "product",
    "power",
    "right_annihilator",
    "left_annihilator",
    "AlgebraQuotient",
    "quotient_algebra",
)

Generator = Union[RingElement, Sequence[Any]]


def _closure_failure(ring: RingPresentation, side: Side, sub: Submodule) -> Optional[tuple[int, Vector, Side]]:
    # first (basis index, generator, side) whose product leaves sub
    for index in range(ring.rank):
        unit = ring.unit(index)
        for x in sub.basis:
            if side.multiplies_left and not sub.contains(ring.multiply(unit, x)):
                return index, x, Side.left
            if side.multiplies_right and not sub.contains(ring.multiply(x, unit)):
                return index, x, Side.right
    return None


def _as_vector(ring: RingPresentation, generator: Generator) -> Vector:
    if isinstance(generator, RingElement):
        if generator.ring != ring:
            raise RingMismatch(ring.name, generator.ring.name)
        return generator.coords
    vector = ring.scalar.vector(generator)
    if len(vector) != ring.rank:
        raise ScalarMismatch(f"rank {len(vector)} vector", f"rank {ring.rank} ring")
    return vector


class IdealRep:
    """Represents a one or two-sided ideal of a ring as a submodule of its coordinate space.

    The side closure is checked when the ideal is built and can be checked again with
    :meth:`revalidate`.

    .. container:: operations

        .. describe:: x == y

            Checks if two ideals of the same ring have the same side and elements.

        .. describe:: v in x

            Checks if an element or coordinate vector is a member.

    Attributes
    ----------
    ring: :class:`~essring.RingPresentation`
        The ambient ring.
    side: :class:`~essring.Side`
        The side the ideal is closed under.
    sub: :class:`~essring.Submodule`
        The elements of the ideal.

    Raises
    ------
    IdealClosureError
        The submodule is not closed under multiplication on ``side``.
    """

    __slots__ = ("ring", "side", "sub")

    def __init__(self, ring: RingPresentation, side: Side, sub: Submodule) -> None:
        if sub.ambient_rank != ring.rank or sub.scalar != ring.scalar:
            raise ScalarMismatch(f"{sub.scalar} rank {sub.ambient_rank}", f"{ring.scalar} rank {ring.rank}")
        failure = _closure_failure(ring, side, sub)
        if failure is not None:
            index, x, failing = failure
            raise IdealClosureError(side, {"basis": index, "generator": list(x), "side": failing.value})
        self.ring: RingPresentation = ring
        self.side: Side = side
        self.sub: Submodule = sub

    @classmethod
    def whole(cls, ring: RingPresentation, side: Side = Side.two_sided) -> IdealRep:
        return cls(ring, side, Submodule.full(ring.rank, ring.scalar))

    @classmethod
    def zero(cls, ring: RingPresentation, side: Side = Side.two_sided) -> IdealRep:
        return cls(ring, side, Submodule.zero(ring.rank, ring.scalar))

    def __repr__(self) -> str:
        return f"<IdealRep ring={self.ring.name!r} side={self.side.value!r} rank={self.sub.rank}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdealRep):
            return NotImplemented
        return self.ring == other.ring and self.side is other.side and self.sub == other.sub

    def __hash__(self) -> int:
        return hash((self.side, self.sub))

    def __contains__(self, item: Generator) -> bool:
        return self.sub.contains(_as_vector(self.ring, item))

    @property
    def rank(self) -> int:
        return self.sub.rank

    def is_zero(self) -> bool:
        return self.sub.is_zero()

    def is_whole(self) -> bool:
        return self.sub.is_full()

    def revalidate(self) -> bool:
        """Checks the side closure again from ring arithmetic."""
        return _closure_failure(self.ring, self.side, self.sub) is None

    def with_side(self, side: Side) -> IdealRep:
        """Returns the same submodule declared on another side, checking the closure."""
        return IdealRep(self.ring, side, self.sub)

    def mirrored(self) -> IdealRep:
        """Returns the same submodule as an ideal of the opposite ring, on the opposite side."""
        return IdealRep(opposite(self.ring), self.side.opposite, self.sub)

    def elements(self) -> list[RingElement]:
        """Returns the canonical generators as ring elements."""
        return [RingElement(self.ring, row) for row in self.sub.basis]

    def to_dict(self) -> dict[str, Any]:
        fmt = self.ring.scalar.format_value
        return {
            "side": self.side.value,
            "generators": [[fmt(v) for v in row] for row in self.sub.basis],
        }

    @classmethod
    def from_dict(cls, ring: RingPresentation, data: Any) -> IdealRep:
        """Builds the ideal generated by an ideal document on ``ring``.

        The document is ``{"side": ..., "generators": [[...], ...]}`` with decimal
        string coordinates.

        Raises
        ------
        InvalidPresentation
            The document is malformed.
        """
        if not isinstance(data, dict):
            raise InvalidPresentation("<ideal>", "expected an object")
        try:
            side = Side(data.get("side", "right"))
        except ValueError:
            raise InvalidPresentation("side", f"unknown side {data.get('side')!r}")
        generators = data.get("generators")
        if not isinstance(generators, list):
            raise InvalidPresentation("generators", "expected a list of coordinate lists")
        vectors = []
        for i, row in enumerate(generators):
            if not isinstance(row, list) or len(row) != ring.rank:
                raise InvalidPresentation(f"generators[{i}]", f"expected a list of {ring.rank} values")
            try:
                vectors.append(ring.scalar.vector(row))
            except (InvalidPresentation, ValueError) as exc:
                raise InvalidPresentation(f"generators[{i}]", str(exc)) from exc
        return generate(ring, side, vectors)


def generate(ring: RingPresentation, side: Side, gens: Iterable[Generator]) -> IdealRep:
    """Returns the smallest ideal on ``side`` containing ``gens``.

    The generators are multiplied by every basis element on the requested sides
    until the canonical submodule stops growing.

    Parameters
    ----------
    ring: :class:`~essring.RingPresentation`
        The ambient ring.
    side: :class:`~essring.Side`
        The side of the ideal.
    gens: Iterable[Union[:class:`~essring.RingElement`, Sequence]]
        Elements or coordinate vectors.
    """
    sub = Submodule(ring.rank, ring.scalar, [_as_vector(ring, g) for g in gens])
    units = [ring.unit(j) for j in range(ring.rank)]
    rounds = 0
    while True:
        rounds += 1
        products: list[Vector] = []
        for x in sub.basis:
            for unit in units:
                if side.multiplies_right:
                    products.append(ring.multiply(x, unit))
                if side.multiplies_left:
                    products.append(ring.multiply(unit, x))
        grown = Submodule(ring.rank, ring.scalar, list(sub.basis) + products)
        if grown == sub:
            break
        sub = grown
    logger.debug("Generated %s ideal of rank %d in %d rounds", side.value, sub.rank, rounds)
    return IdealRep(ring, side, sub)


def is_two_sided(i: IdealRep) -> tuple[bool, Optional[tuple[RingElement, RingElement]]]:
    """Checks whether an ideal is closed under multiplication on both sides.

    Returns
    -------
    Tuple[:class:`bool`, Optional[Tuple[:class:`~essring.RingElement`, :class:`~essring.RingElement`]]]
        The verdict and, when it is ``False``, a pair ``(r, x)`` with ``x`` in the
        ideal and ``r * x`` (for a right ideal) or ``x * r`` (for a left ideal)
        outside of it.
    """
    failure = _closure_failure(i.ring, Side.two_sided, i.sub)
    if failure is None:
        return True, None
    index, x, _ = failure
    return False, (i.ring.basis(index), RingElement(i.ring, x))


def is_right_regular(r: RingElement) -> bool:
    """Checks whether ``r * x = 0`` implies ``x = 0``.

    This holds exactly when the map ``x -> r * x`` has a zero kernel over the
    scalar domain.
    """
    return kernel(r.ring.left_matrix(r.coords), r.ring.scalar, ncols=r.ring.rank).is_zero()


def product_span(ring: RingPresentation, a: Submodule, b: Submodule) -> Submodule:
    """Returns the submodule spanned by the products ``x * y`` of generators of ``a`` and ``b``."""
    return Submodule(ring.rank, ring.scalar, [ring.multiply(x, y) for x in a.basis for y in b.basis])


def product(a: IdealRep, b: IdealRep) -> Submodule:
    """Returns the product ``a * b``, the span of all products of their elements.

    Raises
    ------
    RingMismatch
        The ideals belong to different rings.
    """
    if a.ring != b.ring:
        raise RingMismatch(a.ring.name, b.ring.name)
    return product_span(a.ring, a.sub, b.sub)


def power(m: IdealRep, k: int) -> Submodule:
    """Returns the ``k``-th power of an ideal, ``k >= 1``."""
    if k < 1:
        raise ValueError(f"power must be at least 1, got {k}")
    result = m.sub
    for _ in range(k - 1):
        result = product_span(m.ring, result, m.sub)
    return result


def right_annihilator(ring: RingPresentation, sub: Submodule) -> Submodule:
    """Returns ``{x : s * x = 0 for every s in sub}``."""
    blocks = [ring.left_matrix(s) for s in sub.basis]
    return kernel(hstack(blocks, ring.rank), ring.scalar, ncols=ring.rank * len(blocks))


def left_annihilator(ring: RingPresentation, sub: Submodule) -> Submodule:
    """Returns ``{x : x * s = 0 for every s in sub}``."""
    blocks = [ring.right_matrix(s) for s in sub.basis]
    return kernel(hstack(blocks, ring.rank), ring.scalar, ncols=ring.rank * len(blocks))


class AlgebraQuotient:
    """The quotient of an algebra over a field by a two-sided ideal.

    The quotient is presented on the images of the basis vectors that are not pivot
    columns of the ideal's echelon form.

    Attributes
    ----------
    source: :class:`~essring.RingPresentation`
        The algebra.
    ideal: :class:`~essring.Submodule`
        The two-sided ideal.
    ring: :class:`~essring.RingPresentation`
        The presentation of the quotient.
    free: Tuple[:class:`int`, ...]
        The source basis indices that survive in the quotient.
    """

    __slots__ = ("source", "ideal", "ring", "free")

    def __init__(self, source: RingPresentation, ideal: Submodule) -> None:
        self.source: RingPresentation = source
        self.ideal: Submodule = ideal
        pivots = set(ideal.pivots)
        self.free: tuple[int, ...] = tuple(i for i in range(source.rank) if i not in pivots)
        if not self.free:
            raise ValueError("the quotient by the whole ring is the zero ring")
        table = [
            [self._project(source.table[i][j]) for j in self.free]
            for i in self.free
        ]
        self.ring: RingPresentation = RingPresentation(
            f"{source.name}:quotient", source.scalar, self._project(source.one), table
        )

    def __repr__(self) -> str:
        return f"<AlgebraQuotient source={self.source.name!r} rank={self.ring.rank}>"

    def _project(self, vector: Sequence[Any]) -> Vector:
        reduced = self.ideal.reduce(vector)
        return tuple(reduced[i] for i in self.free)

    def project(self, element: RingElement) -> RingElement:
        """Maps an element of the source to its image in the quotient."""
        if element.ring != self.source:
            raise RingMismatch(self.source.name, element.ring.name)
        return RingElement(self.ring, self._project(element.coords))

    def lift(self, element: RingElement) -> RingElement:
        """Returns the preimage supported on the surviving basis vectors."""
        if element.ring != self.ring:
            raise RingMismatch(self.ring.name, element.ring.name)
        coords = [self.source.scalar.zero] * self.source.rank
        for index, value in zip(self.free, element.coords):
            coords[index] = value
        return RingElement(self.source, tuple(coords))


def quotient_algebra(p: RingPresentation, ideal: Submodule) -> AlgebraQuotient:
    """Builds the quotient of an algebra over a field by a two-sided ideal.

    Raises
    ------
    UnsupportedScalar
        The scalar domain is not a field.
    IdealClosureError
        ``ideal`` is not two-sided.
    """
    if not p.scalar.is_field:
        raise UnsupportedScalar("quotient_algebra", p.scalar)
    IdealRep(p, Side.two_sided, ideal)
    return AlgebraQuotient(p, ideal)
