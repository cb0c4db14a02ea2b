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
import logging
import os
from typing import Any, Iterator, Optional, Sequence, Union

from ._types import Scalar, Vector, canonical_dumps, loads
from .config import DEFAULT_ENUMERATION_CAP
from .errors import (
    EnumerationCapExceeded,
    InvalidPresentation,
    RingMismatch,
    UnsupportedScalar,
)
from .linalg.scalars import ScalarSpec
from .utils import MISSING

logger = logging.getLogger(__name__)

__all__ = (
    "RingPresentation",
    "RingElement",
    "QuotientMap",
    "ValidationReport",
    "validate",
    "mul",
    "add",
    "sub",
    "scalar_mul",
    "commutator",
    "quotient_mod",
    "rationalize",
    "opposite",
    "elements",
    "representatives",
    "is_commutative",
)


class RingPresentation:
    """Represents an associative ring of finite rank by its structure constants.

    The ring has the basis ``e_0, ..., e_{n-1}`` of the coordinate space ``S ** n``
    and ``table[i][j]`` holds the coordinates of ``e_i * e_j``. Over the integers the
    additive group is free of rank ``n``.

    Presentations are immutable. Two presentations are equal when their domain,
    identity and table agree; the name is ignored.

    .. container:: operations

        .. describe:: x == y

            Checks if two presentations describe the same multiplication.

        .. describe:: len(x)

            Returns the rank.

    Attributes
    ----------
    name: :class:`str`
        A display name.
    scalar: :class:`~essring.ScalarSpec`
        The coefficient domain.
    rank: :class:`int`
        The number of basis elements.
    one: Tuple[Any, ...]
        The coordinates of the identity.
    table: Tuple[Tuple[Tuple[Any, ...], ...], ...]
        The structure constants.
    """

    __slots__ = ("name", "scalar", "rank", "one", "table", "_products")

    def __init__(
        self,
        name: str,
        scalar: ScalarSpec,
        one: Sequence[Any],
        table: Sequence[Sequence[Sequence[Any]]],
    ) -> None:
        rank = len(one)
        if rank < 1:
            raise InvalidPresentation("rank", "a ring presentation needs at least one basis element")
        if len(table) != rank:
            raise InvalidPresentation("table", f"expected {rank} rows, got {len(table)}")
        for i, row in enumerate(table):
            if len(row) != rank:
                raise InvalidPresentation(f"table[{i}]", f"expected {rank} entries, got {len(row)}")
            for j, entry in enumerate(row):
                if len(entry) != rank:
                    raise InvalidPresentation(f"table[{i}][{j}]", f"expected {rank} coordinates, got {len(entry)}")

        self.name: str = name
        self.scalar: ScalarSpec = scalar
        self.rank: int = rank
        self.one: Vector = scalar.vector(one)
        self.table: tuple[tuple[Vector, ...], ...] = tuple(
            tuple(scalar.vector(entry) for entry in row) for row in table
        )
        self._products: list[list[list[tuple[int, Scalar]]]] = [
            [[(k, value) for k, value in enumerate(entry) if value] for entry in row] for row in self.table
        ]

    def __repr__(self) -> str:
        return f"<RingPresentation name={self.name!r} rank={self.rank} scalar={self.scalar}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingPresentation):
            return NotImplemented
        return self.scalar == other.scalar and self.one == other.one and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.scalar, self.one, self.table))

    def __len__(self) -> int:
        return self.rank

    @property
    def is_finite(self) -> bool:
        return self.scalar.is_finite

    @property
    def size(self) -> Optional[int]:
        """Optional[:class:`int`]: The number of elements, ``m ** rank``, or ``None`` if infinite."""
        if self.scalar.modulus is None:
            return None
        return self.scalar.modulus**self.rank

    @property
    def identity(self) -> RingElement:
        return RingElement(self, self.one)

    @property
    def zero(self) -> RingElement:
        return RingElement(self, (self.scalar.zero,) * self.rank)

    def element(self, coords: Sequence[Any]) -> RingElement:
        """Builds an element from coordinates, converting them to the domain."""
        vector = self.scalar.vector(coords)
        if len(vector) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(vector)}")
        return RingElement(self, vector)

    def basis(self, index: int) -> RingElement:
        """Returns the basis element ``e_index``."""
        coords = [self.scalar.zero] * self.rank
        coords[index] = self.scalar.one
        return RingElement(self, tuple(coords))

    def basis_elements(self) -> list[RingElement]:
        return [self.basis(i) for i in range(self.rank)]

    def multiply(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> Vector:
        """Multiplies two coordinate vectors through the structure constants."""
        out = [self.scalar.zero] * self.rank
        products = self._products
        for i, x in enumerate(a):
            if not x:
                continue
            row = products[i]
            for j, y in enumerate(b):
                if not y:
                    continue
                coeff = x * y
                for k, value in row[j]:
                    out[k] += coeff * value
        return self.scalar.reduce(out)

    def left_matrix(self, a: Sequence[Scalar]) -> list[Vector]:
        """Returns the rows of the map ``x -> a * x``, row ``j`` being ``a * e_j``."""
        return [self.multiply(a, self.unit(j)) for j in range(self.rank)]

    def right_matrix(self, a: Sequence[Scalar]) -> list[Vector]:
        """Returns the rows of the map ``x -> x * a``, row ``i`` being ``e_i * a``."""
        return [self.multiply(self.unit(i), a) for i in range(self.rank)]

    def unit(self, index: int) -> Vector:
        return tuple(self.scalar.one if k == index else self.scalar.zero for k in range(self.rank))

    def to_dict(self) -> dict[str, Any]:
        fmt = self.scalar.format_value
        return {
            "name": self.name,
            "scalar": self.scalar.to_dict(),
            "rank": self.rank,
            "one": [fmt(v) for v in self.one],
            "table": [[[fmt(v) for v in entry] for entry in row] for row in self.table],
        }

    def dumps(self) -> bytes:
        """Returns the canonical JSON document of this presentation."""
        return canonical_dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Any) -> RingPresentation:
        """Builds a presentation from a parsed ring document.

        Raises
        ------
        InvalidPresentation
            A field is missing or malformed. The exception names the field.
        """
        if not isinstance(data, dict):
            raise InvalidPresentation("<document>", f"expected an object, got {data.__class__.__name__!r}")
        for key in ("name", "scalar", "rank", "one", "table"):
            if key not in data:
                raise InvalidPresentation(key, "missing")

        name = data["name"]
        if not isinstance(name, str):
            raise InvalidPresentation("name", "expected a string")
        scalar = ScalarSpec.from_dict(data["scalar"])
        try:
            rank = int(data["rank"])
        except (TypeError, ValueError):
            raise InvalidPresentation("rank", f"expected an integer, got {data['rank']!r}")
        if rank < 1:
            raise InvalidPresentation("rank", "must be at least 1")

        one = _parse_vector(scalar, data["one"], rank, "one")
        table = data["table"]
        if not isinstance(table, list) or len(table) != rank:
            raise InvalidPresentation("table", f"expected a list of {rank} rows")
        rows = []
        for i, row in enumerate(table):
            if not isinstance(row, list) or len(row) != rank:
                raise InvalidPresentation(f"table[{i}]", f"expected a list of {rank} entries")
            rows.append([_parse_vector(scalar, entry, rank, f"table[{i}][{j}]") for j, entry in enumerate(row)])
        return cls(name, scalar, one, rows)

    @classmethod
    def loads(cls, raw: Union[str, bytes]) -> RingPresentation:
        """Parses a ring document.

        Raises
        ------
        InvalidPresentation
            The document is not valid JSON or not a valid ring.
        """
        try:
            data = loads(raw)
        except ValueError as exc:
            raise InvalidPresentation("<document>", f"not valid JSON ({exc})") from exc
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: Union[str, os.PathLike[str]]) -> RingPresentation:
        with open(path, "rb") as file:
            return cls.loads(file.read())


def _parse_vector(scalar: ScalarSpec, values: Any, rank: int, field: str) -> Vector:
    if not isinstance(values, list) or len(values) != rank:
        raise InvalidPresentation(field, f"expected a list of {rank} values")
    out = []
    for k, value in enumerate(values):
        if isinstance(value, bool) or not isinstance(value, (str, int)):
            raise InvalidPresentation(f"{field}[{k}]", f"expected a decimal string, got {value!r}")
        try:
            out.append(scalar.parse_value(value) if isinstance(value, str) else scalar.convert(value))
        except InvalidPresentation as exc:
            raise InvalidPresentation(f"{field}[{k}]", exc.reason) from exc
    return tuple(out)


class RingElement:
    """Represents an element of a :class:`RingPresentation`.

    .. container:: operations

        .. describe:: x + y, x - y, -x

            Additive operations.

        .. describe:: x * y

            Multiplication. ``y`` may also be an integer scalar.

        .. describe:: x ** k

            Repeated multiplication, ``x ** 0`` being the identity.

        .. describe:: bool(x)

            Whether the element is non-zero.

    Attributes
    ----------
    ring: :class:`RingPresentation`
        The ring this element belongs to.
    coords: Tuple[Any, ...]
        The coordinates over the ring's scalar domain.
    """

    __slots__ = ("ring", "coords")

    def __init__(self, ring: RingPresentation, coords: Vector) -> None:
        self.ring: RingPresentation = ring
        self.coords: Vector = coords

    def __repr__(self) -> str:
        return f"<RingElement ring={self.ring.name!r} coords={self.ring.scalar.vector(self.coords)!r}>"

    def __str__(self) -> str:
        fmt = self.ring.scalar.format_value
        return "(" + ", ".join(fmt(v) for v in self.coords) + ")"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def _check(self, other: RingElement) -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatch(self.ring.name, other.ring.name)

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.ring, self.ring.scalar.reduce(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.ring, self.ring.scalar.reduce(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, self.ring.scalar.reduce(-a for a in self.coords))

    def __mul__(self, other: Union[RingElement, int]) -> RingElement:
        if isinstance(other, RingElement):
            self._check(other)
            return RingElement(self.ring, self.ring.multiply(self.coords, other.coords))
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: int) -> RingElement:
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> RingElement:
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = self.ring.identity
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Any) -> RingElement:
        """Multiplies the coordinates by a scalar of the ring's domain."""
        value = self.ring.scalar.convert(factor)
        return RingElement(self.ring, self.ring.scalar.reduce(value * a for a in self.coords))

    def commutator(self, other: RingElement) -> RingElement:
        """Returns ``self * other - other * self``."""
        return self * other - other * self

    def to_list(self) -> list[str]:
        fmt = self.ring.scalar.format_value
        return [fmt(v) for v in self.coords]


def mul(a: RingElement, b: RingElement) -> RingElement:
    """Returns ``a * b``.

    Raises
    ------
    RingMismatch
        The elements belong to different rings.
    """
    return a * b


def add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def sub(a: RingElement, b: RingElement) -> RingElement:
    return a - b


def scalar_mul(factor: Any, a: RingElement) -> RingElement:
    return a.scale(factor)


def commutator(a: RingElement, b: RingElement) -> RingElement:
    """Returns the commutator ``[a, b] = a * b - b * a``.

    Raises
    ------
    RingMismatch
        The elements belong to different rings.
    """
    return a.commutator(b)


class ValidationReport:
    """The result of :func:`validate`.

    Attributes
    ----------
    ring_name: :class:`str`
        The validated ring.
    associativity_failures: List[Tuple[:class:`int`, :class:`int`, :class:`int`, Tuple]]
        Every basis triple ``(i, j, k)`` with ``(e_i e_j) e_k != e_i (e_j e_k)``, along
        with the difference.
    identity_failures: List[Tuple[:class:`int`, :class:`str`, Tuple]]
        Every basis index where the identity fails, the side (``"left"`` or
        ``"right"``) and the difference ``one * e_i - e_i`` (resp. ``e_i * one - e_i``).
    triples_checked: :class:`int`
        The number of associativity triples checked.
    """

    __slots__ = ("ring_name", "associativity_failures", "identity_failures", "triples_checked")

    def __init__(self, ring_name: str) -> None:
        self.ring_name: str = ring_name
        self.associativity_failures: list[tuple[int, int, int, Vector]] = []
        self.identity_failures: list[tuple[int, str, Vector]] = []
        self.triples_checked: int = 0

    def __repr__(self) -> str:
        return (
            f"<ValidationReport ring_name={self.ring_name!r} passed={self.passed} "
            f"triples_checked={self.triples_checked}>"
        )

    def __bool__(self) -> bool:
        return self.passed

    @property
    def passed(self) -> bool:
        return not self.associativity_failures and not self.identity_failures

    def to_dict(self, scalar: ScalarSpec) -> dict[str, Any]:
        fmt = scalar.format_value
        return {
            "ring": self.ring_name,
            "passed": self.passed,
            "triples_checked": self.triples_checked,
            "associativity_failures": [
                {"triple": [i, j, k], "difference": [fmt(v) for v in diff]}
                for i, j, k, diff in self.associativity_failures
            ],
            "identity_failures": [
                {"index": i, "side": side, "difference": [fmt(v) for v in diff]}
                for i, side, diff in self.identity_failures
            ],
        }


def validate(p: RingPresentation) -> ValidationReport:
    """Checks associativity on every basis triple and the identity on every basis element.

    Bilinearity makes the basis checks sufficient. The check is exhaustive, so it
    visits ``rank ** 3`` triples.

    Returns
    -------
    :class:`ValidationReport`
        The report, which passes when both failure lists are empty.
    """
    report = ValidationReport(p.name)
    n = p.rank
    spec = p.scalar

    for i in range(n):
        for j in range(n):
            left = p.table[i][j]
            for k in range(n):
                lhs = p.multiply(left, p.unit(k))
                rhs = p.multiply(p.unit(i), p.table[j][k])
                report.triples_checked += 1
                if lhs != rhs:
                    report.associativity_failures.append((i, j, k, spec.reduce(a - b for a, b in zip(lhs, rhs))))

    for i in range(n):
        unit = p.unit(i)
        for side, product in (("left", p.multiply(p.one, unit)), ("right", p.multiply(unit, p.one))):
            if product != unit:
                report.identity_failures.append((i, side, spec.reduce(a - b for a, b in zip(product, unit))))

    if not report.passed:
        logger.debug(
            "Presentation %r failed validation: %d associativity and %d identity failures",
            p.name,
            len(report.associativity_failures),
            len(report.identity_failures),
        )
    return report


class QuotientMap:
    """Represents the reduction of a ring modulo an integer ``m``.

    The map reduces coordinates, so it is a surjective ring homomorphism onto a
    presentation over the integers modulo ``m``.

    .. container:: operations

        .. describe:: x(element)

            Reduces an element, same as :meth:`reduce`.

    Attributes
    ----------
    source: :class:`RingPresentation`
        The ring being reduced.
    modulus: :class:`int`
        The modulus ``m``.
    target: :class:`RingPresentation`
        The presentation of the quotient ring.
    """

    __slots__ = ("source", "modulus", "target")

    def __init__(self, source: RingPresentation, modulus: int, target: RingPresentation) -> None:
        self.source: RingPresentation = source
        self.modulus: int = modulus
        self.target: RingPresentation = target

    def __repr__(self) -> str:
        return f"<QuotientMap source={self.source.name!r} modulus={self.modulus}>"

    def __call__(self, element: RingElement) -> RingElement:
        return self.reduce(element)

    def reduce(self, element: RingElement) -> RingElement:
        if element.ring != self.source:
            raise RingMismatch(self.source.name, element.ring.name)
        return self.target.element(element.coords)

    def lift(self, element: RingElement) -> RingElement:
        """Returns the element of the source with the same canonical residues."""
        if element.ring != self.target:
            raise RingMismatch(self.target.name, element.ring.name)
        return self.source.element([int(v) for v in element.coords])


def quotient_mod(p: RingPresentation, m: int) -> QuotientMap:
    """Reduces a ring modulo ``m``.

    Parameters
    ----------
    p: :class:`RingPresentation`
        A ring over the integers, or over the integers modulo a multiple of ``m``.
    m: :class:`int`
        The modulus, at least 2.

    Raises
    ------
    ValueError
        ``m`` is smaller than 2 or does not divide the modulus of ``p``.
    UnsupportedScalar
        ``p`` is a rational algebra.
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    if p.scalar.is_rational:
        raise UnsupportedScalar("quotient_mod", p.scalar)
    if p.scalar.modulus is not None and p.scalar.modulus % m:
        raise ValueError(f"{m} does not divide the modulus {p.scalar.modulus}")

    target = RingPresentation(f"{p.name}:mod{m}", ScalarSpec.mod(m), p.one, p.table)
    return QuotientMap(p, m, target)


def rationalize(p: RingPresentation) -> RingPresentation:
    """Returns the rational algebra spanned by an integer ring.

    Raises
    ------
    UnsupportedScalar
        ``p`` is not over the integers.
    """
    if not p.scalar.is_integer:
        raise UnsupportedScalar("rationalize", p.scalar)
    return RingPresentation(f"{p.name}:rat", ScalarSpec.rationals(), p.one, p.table)


def opposite(p: RingPresentation) -> RingPresentation:
    """Returns the opposite ring, whose table is the transpose of ``p.table``.

    Left ideals of ``p`` are exactly the right ideals of its opposite.
    """
    n = p.rank
    name = p.name[: -len(":op")] if p.name.endswith(":op") else f"{p.name}:op"
    return RingPresentation(name, p.scalar, p.one, [[p.table[j][i] for j in range(n)] for i in range(n)])


def elements(p: RingPresentation, *, cap: int = MISSING) -> Iterator[RingElement]:
    """Iterates over every element of a finite ring in lexicographic coordinate order.

    Parameters
    ----------
    p: :class:`RingPresentation`
        A ring over the integers modulo ``m``.
    cap: :class:`int`
        The largest number of elements allowed, defaults to ``2 ** 24``.

    Raises
    ------
    UnsupportedScalar
        The ring is infinite.
    EnumerationCapExceeded
        ``m ** rank`` is larger than ``cap``. Raised on call, before iterating.
    """
    if p.size is None:
        raise UnsupportedScalar("elements", p.scalar)
    limit = DEFAULT_ENUMERATION_CAP if cap is MISSING else cap
    if p.size > limit:
        raise EnumerationCapExceeded(p.size, limit)
    return _iterate(p)


def _iterate(p: RingPresentation) -> Iterator[RingElement]:
    m: int = p.scalar.modulus  # type: ignore
    for coords in itertools.product(range(m), repeat=p.rank):
        yield RingElement(p, coords)


def representatives(p: RingPresentation, *, cap: int = MISSING) -> Iterator[RingElement]:
    """Iterates over the non-zero elements of a finite ring up to unit scalar multiples.

    Over a prime field only the elements whose first non-zero coordinate is one are
    visited. Over a composite modulus every non-zero element is visited. The order is
    lexicographic in both cases, so the first element with a property that is
    invariant under unit scalars is the first such element of :func:`elements`.

    Raises
    ------
    UnsupportedScalar
        The ring is infinite.
    EnumerationCapExceeded
        ``m ** rank`` is larger than ``cap``.
    """
    everything = elements(p, cap=cap)
    return _representatives(p, everything)


def _representatives(p: RingPresentation, everything: Iterator[RingElement]) -> Iterator[RingElement]:
    prime = p.scalar.is_prime_field
    for element in everything:
        leading = next((v for v in element.coords if v), 0)
        if leading == 0 or (prime and leading != 1):
            continue
        yield element


def is_commutative(p: RingPresentation) -> tuple[bool, Optional[tuple[int, int]]]:
    """Checks whether all basis elements commute.

    Returns
    -------
    Tuple[:class:`bool`, Optional[Tuple[:class:`int`, :class:`int`]]]
        The verdict and, when it is ``False``, the first basis pair ``(i, j)`` with
        ``e_i e_j != e_j e_i``.
    """
    for i in range(p.rank):
        for j in range(i + 1, p.rank):
            if p.table[i][j] != p.table[j][i]:
                return False, (i, j)
    return True, None
