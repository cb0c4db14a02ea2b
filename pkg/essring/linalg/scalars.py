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

from typing import Any, Iterable

from sympy import isprime
from sympy.polys.domains import QQ

from ..enums import ScalarKind
from ..errors import InvalidPresentation
from .._types import Scalar, Vector

__all__ = ("ScalarSpec",)


class ScalarSpec:
    """Represents a coefficient domain: the integers, the integers modulo ``m`` or the rationals.

    Integer scalars are plain :class:`int` objects. Rational scalars are elements of
    sympy's ``QQ`` domain.

    .. container:: operations

        .. describe:: x == y

            Checks if two specs describe the same domain.

        .. describe:: str(x)

            Returns the short form used on the command line: ``int``, ``rat`` or ``mod:m``.

    Attributes
    ----------
    kind: :class:`~essring.ScalarKind`
        The kind of domain.
    modulus: Optional[:class:`int`]
        The modulus, only present for :attr:`ScalarKind.modular`.
    """

    __slots__ = ("kind", "modulus", "_prime")

    def __init__(self, kind: ScalarKind, modulus: int | None = None) -> None:
        if kind is ScalarKind.modular:
            if not isinstance(modulus, int) or modulus < 2:
                raise ValueError(f"modulus must be an integer >= 2, got {modulus!r}")
        elif modulus is not None:
            raise ValueError(f"{kind.value} scalars take no modulus")
        self.kind: ScalarKind = kind
        self.modulus: int | None = modulus
        self._prime: bool = kind is ScalarKind.modular and bool(isprime(modulus))

    @classmethod
    def integers(cls) -> ScalarSpec:
        return cls(ScalarKind.integer)

    @classmethod
    def rationals(cls) -> ScalarSpec:
        return cls(ScalarKind.rational)

    @classmethod
    def mod(cls, modulus: int) -> ScalarSpec:
        return cls(ScalarKind.modular, modulus)

    @classmethod
    def parse(cls, text: str) -> ScalarSpec:
        """Parses the short form returned by :func:`str`.

        ``Z``, ``int``, ``Q``, ``rat``, ``mod:4``, ``Z/4`` and ``F3`` are accepted.
        """
        value = text.strip().lower()
        if value in ("int", "integer", "z"):
            return cls.integers()
        if value in ("rat", "rational", "q"):
            return cls.rationals()
        for prefix in ("mod:", "z/", "f"):
            if value.startswith(prefix) and value[len(prefix):].isdigit():
                modulus = int(value[len(prefix):])
                if prefix == "f" and not isprime(modulus):
                    break
                if modulus >= 2:
                    return cls.mod(modulus)
        raise ValueError(f"unknown scalar specification {text!r}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ScalarSpec) and self.kind is other.kind and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.kind, self.modulus))

    def __str__(self) -> str:
        if self.kind is ScalarKind.integer:
            return "int"
        if self.kind is ScalarKind.rational:
            return "rat"
        return f"mod:{self.modulus}"

    def __repr__(self) -> str:
        return f"<ScalarSpec kind={self.kind.value!r} modulus={self.modulus!r}>"

    @property
    def is_integer(self) -> bool:
        return self.kind is ScalarKind.integer

    @property
    def is_rational(self) -> bool:
        return self.kind is ScalarKind.rational

    @property
    def is_modular(self) -> bool:
        return self.kind is ScalarKind.modular

    @property
    def is_finite(self) -> bool:
        """:class:`bool`: Whether the domain has finitely many elements."""
        return self.kind is ScalarKind.modular

    @property
    def is_field(self) -> bool:
        """:class:`bool`: Whether the domain is the rationals or a prime field."""
        return self.kind is ScalarKind.rational or self._prime

    @property
    def is_prime_field(self) -> bool:
        return self._prime

    @property
    def characteristic(self) -> int:
        return self.modulus if self.modulus is not None else 0

    @property
    def zero(self) -> Scalar:
        return QQ(0) if self.kind is ScalarKind.rational else 0

    @property
    def one(self) -> Scalar:
        return QQ(1) if self.kind is ScalarKind.rational else 1

    def convert(self, value: Any) -> Scalar:
        """Converts an integer, a rational or a decimal string into a scalar of this domain."""
        if isinstance(value, str):
            return self.parse_value(value)
        if self.kind is ScalarKind.rational:
            if isinstance(value, int):
                return QQ(value)
            return QQ(int(value.numerator), int(value.denominator))
        if not isinstance(value, int):
            if getattr(value, "denominator", 1) != 1:
                raise ValueError(f"{value!r} is not an integer")
            value = int(value.numerator)
        if self.modulus is not None:
            return value % self.modulus
        return value

    def vector(self, values: Iterable[Any]) -> Vector:
        """Converts an iterable of values into a canonical coordinate tuple."""
        return tuple(self.convert(value) for value in values)

    def reduce(self, values: Iterable[Scalar]) -> Vector:
        """Reduces already typed values, only doing work for modular scalars."""
        if self.modulus is not None:
            m = self.modulus
            return tuple(value % m for value in values)
        return tuple(values)

    def inverse(self, value: Scalar) -> Scalar:
        """Returns the multiplicative inverse of a non-zero field element."""
        if self.kind is ScalarKind.rational:
            return QQ(1) / value
        if self._prime:
            return pow(value, -1, self.modulus)  # type: ignore
        raise ZeroDivisionError(f"{self} is not a field")

    def parse_value(self, text: str) -> Scalar:
        """Parses a decimal string, or ``p/q`` for rationals."""
        try:
            if self.kind is ScalarKind.rational:
                numerator, _, denominator = text.partition("/")
                return QQ(int(numerator), int(denominator or 1))
            value = int(text)
        except (ValueError, ZeroDivisionError):
            raise InvalidPresentation("<scalar>", f"{text!r} is not a valid {self.kind.value} value")
        if self.modulus is not None:
            return value % self.modulus
        return value

    def format_value(self, value: Scalar) -> str:
        """Formats a scalar as the decimal string used by the ring file format."""
        if self.kind is ScalarKind.rational:
            numerator, denominator = int(value.numerator), int(value.denominator)
            return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"
        return str(int(value))

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"kind": self.kind.value}
        if self.modulus is not None:
            data["modulus"] = str(self.modulus)
        return data

    @classmethod
    def from_dict(cls, data: Any) -> ScalarSpec:
        if not isinstance(data, dict) or "kind" not in data:
            raise InvalidPresentation("scalar", "expected an object with a 'kind' key")
        try:
            kind = ScalarKind(data["kind"])
        except ValueError:
            raise InvalidPresentation("scalar.kind", f"unknown kind {data['kind']!r}")
        modulus = data.get("modulus")
        if kind is ScalarKind.modular:
            try:
                modulus = int(modulus)  # type: ignore
            except (TypeError, ValueError):
                raise InvalidPresentation("scalar.modulus", f"expected an integer, got {modulus!r}")
            if modulus < 2:
                raise InvalidPresentation("scalar.modulus", "modulus must be at least 2")
            return cls(kind, modulus)
        if modulus is not None:
            raise InvalidPresentation("scalar.modulus", f"{kind.value} scalars take no modulus")
        return cls(kind)
