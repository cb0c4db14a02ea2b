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

from typing import Any, TYPE_CHECKING

if TYPE_CHECKING:
    from .linalg.scalars import ScalarSpec

__all__ = (
    "EssringError",
    "ScalarMismatch",
    "RingMismatch",
    "InvalidPresentation",
    "EnumerationCapExceeded",
    "NotPrime",
    "UnsupportedScalar",
    "NotArtinian",
    "IdealClosureError",
    "IdempotentLiftError",
    "IncompleteSearch",
    "ConfigError",
)


class EssringError(Exception):
    """The base exception of the library.

    Every other exception raised by the library inherits from this one, so it can
    be used to catch any of them.
    """


class ScalarMismatch(EssringError, ValueError):
    """An exception raised when two operands live over different coordinate spaces.

    Attributes
    ----------
    left: :class:`str`
        A description of the first operand space.
    right: :class:`str`
        A description of the second operand space.
    """

    def __init__(self, left: str, right: str, *args: Any) -> None:
        self.left: str = left
        self.right: str = right
        super().__init__(f"operands live in different spaces: {left} and {right}", *args)


class RingMismatch(EssringError, ValueError):
    """An exception raised when elements of different rings are combined.

    Attributes
    ----------
    left: :class:`str`
        The name of the ring of the first operand.
    right: :class:`str`
        The name of the ring of the second operand.
    """

    def __init__(self, left: str, right: str, *args: Any) -> None:
        self.left: str = left
        self.right: str = right
        super().__init__(f"elements belong to different rings ({left!r} and {right!r})", *args)


class InvalidPresentation(EssringError, ValueError):
    """An exception raised when a ring, ideal or corpus document is malformed.

    Attributes
    ----------
    field: :class:`str`
        The dotted path of the offending field, e.g. ``table[2][3]``.
    reason: :class:`str`
        What is wrong with it.
    """

    def __init__(self, field: str, reason: str, *args: Any) -> None:
        self.field: str = field
        self.reason: str = reason
        super().__init__(f"{field}: {reason}", *args)


class EnumerationCapExceeded(EssringError, RuntimeError):
    """An exception raised when an exhaustive scan would visit too many elements.

    Attributes
    ----------
    size: :class:`int`
        The number of elements the scan would visit, ``m ** rank``.
    cap: :class:`int`
        The configured enumeration cap.
    """

    def __init__(self, size: int, cap: int, *args: Any) -> None:
        self.size: int = size
        self.cap: int = cap
        super().__init__(f"refusing to enumerate {size} elements (cap is {cap})", *args)


class NotPrime(EssringError, ValueError):
    """An exception raised when a prime number was required.

    Attributes
    ----------
    value: :class:`int`
        The rejected value.
    """

    def __init__(self, value: int, *args: Any) -> None:
        self.value: int = value
        super().__init__(f"{value} is not a prime number", *args)


class UnsupportedScalar(EssringError, TypeError):
    """An exception raised when an operation does not support a coefficient domain.

    Attributes
    ----------
    operation: :class:`str`
        The name of the operation.
    scalar: :class:`~essring.ScalarSpec`
        The rejected coefficient domain.
    """

    def __init__(self, operation: str, scalar: ScalarSpec, *args: Any) -> None:
        self.operation: str = operation
        self.scalar: ScalarSpec = scalar
        super().__init__(f"{operation} does not support scalars of kind {scalar}", *args)


class NotArtinian(UnsupportedScalar):
    """An exception raised when an operation needs a finite ring or a rational algebra.

    This is a subclass of :exc:`UnsupportedScalar`.
    """


class IdealClosureError(EssringError, ValueError):
    """An exception raised when a submodule is not closed under the declared side.

    Attributes
    ----------
    side: :class:`~essring.Side`
        The declared side.
    witness: Dict[:class:`str`, Any]
        The basis index, the generator and the side of a product escaping the submodule.
    """

    def __init__(self, side: Any, witness: Any, *args: Any) -> None:
        self.side = side
        self.witness = witness
        super().__init__(f"submodule is not a {side.value} ideal, product {witness} escapes it", *args)


class IdempotentLiftError(EssringError, ValueError):
    """An exception raised when an element cannot be lifted to an idempotent.

    Attributes
    ----------
    reason: :class:`str`
        Why the lifting hypotheses fail.
    """

    def __init__(self, reason: str, *args: Any) -> None:
        self.reason: str = reason
        super().__init__(f"cannot lift idempotent: {reason}", *args)


class IncompleteSearch(EssringError, RuntimeError):
    """An exception raised when a candidate search ends without a certified answer.

    Attributes
    ----------
    operation: :class:`str`
        The name of the operation.
    reason: :class:`str`
        What could not be certified.
    """

    def __init__(self, operation: str, reason: str, *args: Any) -> None:
        self.operation: str = operation
        self.reason: str = reason
        super().__init__(f"{operation}: {reason}", *args)


class ConfigError(EssringError, ValueError):
    """An exception raised when a configuration value is rejected.

    Attributes
    ----------
    key: :class:`str`
        The configuration key.
    reason: :class:`str`
        Why it was rejected.
    """

    def __init__(self, key: str, reason: str, *args: Any) -> None:
        self.key: str = key
        self.reason: str = reason
        super().__init__(f"invalid configuration value for {key!r}: {reason}", *args)
