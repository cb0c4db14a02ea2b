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
import math
from typing import Union

from sympy import isprime, multiplicity

from ..config import DEFAULT_ENUMERATION_CAP
from ..enums import Side
from ..errors import IdealClosureError, IdempotentLiftError, NotPrime, UnsupportedScalar
from ..linalg.submodule import Submodule
from ..ring import RingElement, RingPresentation, elements
from ..utils import MISSING
from .ideal import IdealRep, quotient_algebra
from .radical import jacobson_radical, nilpotency_index

logger = logging.getLogger(__name__)

__all__ = (
    "Idempotent",
    "idempotents",
    "lift_idempotent",
    "p_height",
)


class Idempotent:
    """Represents an idempotent element ``e`` with ``e * e = e``.

    Attributes
    ----------
    e: :class:`~essring.RingElement`
        The element.

    Raises
    ------
    ValueError
        The element is not idempotent.
    """

    __slots__ = ("e",)

    def __init__(self, e: RingElement) -> None:
        if e * e != e:
            raise ValueError(f"{e} is not idempotent")
        self.e: RingElement = e

    def __repr__(self) -> str:
        return f"<Idempotent e={self.e} central={self.central}>"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Idempotent) and self.e == other.e

    def __hash__(self) -> int:
        return hash(self.e)

    @property
    def central(self) -> bool:
        """:class:`bool`: Whether ``e`` commutes with every basis element."""
        ring = self.e.ring
        return all(not self.e.commutator(ring.basis(j)) for j in range(ring.rank))

    @property
    def trivial(self) -> bool:
        """:class:`bool`: Whether ``e`` is zero or the identity."""
        return not self.e or self.e == self.e.ring.identity


def _scan(ring: RingPresentation, cap: int) -> list[RingElement]:
    return [x for x in elements(ring, cap=cap) if x * x == x]


def idempotents(p: RingPresentation, *, cap: int = MISSING) -> list[Idempotent]:
    """Lists every idempotent of a finite ring in lexicographic order.

    Over a prime field the quotient by the radical is scanned first. When it only
    has the idempotents zero and one, so does the ring, and the full scan is
    skipped.

    Raises
    ------
    UnsupportedScalar
        The ring is infinite.
    EnumerationCapExceeded
        A scan would visit more than ``cap`` elements.
    """
    if not p.is_finite:
        raise UnsupportedScalar("idempotents", p.scalar)
    limit = DEFAULT_ENUMERATION_CAP if cap is MISSING else cap

    if p.scalar.is_prime_field:
        radical = jacobson_radical(p).jacobson
        if not radical.is_full():
            quotient = quotient_algebra(p, radical)
            found = _scan(quotient.ring, limit)
            if len(found) <= 2:
                logger.debug("Quotient of %r by its radical has no non-trivial idempotents", p.name)
                return [Idempotent(p.zero), Idempotent(p.identity)]

    return [Idempotent(x) for x in _scan(p, limit)]


def lift_idempotent(x: RingElement, nil: Submodule, *, cap: int = 64) -> Idempotent:
    """Lifts an idempotent modulo a nilpotent ideal to an idempotent of the ring.

    The iteration ``e -> 3 e ** 2 - 2 e ** 3`` fixes idempotents, keeps the coset
    of ``x`` and squares the ideal power containing ``e ** 2 - e`` each time, so
    ``ceil(log2(k))`` steps suffice for an ideal of nilpotency index ``k``.

    Parameters
    ----------
    x: :class:`~essring.RingElement`
        An element with ``x ** 2 - x`` in ``nil``.
    nil: :class:`~essring.Submodule`
        A nilpotent two-sided ideal.
    cap: :class:`int`
        The largest nilpotency index looked for.

    Raises
    ------
    IdempotentLiftError
        ``x ** 2 - x`` is not in ``nil``, or ``nil`` is not a nilpotent two-sided ideal.
    """
    ring = x.ring
    if not nil.contains((x * x - x).coords):
        raise IdempotentLiftError("x ** 2 - x is not in the ideal")
    try:
        IdealRep(ring, Side.two_sided, nil)
    except IdealClosureError as exc:
        raise IdempotentLiftError("the ideal is not two-sided") from exc
    index = nilpotency_index(ring, nil, cap=cap)
    if index is None:
        raise IdempotentLiftError("the ideal is not nilpotent")

    e = x
    steps = (index - 1).bit_length()
    for _ in range(steps):
        square = e * e
        e = 3 * square - 2 * (square * e)
    if e * e != e:
        raise IdempotentLiftError(f"iteration did not converge in {steps} steps")
    logger.debug("Lifted idempotent in %d steps, nilpotency index %d", steps, index)
    return Idempotent(e)


def p_height(x: RingElement, p: int) -> Union[int, float]:
    """Returns the largest ``k`` with ``x`` in ``p ** k * R``.

    For an integer ring this is the smallest ``p``-adic valuation of a coordinate.

    Returns
    -------
    Union[:class:`int`, :class:`float`]
        The height, or :data:`math.inf` for zero.

    Raises
    ------
    NotPrime
        ``p`` is not a prime.
    UnsupportedScalar
        The ring is not over the integers.
    """
    if not isprime(p):
        raise NotPrime(p)
    if not x.ring.scalar.is_integer:
        raise UnsupportedScalar("p_height", x.ring.scalar)
    values = [abs(int(v)) for v in x.coords if v]
    if not values:
        return math.inf
    return min(int(multiplicity(p, v)) for v in values)
