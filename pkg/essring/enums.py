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

from enum import Enum

__all__ = (
    "ScalarKind",
    "Side",
    "Verdict",
    "DecisionMethod",
    "CheckVerdict",
    "Family",
)


class ScalarKind(Enum):
    """Specifies the coefficient domain of a ring presentation."""

    integer = "integer"
    """Arbitrary-precision integers. Presentations over this kind are free of finite rank."""
    modular = "integer-mod-m"
    """Integers modulo a fixed modulus ``m >= 2``."""
    rational = "rational"
    """The rational numbers."""


class Side(Enum):
    """Specifies the side an ideal is closed under."""

    right = "right"
    """Closed under multiplication by ring elements on the right."""
    left = "left"
    """Closed under multiplication by ring elements on the left."""
    two_sided = "two-sided"
    """Closed under multiplication on both sides."""

    @property
    def multiplies_right(self) -> bool:
        return self is not Side.left

    @property
    def multiplies_left(self) -> bool:
        return self is not Side.right

    @property
    def opposite(self) -> Side:
        """:class:`Side`: The side this becomes in the opposite ring."""
        if self is Side.right:
            return Side.left
        if self is Side.left:
            return Side.right
        return self


class Verdict(Enum):
    """The outcome of a central essentiality decision."""

    yes = "yes"
    no = "no"
    unknown = "unknown"


class DecisionMethod(Enum):
    """The backend that produced a :class:`~essring.CEDecision`."""

    exhaustive = "exhaustive"
    """Every non-zero element of a finite ring was challenged."""
    socle_criterion = "socle-criterion"
    """The socle of the ring over its center was compared with the center."""
    rationalized = "rationalized"
    """An integer ring was decided through its rational algebra."""
    witness_family = "witness-family"
    """A registered certificate family answered."""
    sampling_refuted = "sampling-refuted"
    """Random sampling found an element without a central multiple."""


class CheckVerdict(Enum):
    """The outcome of a single verification check."""

    passed = "pass"
    failed = "fail"
    vacuous = "vacuous"
    """The hypothesis of the claim is empty on this ring."""
    skipped = "skipped"
    """The ring does not satisfy the preconditions of the check."""


class Family(Enum):
    """The ring families :mod:`essring.constructions` can build."""

    noninvariant = "noninvariant"
    """Centrally essential rings of upper triangular shape that are not invariant."""
    grassmann = "grassmann"
    """Exterior algebras over a prime field."""
    full_matrix = "full-matrix"
    triangular = "triangular"
    commutative_control = "commutative-control"
    """Commutative rings used as positive controls."""
