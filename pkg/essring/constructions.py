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
import itertools
import logging
from typing import Any, Optional

from sympy import isprime

from .center import CentralityWitness, WitnessFamily, register_family
from .enums import Family
from .errors import InvalidPresentation, NotPrime
from .linalg.scalars import ScalarSpec
from .ring import RingElement, RingPresentation

logger = logging.getLogger(__name__)

__all__ = (
    "FamilySpec",
    "NoninvariantFamily",
    "noninvariant",
    "is_noninvariant",
    "grassmann",
    "full_matrix",
    "triangular",
    "commutative_control",
)

Table = list[list[list[int]]]


def _empty(rank: int) -> Table:
    return [[[0] * rank for _ in range(rank)] for _ in range(rank)]


def _unit(rank: int, index: int) -> list[int]:
    return [int(k == index) for k in range(rank)]


def noninvariant(n: int, scalar: Optional[ScalarSpec] = None) -> RingPresentation:
    """Builds a centrally essential ring of rank ``n >= 7`` that is not right or left invariant.

    The basis is ``1, u_2, ..., u_n`` with the only non-zero products between
    non-identity basis elements

    - ``u_2 * u_3 = u_4``,
    - ``u_2 * u_{n-2} = u_{n-2} * u_2 = u_n``,
    - ``u_3 * u_{n-1} = u_{n-1} * u_3 = u_n``.

    The ring embeds in the upper triangular ``n x n`` matrices, each element being
    determined by the first row of its matrix. The basis elements
    ``u_5, ..., u_{n-3}`` multiply to zero with everything except the identity.

    Parameters
    ----------
    n: :class:`int`
        The rank, at least 7.
    scalar: Optional[:class:`~essring.ScalarSpec`]
        The coefficients, defaults to the integers.

    Raises
    ------
    ValueError
        ``n`` is smaller than 7.
    """
    if n < 7:
        raise ValueError(f"the noninvariant family needs n >= 7, got {n}")
    scalar = scalar or ScalarSpec.integers()
    a, b, c = 1, 2, 3
    d, e, f = n - 3, n - 2, n - 1

    table = _empty(n)
    for i in range(n):
        table[0][i] = _unit(n, i)
        table[i][0] = _unit(n, i)
    table[a][b] = _unit(n, c)
    table[a][d] = table[d][a] = _unit(n, f)
    table[b][e] = table[e][b] = _unit(n, f)
    return RingPresentation(f"noninvariant[n={n},{scalar}]", scalar, _unit(n, 0), table)


def _monomials(d: int) -> list[tuple[int, ...]]:
    return [subset for size in range(d + 1) for subset in itertools.combinations(range(d), size)]


def grassmann(d: int, p: int) -> RingPresentation:
    """Builds the exterior algebra of a ``d``-dimensional space over the field with ``p`` elements.

    The basis is the monomials ``x_S`` for subsets ``S`` of ``{1, ..., d}``, ordered
    by size and then lexicographically, so the rank is ``2 ** d``.

    Raises
    ------
    ValueError
        ``d`` is smaller than 1.
    NotPrime
        ``p`` is not a prime.
    """
    if d < 1:
        raise ValueError(f"the dimension must be at least 1, got {d}")
    if not isprime(p):
        raise NotPrime(p)
    monomials = _monomials(d)
    index = {monomial: i for i, monomial in enumerate(monomials)}
    rank = len(monomials)

    table = _empty(rank)
    for i, left in enumerate(monomials):
        for j, right in enumerate(monomials):
            if set(left) & set(right):
                continue
            inversions = sum(1 for s in left for t in right if s > t)
            entry = [0] * rank
            entry[index[tuple(sorted(left + right))]] = -1 if inversions % 2 else 1
            table[i][j] = entry
    return RingPresentation(f"grassmann[d={d},p={p}]", ScalarSpec.mod(p), _unit(rank, 0), table)


def _matrix_units(pairs: list[tuple[int, int]], name: str, scalar: ScalarSpec, k: int) -> RingPresentation:
    index = {pair: i for i, pair in enumerate(pairs)}
    rank = len(pairs)
    table = _empty(rank)
    for (i, j), x in index.items():
        for (s, t), y in index.items():
            if j == s:
                table[x][y] = _unit(rank, index[(i, t)])
    one = [int(i == j) for i, j in pairs]
    return RingPresentation(f"{name}[k={k},{scalar}]", scalar, one, table)


def full_matrix(k: int, scalar: Optional[ScalarSpec] = None) -> RingPresentation:
    """Builds the ring of ``k x k`` matrices on the matrix units ``E_ij`` in row-major order.

    Raises
    ------
    ValueError
        ``k`` is smaller than 1.
    """
    if k < 1:
        raise ValueError(f"the matrix size must be at least 1, got {k}")
    pairs = [(i, j) for i in range(k) for j in range(k)]
    return _matrix_units(pairs, "full-matrix", scalar or ScalarSpec.integers(), k)


def triangular(k: int, scalar: Optional[ScalarSpec] = None) -> RingPresentation:
    """Builds the ring of upper triangular ``k x k`` matrices on the units ``E_ij``, ``i <= j``.

    Raises
    ------
    ValueError
        ``k`` is smaller than 1.
    """
    if k < 1:
        raise ValueError(f"the matrix size must be at least 1, got {k}")
    pairs = [(i, j) for i in range(k) for j in range(i, k)]
    return _matrix_units(pairs, "triangular", scalar or ScalarSpec.integers(), k)


def commutative_control(kind: str, k: int, scalar: Optional[ScalarSpec] = None) -> RingPresentation:
    """Builds a commutative ring of rank ``k`` on the powers ``1, x, ..., x ** (k - 1)``.

    Parameters
    ----------
    kind: :class:`str`
        ``truncated`` for the polynomials modulo ``x ** k`` or ``cyclic`` for the
        polynomials modulo ``x ** k - 1``.
    k: :class:`int`
        The rank, at least 1.
    scalar: Optional[:class:`~essring.ScalarSpec`]
        The coefficients, defaults to the integers.
    """
    if kind not in ("truncated", "cyclic"):
        raise ValueError(f"unknown commutative control {kind!r}")
    if k < 1:
        raise ValueError(f"the rank must be at least 1, got {k}")
    scalar = scalar or ScalarSpec.integers()
    table = _empty(k)
    for i in range(k):
        for j in range(k):
            if kind == "cyclic":
                table[i][j] = _unit(k, (i + j) % k)
            elif i + j < k:
                table[i][j] = _unit(k, i + j)
    return RingPresentation(f"{kind}[k={k},{scalar}]", scalar, _unit(k, 0), table)


class FamilySpec:
    """Names a member of one of the ring families.

    Attributes
    ----------
    family: :class:`~essring.Family`
        The family.
    n: Optional[:class:`int`]
        The rank of a :attr:`Family.noninvariant` ring.
    d: Optional[:class:`int`]
        The dimension of a :attr:`Family.grassmann` algebra.
    p: Optional[:class:`int`]
        The field order of a :attr:`Family.grassmann` algebra.
    k: Optional[:class:`int`]
        The matrix size or the rank of a control.
    kind: Optional[:class:`str`]
        The kind of commutative control.
    scalar: :class:`~essring.ScalarSpec`
        The coefficients, ignored by :attr:`Family.grassmann`.
    """

    __slots__ = ("family", "n", "d", "p", "k", "kind", "scalar")

    def __init__(
        self,
        family: Family,
        *,
        n: Optional[int] = None,
        d: Optional[int] = None,
        p: Optional[int] = None,
        k: Optional[int] = None,
        kind: Optional[str] = None,
        scalar: Optional[ScalarSpec] = None,
    ) -> None:
        self.family: Family = family
        self.n: Optional[int] = n
        self.d: Optional[int] = d
        self.p: Optional[int] = p
        self.k: Optional[int] = k
        self.kind: Optional[str] = kind
        self.scalar: ScalarSpec = scalar or ScalarSpec.integers()

    def __repr__(self) -> str:
        return f"<FamilySpec family={self.family.value!r} {self.to_dict()!r}>"

    def _require(self, name: str) -> Any:
        value = getattr(self, name)
        if value is None:
            raise InvalidPresentation(name, f"required by the {self.family.value} family")
        return value

    def build(self) -> RingPresentation:
        """Builds the presentation.

        Raises
        ------
        InvalidPresentation
            A parameter the family needs is missing.
        ValueError
            A parameter is out of range.
        """
        family = self.family
        logger.debug("Building a %s ring from %r", family.value, self.to_dict())
        if family is Family.noninvariant:
            return noninvariant(self._require("n"), self.scalar)
        if family is Family.grassmann:
            return grassmann(self._require("d"), self._require("p"))
        if family is Family.full_matrix:
            return full_matrix(self._require("k"), self.scalar)
        if family is Family.triangular:
            return triangular(self._require("k"), self.scalar)
        return commutative_control(self._require("kind"), self._require("k"), self.scalar)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"family": self.family.value}
        for name in ("n", "d", "p", "k", "kind"):
            value = getattr(self, name)
            if value is not None:
                data[name] = value
        if self.family is not Family.grassmann:
            data["scalar"] = str(self.scalar)
        return data

    @classmethod
    def from_dict(cls, data: Any) -> FamilySpec:
        if not isinstance(data, dict) or "family" not in data:
            raise InvalidPresentation("family", "expected an object with a 'family' key")
        try:
            family = Family(data["family"])
        except ValueError:
            raise InvalidPresentation("family", f"unknown family {data['family']!r}")
        params: dict[str, Any] = {}
        for name in ("n", "d", "p", "k"):
            if data.get(name) is not None:
                try:
                    params[name] = int(data[name])
                except (TypeError, ValueError):
                    raise InvalidPresentation(name, f"expected an integer, got {data[name]!r}")
        if data.get("kind") is not None:
            params["kind"] = str(data["kind"])
        if data.get("scalar") is not None:
            try:
                params["scalar"] = ScalarSpec.parse(str(data["scalar"]))
            except ValueError as exc:
                raise InvalidPresentation("scalar", str(exc)) from exc
        return cls(family, **params)


@functools.lru_cache(maxsize=32)
def _reference(n: int, scalar: ScalarSpec) -> RingPresentation:
    return noninvariant(n, scalar)


def is_noninvariant(p: RingPresentation) -> bool:
    """Checks whether a presentation has the multiplication table of :func:`noninvariant`."""
    return p.rank >= 7 and p == _reference(p.rank, p.scalar)


class NoninvariantFamily(WitnessFamily):
    """The closed form witness of the :func:`noninvariant` rings over the integers or the rationals.

    For ``a`` with coefficients ``alpha`` on ``1``, ``s`` on ``u_2`` and ``t`` on
    ``u_3``, the witness is ``x = 1`` when ``s = t = 0`` and
    ``x = s * u_{n-2} + t * u_{n-1}`` otherwise, so that
    ``a * x = alpha * x + (s ** 2 + t ** 2) * u_n``.
    """

    name = "noninvariant"

    def matches(self, p: RingPresentation) -> bool:
        return (p.scalar.is_integer or p.scalar.is_rational) and is_noninvariant(p)

    def witness(self, a: RingElement) -> CentralityWitness:
        ring = a.ring
        n = ring.rank
        s, t = a.coords[1], a.coords[2]
        if not s and not t:
            x = ring.identity
        else:
            coords = [ring.scalar.zero] * n
            coords[n - 3] = s
            coords[n - 2] = t
            x = RingElement(ring, tuple(coords))
        return CentralityWitness(a, x, a * x)


register_family(NoninvariantFamily())
