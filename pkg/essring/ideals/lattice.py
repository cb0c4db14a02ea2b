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
from typing import Iterable, Optional

from sympy import primefactors

from ..config import Config
from ..enums import Side
from ..errors import EnumerationCapExceeded, IncompleteSearch, NotArtinian, UnsupportedScalar
from ..linalg.submodule import Submodule, integer_points, preimage
from ..ring import RingElement, RingPresentation, elements, opposite, quotient_mod, rationalize, representatives
from .ideal import IdealRep, generate, is_two_sided, product_span, quotient_algebra
from .radical import jacobson_radical, socle_right

logger = logging.getLogger(__name__)

__all__ = (
    "PowerChain",
    "is_essential",
    "is_essential_in",
    "is_closed",
    "closure",
    "cap_complement",
    "maximal_right_ideals",
    "is_local",
    "minimal_right_ideals",
    "is_quasi_invariant",
    "is_right_invariant",
    "intersect_powers",
)


class _RightView:
    # an ideal seen as a right ideal of an Artinian ring: the opposite ring for
    # left ideals and the rational algebra for integer rings
    __slots__ = ("ideal", "ring", "sub", "mirrored", "rationalized")

    def __init__(self, ideal: IdealRep) -> None:
        ring = ideal.ring
        sub = ideal.sub
        self.ideal = ideal
        self.mirrored = ideal.side is Side.left
        self.rationalized = ring.scalar.is_integer
        if self.rationalized:
            ring = rationalize(ring)
            sub = sub.map_scalar(ring.scalar)
        if self.mirrored:
            ring = opposite(ring)
        if not (ring.scalar.is_finite or ring.scalar.is_rational):
            raise NotArtinian("ideal lattice", ring.scalar)
        self.ring: RingPresentation = ring
        self.sub: Submodule = sub

    def restore(self, sub: Submodule) -> IdealRep:
        original = self.ideal.ring
        if self.rationalized:
            sub = integer_points(sub)
        return IdealRep(original, Side.left if self.mirrored else Side.right, sub)


def _radical(ring: RingPresentation) -> Submodule:
    return jacobson_radical(ring).jacobson


def _closed(ring: RingPresentation, sub: Submodule) -> bool:
    # closed iff {x : x J in sub} lies in sub + Soc
    radical = _radical(ring)
    upper = Submodule.full(ring.rank, ring.scalar)
    for s in radical.basis:
        upper = upper & preimage(ring.right_matrix(s), sub)
    return upper <= sub + socle_right(ring)


def is_essential(i: IdealRep) -> bool:
    """Checks whether an ideal meets every non-zero ideal of its side.

    The ring must be finite or a rational algebra, where this is equivalent to
    containing the socle. Two-sided ideals are treated as right ideals and
    integer rings are answered for their rational algebra.

    Raises
    ------
    NotArtinian
        The ring is neither finite nor rational.
    """
    view = _RightView(i)
    return socle_right(view.ring) <= view.sub


def is_essential_in(i: IdealRep, e: IdealRep) -> bool:
    """Checks whether ``i`` meets every non-zero ideal of its side contained in ``e``.

    The socle of ``e`` is its intersection with the socle of the ring, so this is
    the containment ``e & Soc <= i``.

    Raises
    ------
    NotArtinian
        The ring is neither finite nor rational.
    ValueError
        ``i`` is not contained in ``e``.
    """
    if not i.sub <= e.sub:
        raise ValueError("the ideal is not contained in the extension")
    view = _RightView(i)
    outer = _RightView(e)
    return (outer.sub & socle_right(view.ring)) <= view.sub


def is_closed(i: IdealRep) -> bool:
    """Checks whether an ideal has no proper essential extension of its side.

    Uses the criterion ``{x : x * J in i} <= i + Soc`` for right Artinian rings.

    Raises
    ------
    NotArtinian
        The ring is neither finite nor rational.
    """
    view = _RightView(i)
    return _closed(view.ring, view.sub)


def _grow(ring: RingPresentation, target: Submodule, current: Submodule, candidates: Iterable[tuple]) -> Submodule:
    for x in candidates:
        if current.contains(x):
            continue
        grown = generate(ring, Side.right, list(current.basis) + [x]).sub
        if (grown & target).is_zero():
            current = grown
    return current


def _complement(ring: RingPresentation, target: Submodule, start: Submodule, config: Config) -> Submodule:
    socle = socle_right(ring)
    candidates = [ring.unit(j) for j in range(ring.rank)] + list(socle.basis)
    current = _grow(ring, target, start, candidates)

    if socle <= current + target and _closed(ring, current):
        return current
    if not ring.is_finite:
        raise IncompleteSearch("cap_complement", "greedy candidates did not reach a maximal complement")
    logger.debug("Greedy complement in %r is not maximal, scanning every element", ring.name)
    everything = (x.coords for x in representatives(ring, cap=config.enumeration_cap))
    return _grow(ring, target, current, everything)


def cap_complement(i: IdealRep, base: Optional[IdealRep] = None, *, config: Optional[Config] = None) -> IdealRep:
    """Returns a right ideal maximal with respect to meeting ``i`` only in zero.

    Basis vectors and then socle vectors are tried in order, each kept when the
    grown ideal still meets ``i`` trivially. The result is checked to be maximal
    and, for finite rings, completed by a scan of every element if it is not.

    Parameters
    ----------
    i: :class:`IdealRep`
        The ideal to complement. Left ideals are complemented among left ideals.
    base: Optional[:class:`IdealRep`]
        An ideal of the same side meeting ``i`` trivially to start from.
    config: Optional[:class:`~essring.Config`]
        Limits for the fallback scan.

    Raises
    ------
    NotArtinian
        The ring is neither finite nor rational.
    IncompleteSearch
        The candidates of a rational algebra did not reach a maximal complement.
    """
    config = config or Config()
    view = _RightView(i)
    start = Submodule.zero(view.ring.rank, view.ring.scalar)
    if base is not None:
        start = _RightView(base).sub
        if not (start & view.sub).is_zero():
            raise ValueError("the base ideal meets the ideal being complemented")
    return view.restore(_complement(view.ring, view.sub, start, config))


def closure(i: IdealRep, *, config: Optional[Config] = None) -> IdealRep:
    """Returns a closed ideal of the same side in which ``i`` is essential.

    This is a complement of a complement of ``i`` grown from ``i`` itself.

    Raises
    ------
    NotArtinian
        The ring is neither finite nor rational.
    """
    config = config or Config()
    view = _RightView(i)
    zero = Submodule.zero(view.ring.rank, view.ring.scalar)
    complement = _complement(view.ring, view.sub, zero, config)
    return view.restore(_complement(view.ring, complement, view.sub, config))


def _keep_maximal(ideals: list[IdealRep]) -> list[IdealRep]:
    return [a for a in ideals if not any(a.sub != b.sub and a.sub <= b.sub for b in ideals)]


def _keep_minimal(ideals: list[IdealRep]) -> list[IdealRep]:
    return [a for a in ideals if not any(a.sub != b.sub and b.sub <= a.sub for b in ideals)]


def _dedupe(ideals: Iterable[IdealRep]) -> list[IdealRep]:
    seen: dict[Submodule, IdealRep] = {}
    for ideal in ideals:
        seen.setdefault(ideal.sub, ideal)
    return list(seen.values())


def maximal_right_ideals(p: RingPresentation, *, config: Optional[Config] = None) -> list[IdealRep]:
    """Lists every maximal right ideal of a finite ring.

    Over a prime field the right ideals of the semisimple quotient by the radical
    are generated by idempotents, so the candidates are the right ideals generated
    by the radical and a lift of an idempotent of the quotient. Over a composite
    modulus the maximal right ideals of each reduction modulo a prime factor are
    pulled back.

    Raises
    ------
    UnsupportedScalar
        The ring is infinite.
    EnumerationCapExceeded
        The quotient by the radical is larger than the enumeration cap.
    """
    config = config or Config()
    if not p.is_finite:
        raise UnsupportedScalar("maximal_right_ideals", p.scalar)

    if not p.scalar.is_prime_field:
        modulus: int = p.scalar.modulus  # type: ignore
        pulled: list[IdealRep] = []
        for prime in primefactors(modulus):
            reduced = quotient_mod(p, prime).target
            kernel_rows = [[prime * int(i == j) for j in range(p.rank)] for i in range(p.rank)]
            for ideal in maximal_right_ideals(reduced, config=config):
                rows = [[int(v) for v in row] for row in ideal.sub.basis] + kernel_rows
                pulled.append(IdealRep(p, Side.right, Submodule(p.rank, p.scalar, rows)))
        return pulled

    radical = _radical(p)
    quotient = quotient_algebra(p, radical)
    candidates = []
    for e in elements(quotient.ring, cap=config.enumeration_cap):
        if e * e != e or e == quotient.ring.identity:
            continue
        candidate = generate(p, Side.right, list(radical.basis) + [quotient.lift(e).coords])
        if not candidate.is_whole():
            candidates.append(candidate)
    found = _keep_maximal(_dedupe(candidates))
    logger.debug("Found %d maximal right ideals of %r", len(found), p.name)
    return found


def is_local(p: RingPresentation, *, config: Optional[Config] = None) -> bool:
    """Checks whether a finite ring has exactly one maximal right ideal.

    Raises
    ------
    UnsupportedScalar
        The ring is infinite.
    """
    maximal = maximal_right_ideals(p, config=config)
    return len(maximal) == 1


def minimal_right_ideals(p: RingPresentation, *, config: Optional[Config] = None) -> list[IdealRep]:
    """Lists every minimal right ideal of a finite ring.

    Every minimal right ideal is generated by any of its non-zero elements and lies
    in the socle, so the principal right ideals of socle elements are compared.

    Raises
    ------
    UnsupportedScalar
        The ring is infinite.
    EnumerationCapExceeded
        The socle is larger than the enumeration cap.
    """
    config = config or Config()
    if not p.is_finite:
        raise UnsupportedScalar("minimal_right_ideals", p.scalar)
    socle = socle_right(p)
    if socle.size() > config.enumeration_cap:
        raise EnumerationCapExceeded(socle.size(), config.enumeration_cap)

    prime = p.scalar.is_prime_field
    candidates = []
    for s in socle.elements():
        leading = next((v for v in s if v), 0)
        if leading == 0 or (prime and leading != 1):
            continue
        candidates.append(generate(p, Side.right, [s]))
    return _keep_minimal(_dedupe(candidates))


def _commutative_modulo(p: RingPresentation, sub: Submodule) -> bool:
    for i in range(p.rank):
        for j in range(i + 1, p.rank):
            if not sub.contains(p.basis(i).commutator(p.basis(j)).coords):
                return False
    return True


def is_quasi_invariant(p: RingPresentation, *, config: Optional[Config] = None) -> tuple[bool, Optional[IdealRep]]:
    """Checks whether every maximal right ideal and every maximal left ideal is two-sided.

    When the quotient by the radical is commutative the answer is ``True`` without
    listing ideals, since then every maximal one-sided ideal is the pullback of a
    maximal ideal of a commutative ring. Otherwise the maximal ideals of a finite
    ring and of its opposite are listed.

    Returns
    -------
    Tuple[:class:`bool`, Optional[:class:`IdealRep`]]
        The verdict and, when it is ``False``, a maximal one-sided ideal that is not two-sided.

    Raises
    ------
    NotArtinian
        The ring is over the integers.
    IncompleteSearch
        A rational algebra has a non-commutative quotient by its radical.
    """
    config = config or Config()
    if _commutative_modulo(p, _radical(p)):
        return True, None
    if not p.is_finite:
        raise IncompleteSearch("is_quasi_invariant", "non-commutative semisimple quotient of a rational algebra")

    for ideal in maximal_right_ideals(p, config=config):
        if not is_two_sided(ideal)[0]:
            return False, ideal
    for ideal in maximal_right_ideals(opposite(p), config=config):
        if not is_two_sided(ideal)[0]:
            return False, IdealRep(p, Side.left, ideal.sub)
    return True, None


def is_right_invariant(p: RingPresentation, *, config: Optional[Config] = None) -> tuple[bool, Optional[RingElement]]:
    """Checks whether every right ideal of a finite ring is two-sided.

    Every right ideal is a sum of principal ones, so the principal right ideals
    ``x * R`` are checked in lexicographic order of ``x``.

    Returns
    -------
    Tuple[:class:`bool`, Optional[:class:`~essring.RingElement`]]
        The verdict and, when it is ``False``, the first ``x`` whose principal right
        ideal is not two-sided.

    Raises
    ------
    UnsupportedScalar
        The ring is infinite.
    EnumerationCapExceeded
        The ring is larger than the enumeration cap.
    """
    config = config or Config()
    for x in representatives(p, cap=config.enumeration_cap):
        if not is_two_sided(generate(p, Side.right, [x]))[0]:
            return False, x
    return True, None


class PowerChain:
    """The result of :func:`intersect_powers`.

    Attributes
    ----------
    submodule: :class:`~essring.Submodule`
        The last power computed, the intersection of all powers when :attr:`complete`.
    complete: :class:`bool`
        Whether the chain of powers stabilized.
    steps: :class:`int`
        The exponent of the last power computed.
    """

    __slots__ = ("submodule", "complete", "steps")

    def __init__(self, submodule: Submodule, complete: bool, steps: int) -> None:
        self.submodule: Submodule = submodule
        self.complete: bool = complete
        self.steps: int = steps

    def __repr__(self) -> str:
        return f"<PowerChain rank={self.submodule.rank} complete={self.complete} steps={self.steps}>"


def intersect_powers(m: IdealRep, cap: Optional[int] = None) -> PowerChain:
    """Computes the intersection of the powers ``m ** k`` of a right or two-sided ideal.

    The powers decrease, so the intersection is the first power equal to the next
    one. Artinian rings always stabilize; over the integers the chain is cut
    after ``cap`` powers and reported as incomplete.
    """
    limit = cap if cap is not None else Config().power_cap
    current = m.sub
    steps = 1
    while steps < limit:
        following = product_span(m.ring, current, m.sub)
        if following == current:
            return PowerChain(current, True, steps)
        current = following
        steps += 1
    logger.warning("Powers of an ideal of %r did not stabilize within %d steps", m.ring.name, limit)
    return PowerChain(current, False, steps)
