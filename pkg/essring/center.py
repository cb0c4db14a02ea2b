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
from math import lcm
from typing import Any, Literal, Optional

import numpy as np

from ._types import Vector
from .config import Config
from .enums import DecisionMethod, Verdict
from .errors import UnsupportedScalar
from .ideals.radical import jacobson_radical
from .linalg.matrix import hstack, vector_times
from .linalg.submodule import Submodule, kernel, preimage
from .ring import RingElement, RingPresentation, rationalize, representatives

logger = logging.getLogger(__name__)

__all__ = (
    "CenterBasis",
    "CentralityWitness",
    "CEDecision",
    "WitnessFamily",
    "center_basis",
    "is_central",
    "central_partner",
    "is_centrally_essential",
    "essential_witness",
    "refute_by_sampling",
    "register_family",
    "find_family",
)

Backend = Literal["auto", "exhaustive", "socle", "family"]


class CenterBasis:
    """The center of a ring as a submodule of its coordinate space.

    Over the integers the center is the full solution lattice of the commutation
    equations, so it is pure in the coordinate lattice.

    .. container:: operations

        .. describe:: x in center

            Checks if an element is central.

    Attributes
    ----------
    ring: :class:`~essring.RingPresentation`
        The ring.
    sub: :class:`~essring.Submodule`
        The central elements.
    """

    __slots__ = ("ring", "sub")

    def __init__(self, ring: RingPresentation, sub: Submodule) -> None:
        self.ring: RingPresentation = ring
        self.sub: Submodule = sub

    def __repr__(self) -> str:
        return f"<CenterBasis ring={self.ring.name!r} rank={self.rank}>"

    def __contains__(self, element: RingElement) -> bool:
        return self.sub.contains(element.coords)

    @property
    def rank(self) -> int:
        return self.sub.rank

    def elements(self) -> list[RingElement]:
        """Returns the canonical generators as ring elements."""
        return [RingElement(self.ring, row) for row in self.sub.basis]


def center_basis(p: RingPresentation) -> CenterBasis:
    """Computes the center as the kernel of the commutation maps ``x -> [x, e_j]``."""
    n = p.rank
    spec = p.scalar
    blocks = [
        [spec.reduce(a - b for a, b in zip(p.table[i][j], p.table[j][i])) for i in range(n)]
        for j in range(n)
    ]
    sub = kernel(hstack(blocks, n), spec, ncols=n * n)
    logger.debug("Center of %r has rank %d", p.name, sub.rank)
    return CenterBasis(p, sub)


def is_central(x: RingElement) -> bool:
    """Checks whether ``x`` commutes with every basis element."""
    ring = x.ring
    return all(not x.commutator(ring.basis(j)) for j in range(ring.rank))


class CentralityWitness:
    """Non-zero central elements ``x`` and ``y`` with ``a * x = y``.

    Attributes
    ----------
    a: :class:`~essring.RingElement`
        The challenged element.
    x: :class:`~essring.RingElement`
        A non-zero central element.
    y: :class:`~essring.RingElement`
        The product ``a * x``, non-zero and central.
    """

    __slots__ = ("a", "x", "y")

    def __init__(self, a: RingElement, x: RingElement, y: RingElement) -> None:
        self.a: RingElement = a
        self.x: RingElement = x
        self.y: RingElement = y

    def __repr__(self) -> str:
        return f"<CentralityWitness a={self.a} x={self.x} y={self.y}>"

    def revalidate(self) -> bool:
        """Checks every property of the witness from ring arithmetic alone."""
        return (
            bool(self.x)
            and bool(self.y)
            and self.a * self.x == self.y
            and is_central(self.x)
            and is_central(self.y)
        )

    def to_dict(self) -> dict[str, Any]:
        return {"a": self.a.to_list(), "x": self.x.to_list(), "y": self.y.to_list()}


def central_partner(a: RingElement, center: Optional[Submodule] = None) -> Optional[CentralityWitness]:
    """Finds a central ``x`` with ``a * x`` central and non-zero, if there is one.

    The multipliers ``c`` of the center generators with ``a * sum(c_k g_k)`` central
    form a submodule. ``a`` has a partner exactly when the map
    ``c -> a * sum(c_k g_k)`` does not vanish on it, which is decided on its
    generators.

    Parameters
    ----------
    a: :class:`~essring.RingElement`
        The element to challenge.
    center: Optional[:class:`~essring.Submodule`]
        The center of the ring, computed when not given.

    Returns
    -------
    Optional[:class:`CentralityWitness`]
        A witness, or ``None`` when ``a * C`` meets ``C`` only in zero.
    """
    ring = a.ring
    center = center if center is not None else center_basis(ring).sub
    spec = ring.scalar
    images = [ring.multiply(a.coords, g) for g in center.basis]
    solutions = preimage(images, center)
    for c in solutions.basis:
        y = vector_times(c, images, spec, ring.rank)
        if any(y):
            x = vector_times(c, center.basis, spec, ring.rank)
            return CentralityWitness(a, RingElement(ring, x), RingElement(ring, y))
    return None


class CEDecision:
    """The outcome of :func:`is_centrally_essential`.

    Attributes
    ----------
    verdict: :class:`~essring.Verdict`
        Whether the ring is centrally essential.
    method: :class:`~essring.DecisionMethod`
        The backend that produced the verdict.
    evidence: Optional[:class:`~essring.RingElement`]
        For :attr:`Verdict.no`, an element ``a`` with ``a * C`` meeting ``C`` only in
        zero. ``None`` otherwise, or when the socle criterion could not name one.
    reason: :class:`str`
        A one line explanation.
    """

    __slots__ = ("verdict", "method", "evidence", "reason")

    def __init__(
        self,
        verdict: Verdict,
        method: DecisionMethod,
        evidence: Optional[RingElement],
        reason: str,
    ) -> None:
        self.verdict: Verdict = verdict
        self.method: DecisionMethod = method
        self.evidence: Optional[RingElement] = evidence
        self.reason: str = reason

    def __repr__(self) -> str:
        return f"<CEDecision verdict={self.verdict.value!r} method={self.method.value!r}>"

    def revalidate(self) -> bool:
        """Checks the counterexample of a negative verdict again, from a freshly computed center."""
        if self.verdict is not Verdict.no or self.evidence is None:
            return True
        return bool(self.evidence) and central_partner(self.evidence) is None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "verdict": self.verdict.value,
            "method": self.method.value,
            "reason": self.reason,
        }
        if self.evidence is not None:
            data["evidence"] = self.evidence.to_list()
        return data


class WitnessFamily:
    """A family of rings with a closed form centrality witness for every non-zero element.

    Subclasses set :attr:`name` and implement :meth:`matches` and :meth:`witness`.
    Families are recognised from the multiplication table, so rings loaded from
    files are matched too.
    """

    name: str = "unnamed"

    def matches(self, p: RingPresentation) -> bool:
        raise NotImplementedError

    def witness(self, a: RingElement) -> CentralityWitness:
        raise NotImplementedError


_families: dict[str, WitnessFamily] = {}


def register_family(family: WitnessFamily) -> WitnessFamily:
    """Registers a witness family, replacing a family with the same name."""
    _families[family.name] = family
    return family


def find_family(p: RingPresentation) -> Optional[WitnessFamily]:
    """Returns the first registered family ``p`` belongs to."""
    for family in _families.values():
        if family.matches(p):
            return family
    return None


def _counterexample(p: RingPresentation, candidates: list[Vector], center: Submodule) -> Optional[RingElement]:
    for coords in candidates:
        if not any(coords) or center.contains(coords):
            continue
        a = RingElement(p, coords)
        if central_partner(a, center) is None:
            return a
    return None


def _free_element(p: RingPresentation, socle: Submodule, center: Submodule) -> RingElement:
    """Returns an element of ``socle`` whose multiples by the center meet the center in zero.

    ``socle`` is annihilated by the radical of the center, so it is a module over a
    commutative semisimple algebra and ``socle & center`` has a complement stable
    under the center. Starting from any basis vector outside the center, the part
    the center carries into ``socle & center`` is cut away with the idempotent of
    that part, found as the solution of a linear system.
    """
    spec = p.scalar
    n = p.rank
    inner = socle & center
    a = next(row for row in socle.basis if not center.contains(row))
    products = [p.multiply(a, g) for g in center.basis]
    stuck = [vector_times(coeffs, center.basis, spec, n) for coeffs in preimage(products, inner).basis]
    images = [p.multiply(a, k) for k in stuck]
    if any(any(image) for image in images):
        # solve a * e * k = a * k for e in the span of stuck
        rows = [[v for k in stuck for v in p.multiply(p.multiply(a, ki), k)] for ki in stuck]
        rows.append([v for image in images for v in image])
        solution = next(row for row in kernel(rows, spec, ncols=n * len(stuck)).basis if row[-1])
        scale = spec.inverse(-solution[-1])
        e = vector_times([value * scale for value in solution[:-1]], stuck, spec, n)
        a = spec.reduce(x - y for x, y in zip(a, p.multiply(a, e)))
    return RingElement(p, a)


def _socle_decision(p: RingPresentation, config: Config) -> CEDecision:
    spec = p.scalar
    n = p.rank
    center = center_basis(p).sub
    radical = center & jacobson_radical(p).jacobson
    blocks = [p.right_matrix(s) for s in radical.basis]
    socle = kernel(hstack(blocks, n), spec, ncols=n * len(blocks))
    logger.debug("Socle of %r over its center has rank %d", p.name, socle.rank)

    if socle <= center:
        return CEDecision(Verdict.yes, DecisionMethod.socle_criterion, None, "the socle over the center lies in the center")
    return CEDecision(
        Verdict.no,
        DecisionMethod.socle_criterion,
        _free_element(p, socle, center),
        "the socle over the center is not contained in the center",
    )


def _rationalized_decision(p: RingPresentation, config: Config) -> CEDecision:
    decision = _socle_decision(rationalize(p), config)
    evidence = None
    if decision.evidence is not None:
        denominator = 1
        for value in decision.evidence.coords:
            denominator = lcm(denominator, int(value.denominator))
        evidence = p.element([int((value * denominator).numerator) for value in decision.evidence.coords])
    return CEDecision(decision.verdict, DecisionMethod.rationalized, evidence, decision.reason + " of the rational algebra")


def _exhaustive_decision(p: RingPresentation, config: Config) -> CEDecision:
    if not p.is_finite:
        raise UnsupportedScalar("exhaustive decision", p.scalar)
    center = center_basis(p).sub
    checked = 0
    for a in representatives(p, cap=config.enumeration_cap):
        checked += 1
        if center.contains(a.coords):
            continue
        if central_partner(a, center) is None:
            logger.debug("Element %s of %r has no central partner", a, p.name)
            return CEDecision(Verdict.no, DecisionMethod.exhaustive, a, f"{a} has no non-zero central multiple")
    return CEDecision(
        Verdict.yes,
        DecisionMethod.exhaustive,
        None,
        f"all {checked} non-zero elements up to unit multiples have a non-zero central multiple",
    )


def _family_decision(p: RingPresentation) -> Optional[CEDecision]:
    family = find_family(p)
    if family is None:
        return None
    return CEDecision(Verdict.yes, DecisionMethod.witness_family, None, f"member of the {family.name!r} witness family")


def is_centrally_essential(
    p: RingPresentation,
    config: Optional[Config] = None,
    *,
    backend: Backend = "auto",
) -> CEDecision:
    """Decides whether every non-zero element has a non-zero central multiple that is central.

    With the ``auto`` backend:

    - finite rings with at most :attr:`Config.exhaustive_limit` elements challenge
      every element;
    - rational algebras and larger rings over a prime field compare the socle of
      the ring as a module over its center with the center;
    - integer rings are decided through their rational algebra;
    - other finite rings are answered by a registered witness family, refuted by
      sampling, or left :attr:`Verdict.unknown`.

    Parameters
    ----------
    p: :class:`~essring.RingPresentation`
        A validated presentation.
    config: Optional[:class:`~essring.Config`]
        The limits to use.
    backend: :class:`str`
        One of ``auto``, ``exhaustive``, ``socle`` or ``family``.

    Raises
    ------
    UnsupportedScalar
        A forced backend does not support the scalar domain.
    EnumerationCapExceeded
        The exhaustive backend was forced on a ring above the enumeration cap.
    ValueError
        The ``family`` backend was forced on a ring with no registered family.
    """
    config = config or Config()
    spec = p.scalar

    if backend == "exhaustive":
        return _exhaustive_decision(p, config)
    if backend == "socle":
        if spec.is_integer:
            return _rationalized_decision(p, config)
        if not spec.is_field:
            raise UnsupportedScalar("socle decision", spec)
        return _socle_decision(p, config)
    if backend == "family":
        decision = _family_decision(p)
        if decision is None:
            raise ValueError(f"{p.name!r} belongs to no registered witness family")
        return decision
    if backend != "auto":
        raise ValueError(f"unknown backend {backend!r}")

    size = p.size
    if size is not None and size <= config.exhaustive_limit:
        logger.debug("Deciding %r exhaustively over %d elements", p.name, size)
        return _exhaustive_decision(p, config)
    if spec.is_field:
        return _socle_decision(p, config)
    if spec.is_integer:
        return _rationalized_decision(p, config)

    decision = _family_decision(p)
    if decision is not None:
        return decision
    counterexample = refute_by_sampling(p, config.samples, config.seed)
    if counterexample is not None:
        return CEDecision(
            Verdict.no,
            DecisionMethod.sampling_refuted,
            counterexample,
            f"{counterexample} has no non-zero central multiple",
        )
    logger.warning("Central essentiality of %r is unknown: %d elements and no certificate", p.name, size)
    return CEDecision(
        Verdict.unknown,
        DecisionMethod.sampling_refuted,
        None,
        f"{size} elements exceed the exhaustive limit and no witness family matches",
    )


def essential_witness(a: RingElement) -> Optional[CentralityWitness]:
    """Returns non-zero central ``x`` and ``y`` with ``a * x = y``.

    A registered witness family answers in closed form, otherwise the exact
    per-element test of :func:`central_partner` is used.

    Returns
    -------
    Optional[:class:`CentralityWitness`]
        The witness, or ``None`` when ``a * C`` meets ``C`` only in zero, which
        proves the ring is not centrally essential.

    Raises
    ------
    ValueError
        ``a`` is zero.
    """
    if not a:
        raise ValueError("the zero element has no centrality witness")
    family = find_family(a.ring)
    if family is not None:
        return family.witness(a)
    return central_partner(a)


def refute_by_sampling(p: RingPresentation, trials: int, seed: int, *, bound: int = 3) -> Optional[RingElement]:
    """Looks for an element without a non-zero central multiple.

    The basis elements are challenged first, then ``trials`` random elements. Each
    challenge is exact, but finding nothing does not prove the ring is centrally
    essential.

    Parameters
    ----------
    p: :class:`~essring.RingPresentation`
        The ring.
    trials: :class:`int`
        How many random elements to challenge.
    seed: :class:`int`
        The seed of the random generator.
    bound: :class:`int`
        Coordinates of infinite rings are drawn from ``[-bound, bound]``.
    """
    center = center_basis(p).sub
    found = _counterexample(p, [p.unit(j) for j in range(p.rank)], center)
    if found is not None:
        return found

    rng = np.random.default_rng(seed)
    modulus = p.scalar.modulus
    for _ in range(trials):
        if modulus is not None:
            draw = rng.integers(0, modulus, size=p.rank)
        else:
            draw = rng.integers(-bound, bound + 1, size=p.rank)
        found = _counterexample(p, [p.scalar.vector(int(v) for v in draw)], center)
        if found is not None:
            return found
    return None
