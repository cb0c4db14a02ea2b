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
from typing import Any, Mapping, Optional

import numpy as np

from ..center import CEDecision, center_basis, find_family, is_central, is_centrally_essential
from ..config import Config
from ..constructions import is_noninvariant
from ..enums import Side, Verdict
from ..errors import EnumerationCapExceeded
from ..ideals.ideal import IdealRep, generate, is_right_regular, is_two_sided, quotient_algebra
from ..ideals.idempotents import Idempotent, idempotents, lift_idempotent
from ..ideals.lattice import (
    cap_complement,
    closure,
    intersect_powers,
    is_closed,
    is_essential,
    is_essential_in,
    is_quasi_invariant,
    is_right_invariant,
    maximal_right_ideals,
    minimal_right_ideals,
)
from ..ideals.radical import jacobson_radical, nilpotency_index, nilradical_tffr, socle_right
from ..linalg.submodule import Submodule, is_pure
from ..ring import (
    RingElement,
    RingPresentation,
    elements,
    is_commutative,
    opposite,
    quotient_mod,
    rationalize,
    validate,
)
from .result import CheckResult

logger = logging.getLogger(__name__)

__all__ = (
    "check_corpus_tags",
    "check_ideal_properties",
    "check_noninvariant_family",
    "check_radical_commutativity",
    "check_prime_quotients",
    "probe_essential_ideals",
)

IDEAL_CHECKS = (
    "non-two-sided-maximal-meets-center-powers",
    "minimal-right-ideals-central",
    "minimal-right-ideals-two-sided",
    "closed-regular-two-sided",
    "regular-extension-essential",
)
RADICAL_CHECKS = (
    "nilradical-commutative-quotient",
    "radical-commutative-quotient",
    "quotients-quasi-invariant",
    "maximal-right-ideals-stable",
    "semiprime-commutative",
)
QUOTIENT_CHECKS = (
    "quotient-centrally-essential",
    "radical-nilpotent",
    "idempotents-central",
    "maximal-ideals-from-idempotents",
    "idempotent-lifting",
)


def _generators(ring: RingPresentation, sub: Submodule) -> list[list[str]]:
    fmt = ring.scalar.format_value
    return [[fmt(v) for v in row] for row in sub.basis]


def _decide(ring: RingPresentation, config: Config, decision: Optional[CEDecision]) -> CEDecision:
    return decision if decision is not None else is_centrally_essential(ring, config)


def check_corpus_tags(
    ring: RingPresentation,
    expected: Mapping[str, Optional[bool]],
    decision: CEDecision,
) -> CheckResult:
    """Compares the expected tags of a corpus ring with what the deciders find.

    The tags are ``centrally-essential``, ``commutative`` and ``finite``. A tag
    set to ``None`` is not checked, an unknown decision never matches.
    """
    observed: dict[str, Optional[bool]] = {
        "centrally-essential": None if decision.verdict is Verdict.unknown else decision.verdict is Verdict.yes,
        "commutative": is_commutative(ring)[0],
        "finite": ring.is_finite,
    }
    mismatches = {
        tag: {"expected": value, "observed": observed.get(tag)}
        for tag, value in expected.items()
        if value is not None and observed.get(tag) != value
    }
    evidence: dict[str, Any] = {"observed": observed, "decision": decision.to_dict()}
    if mismatches:
        evidence["mismatches"] = mismatches

    def recheck() -> bool:
        fresh = {"commutative": is_commutative(ring)[0], "finite": ring.is_finite}
        fresh_mismatch = any(
            expected.get(tag) is not None and expected.get(tag) != value for tag, value in fresh.items()
        )
        return fresh_mismatch or "centrally-essential" in mismatches and decision.revalidate()

    return CheckResult.verdict_of("corpus-tags", ring.name, not mismatches, evidence, recheck)


def _maximal_meets_center(ring: RingPresentation, config: Config) -> CheckResult:
    check_id = IDEAL_CHECKS[0]
    center = center_basis(ring).sub
    offending = [m for m in maximal_right_ideals(ring, config=config) if not is_two_sided(m)[0]]
    if not offending:
        return CheckResult.vacuous(check_id, ring.name, "every maximal right ideal is two-sided")

    for m in offending:
        meet = center & intersect_powers(m, config.power_cap).submodule
        if meet.is_zero():
            return CheckResult.failed(
                check_id,
                ring.name,
                {"ideal": _generators(ring, m.sub)},
                lambda m=m: (center_basis(ring).sub & intersect_powers(m, config.power_cap).submodule).is_zero(),
            )
    return CheckResult.passed(check_id, ring.name, {"ideals": len(offending)})


def _minimal_ideals(ring: RingPresentation, config: Config) -> list[CheckResult]:
    center = center_basis(ring).sub
    minimal = minimal_right_ideals(ring, config=config)
    outside = next((m for m in minimal if not m.sub <= center), None)
    one_sided = next((m for m in minimal if not is_two_sided(m)[0]), None)

    evidence: dict[str, Any] = {"ideals": len(minimal)}
    results = [
        CheckResult.verdict_of(
            IDEAL_CHECKS[1],
            ring.name,
            outside is None,
            evidence if outside is None else {"ideal": _generators(ring, outside.sub)},
            lambda: outside is not None and not outside.sub <= center_basis(ring).sub,
        ),
        CheckResult.verdict_of(
            IDEAL_CHECKS[2],
            ring.name,
            one_sided is None,
            dict(evidence) if one_sided is None else {"ideal": _generators(ring, one_sided.sub)},
            lambda: one_sided is not None and not is_two_sided(one_sided)[0],
        ),
    ]
    return results


def _closed_samples(ring: RingPresentation, config: Config) -> list[IdealRep]:
    found: dict[Submodule, IdealRep] = {}
    whole = IdealRep.whole(ring, Side.right)
    found[whole.sub] = whole
    for j in range(ring.rank):
        base = generate(ring, Side.right, [ring.unit(j)])
        for ideal in (closure(base, config=config), cap_complement(base, config=config)):
            found.setdefault(ideal.sub, ideal)
    return list(found.values())


def _regular_element(ideal: IdealRep) -> Optional[RingElement]:
    ring = ideal.ring
    candidates = list(ideal.sub.basis)
    if candidates:
        total = candidates[0]
        for row in candidates[1:]:
            total = ring.scalar.reduce(x + y for x, y in zip(total, row))
        candidates.append(total)
    if ideal.sub.contains(ring.one):
        candidates.insert(0, ring.one)
    for coords in candidates:
        element = RingElement(ring, coords)
        if element and is_right_regular(element):
            return element
    return None


def _regular_closed_ideals(ring: RingPresentation, config: Config) -> list[CheckResult]:
    with_regular = []
    for ideal in _closed_samples(ring, config):
        element = _regular_element(ideal)
        if element is not None:
            with_regular.append((ideal, element))
    if not with_regular:
        reason = "no sampled closed right ideal contains a right regular element"
        return [CheckResult.vacuous(IDEAL_CHECKS[3], ring.name, reason), CheckResult.vacuous(IDEAL_CHECKS[4], ring.name, reason)]

    results = []
    one_sided = next(((i, r) for i, r in with_regular if not is_two_sided(i)[0]), None)
    if one_sided is None:
        results.append(CheckResult.passed(IDEAL_CHECKS[3], ring.name, {"ideals": len(with_regular)}))
    else:
        ideal, element = one_sided
        results.append(
            CheckResult.failed(
                IDEAL_CHECKS[3],
                ring.name,
                {"ideal": _generators(ring, ideal.sub), "regular": element.to_list()},
                lambda: is_right_regular(element) and not is_two_sided(ideal)[0] and is_closed(ideal),
            )
        )

    failure = None
    for ideal, _ in with_regular:
        for r in range(ring.rank):
            moved = [ring.multiply(ring.unit(r), x) for x in ideal.sub.basis]
            extension = IdealRep(ring, Side.right, Submodule(ring.rank, ring.scalar, list(ideal.sub.basis) + moved))
            if not is_essential_in(ideal, extension):
                failure = (ideal, extension, r)
                break
        if failure is not None:
            break
    if failure is None:
        results.append(CheckResult.passed(IDEAL_CHECKS[4], ring.name, {"ideals": len(with_regular)}))
    else:
        ideal, extension, r = failure
        results.append(
            CheckResult.failed(
                IDEAL_CHECKS[4],
                ring.name,
                {"ideal": _generators(ring, ideal.sub), "basis": r},
                lambda: not is_essential_in(ideal, extension),
            )
        )
    return results


def check_ideal_properties(
    ring: RingPresentation,
    config: Optional[Config] = None,
    *,
    decision: Optional[CEDecision] = None,
) -> list[CheckResult]:
    """Checks the ideal properties of a finite centrally essential ring.

    - every maximal right ideal that is not two-sided meets the center inside the
      intersection of its powers, vacuous when all of them are two-sided;
    - every minimal right ideal lies in the center and is two-sided;
    - sampled closed right ideals containing a right regular element are two-sided
      and essential in ``r * J + J`` for every basis element ``r``.

    Every check is skipped on infinite rings and on rings that are not centrally
    essential.
    """
    config = config or Config()
    if not ring.is_finite:
        return [CheckResult.skipped(c, ring.name, "the ring is infinite") for c in IDEAL_CHECKS]
    decision = _decide(ring, config, decision)
    if decision.verdict is not Verdict.yes:
        return [CheckResult.skipped(c, ring.name, "the ring is not centrally essential") for c in IDEAL_CHECKS]

    try:
        results = [_maximal_meets_center(ring, config)]
        results += _minimal_ideals(ring, config)
        results += _regular_closed_ideals(ring, config)
    except EnumerationCapExceeded as exc:
        logger.info("Skipping the ideal checks of %r: %s", ring.name, exc)
        return [CheckResult.skipped(c, ring.name, str(exc)) for c in IDEAL_CHECKS]
    return results


def _family_side_conditions(ring: RingPresentation, side: Side, config: Config) -> tuple[dict[str, bool], dict[str, Any]]:
    n = ring.rank
    generator = 2 if side is Side.right else 1
    expected = Submodule(n, ring.scalar, [ring.unit(generator), ring.unit(n - 1)])

    ideal = generate(ring, side, [ring.unit(generator)])
    two_sided, witness = is_two_sided(ideal)
    complement = cap_complement(ideal, config=config)
    extension = closure(ideal, config=config)
    outside = next((row for row in extension.sub.basis if not ideal.sub.contains(row)), None)

    conditions = {
        "generated": ideal.sub == expected,
        "one-sided": not two_sided,
        "complement-contains": ring.basis(3) in complement,
        "complement-disjoint": (complement.sub & ideal.sub).is_zero(),
        "closure-closed": is_closed(extension),
        "closure-essential": is_essential_in(ideal, extension),
        "closure-one-sided": not is_two_sided(extension)[0],
    }
    evidence: dict[str, Any] = {
        "ideal": _generators(ring, ideal.sub),
        "complement": _generators(ring, complement.sub),
        "closure": _generators(ring, extension.sub),
        "literal_closed": is_closed(ideal),
    }
    if witness is not None:
        evidence["witness"] = [witness[0].to_list(), witness[1].to_list()]
    if outside is not None:
        evidence["extension"] = [ring.scalar.format_value(v) for v in outside]
    return conditions, evidence


def _additive_group(ring: RingPresentation) -> dict[str, bool]:
    # conditions for a ring on the free group Z ** n
    return {
        "laws": validate(ring).passed,
        "identity_primitive": math.gcd(*ring.one) == 1,
        "center_pure": is_pure(center_basis(ring).sub),
    }


def check_noninvariant_family(
    ring: RingPresentation,
    config: Optional[Config] = None,
    *,
    decision: Optional[CEDecision] = None,
) -> list[CheckResult]:
    """Checks the structure of a ring built by :func:`~essring.constructions.noninvariant`.

    The ring is non-commutative with center spanned by ``1`` and ``u_4, ..., u_n``,
    centrally essential, and the right ideal generated by ``u_3`` and the left ideal
    generated by ``u_2`` are one-sided. Their complements contain ``u_4`` and their
    closures are closed one-sided ideals, so the ring is neither right nor left
    invariant.

    Raises
    ------
    ValueError
        The ring does not belong to the family.
    """
    if not is_noninvariant(ring):
        raise ValueError(f"{ring.name!r} is not a member of the noninvariant family")
    config = config or Config()
    decision = _decide(ring, config, decision)
    n = ring.rank
    name = ring.name
    a, b, c = ring.basis(1), ring.basis(2), ring.basis(3)
    results = []

    commutes, _ = is_commutative(ring)
    bracket = a.commutator(b)
    results.append(
        CheckResult.verdict_of(
            "family-noncommutative",
            name,
            not commutes and bracket == c,
            {"pair": [1, 2], "commutator": bracket.to_list()},
            lambda: is_commutative(ring)[0] or a.commutator(b) != c,
        )
    )

    expected_center = Submodule(n, ring.scalar, [ring.unit(0)] + [ring.unit(k) for k in range(3, n)])
    center = center_basis(ring)
    results.append(
        CheckResult.verdict_of(
            "family-center",
            name,
            center.sub == expected_center,
            {"rank": center.rank, "center": _generators(ring, center.sub)},
            lambda: any(not is_central(RingElement(ring, row)) for row in expected_center.basis)
            or not center_basis(ring).sub <= expected_center,
        )
    )

    family = find_family(ring)
    checked = 0
    invalid: Optional[RingElement] = None
    if family is not None:
        rng = np.random.default_rng(config.seed)
        for _ in range(config.witness_trials):
            draw = [int(v) for v in rng.integers(-5, 6, size=n)]
            if not any(draw):
                continue
            element = ring.element(draw)
            checked += 1
            if not family.witness(element).revalidate():
                invalid = element
                break
    evidence: dict[str, Any] = {"decision": decision.to_dict(), "witnesses": checked}
    if invalid is not None:
        evidence["invalid_witness"] = invalid.to_list()
    results.append(
        CheckResult.verdict_of(
            "family-centrally-essential",
            name,
            decision.verdict is Verdict.yes and invalid is None,
            evidence,
            lambda: (invalid is not None and family is not None and not family.witness(invalid).revalidate())
            or (decision.verdict is Verdict.no and decision.revalidate()),
        )
    )

    for side, check_id in ((Side.right, "family-right-ideal"), (Side.left, "family-left-ideal")):
        conditions, side_evidence = _family_side_conditions(ring, side, config)
        failing = [key for key, value in conditions.items() if not value]
        if failing:
            side_evidence["failed"] = failing
        results.append(
            CheckResult.verdict_of(
                check_id,
                name,
                not failing,
                side_evidence,
                lambda side=side: not all(_family_side_conditions(ring, side, config)[0].values()),
            )
        )

    right = generate(ring, Side.right, [ring.unit(2)])
    left = generate(ring, Side.left, [ring.unit(1)])
    invariant_evidence: dict[str, Any] = {}
    ok = not is_two_sided(right)[0] and not is_two_sided(left)[0]
    size = ring.size
    if size is not None and size <= config.exhaustive_limit:
        right_invariant, right_witness = is_right_invariant(ring, config=config)
        left_invariant, left_witness = is_right_invariant(opposite(ring), config=config)
        ok = ok and not right_invariant and not left_invariant
        if right_witness is not None:
            invariant_evidence["right_witness"] = right_witness.to_list()
        if left_witness is not None:
            invariant_evidence["left_witness"] = left_witness.to_list()
    results.append(
        CheckResult.verdict_of(
            "family-not-invariant",
            name,
            ok,
            invariant_evidence,
            lambda: is_two_sided(right)[0] or is_two_sided(left)[0],
        )
    )

    if ring.scalar.is_integer:
        conditions = _additive_group(ring)
        results.append(
            CheckResult.verdict_of(
                "free-additive-group",
                name,
                all(conditions.values()),
                {"rank": n, **conditions},
                lambda: not all(_additive_group(ring).values()),
            )
        )
    else:
        results.append(CheckResult.skipped("free-additive-group", name, "the ring is not over the integers"))
    return results


def _commutator_outside(ring: RingPresentation, sub: Submodule) -> Optional[dict[str, Any]]:
    for i in range(ring.rank):
        for j in range(i + 1, ring.rank):
            bracket = ring.basis(i).commutator(ring.basis(j))
            if not sub.contains(bracket.coords):
                return {"pair": [i, j], "commutator": bracket.to_list()}
    return None


def check_radical_commutativity(
    ring: RingPresentation,
    config: Optional[Config] = None,
    *,
    decision: Optional[CEDecision] = None,
) -> list[CheckResult]:
    """Checks the commutativity modulo the radicals of a centrally essential integer ring.

    - every basis commutator lies in the nilradical, and in the radical of the
      rational algebra, so both quotients are commutative;
    - the reductions modulo the first three configured primes are quasi-invariant
      and ``r * M <= M`` for their maximal right ideals ``M`` and basis elements ``r``;
    - a ring with zero nilradical is commutative, vacuous otherwise.
    """
    config = config or Config()
    name = ring.name
    if not ring.scalar.is_integer:
        return [CheckResult.skipped(c, name, "the ring is not over the integers") for c in RADICAL_CHECKS]
    decision = _decide(ring, config, decision)
    if decision.verdict is not Verdict.yes:
        return [CheckResult.skipped(c, name, "the ring is not centrally essential") for c in RADICAL_CHECKS]

    results = []
    nil = nilradical_tffr(ring)
    outside = _commutator_outside(ring, nil)
    results.append(
        CheckResult.verdict_of(
            RADICAL_CHECKS[0],
            name,
            outside is None,
            outside or {"nilradical": _generators(ring, nil)},
            lambda: _commutator_outside(ring, nilradical_tffr(ring)) is not None,
        )
    )

    rational = rationalize(ring)
    radical = jacobson_radical(rational).jacobson
    outside = _commutator_outside(rational, radical)
    results.append(
        CheckResult.verdict_of(
            RADICAL_CHECKS[1],
            name,
            outside is None,
            outside or {"radical_rank": radical.rank},
            lambda: _commutator_outside(rational, jacobson_radical(rational).jacobson) is not None,
        )
    )

    primes = config.primes[:3]
    quasi_failure: Optional[tuple[int, IdealRep]] = None
    stable_failure: Optional[tuple[int, IdealRep]] = None
    counted = 0
    for p in primes:
        reduced = quotient_mod(ring, p).target
        quasi, ideal = is_quasi_invariant(reduced, config=config)
        if not quasi and quasi_failure is None and ideal is not None:
            quasi_failure = (p, ideal)
        for m in maximal_right_ideals(reduced, config=config):
            counted += 1
            if stable_failure is None and not is_two_sided(m)[0]:
                stable_failure = (p, m)

    def _describe(failure: tuple[int, IdealRep]) -> dict[str, Any]:
        p, ideal = failure
        return {"prime": p, "side": ideal.side.value, "ideal": _generators(ideal.ring, ideal.sub)}

    results.append(
        CheckResult.verdict_of(
            RADICAL_CHECKS[2],
            name,
            quasi_failure is None,
            _describe(quasi_failure) if quasi_failure else {"primes": list(primes)},
            lambda: quasi_failure is not None and not is_quasi_invariant(quasi_failure[1].ring, config=config)[0],
        )
    )
    results.append(
        CheckResult.verdict_of(
            RADICAL_CHECKS[3],
            name,
            stable_failure is None,
            _describe(stable_failure) if stable_failure else {"primes": list(primes), "ideals": counted},
            lambda: stable_failure is not None and not is_two_sided(stable_failure[1])[0],
        )
    )

    if nil.is_zero():
        commutes, pair = is_commutative(ring)
        results.append(
            CheckResult.verdict_of(
                RADICAL_CHECKS[4],
                name,
                commutes,
                {"pair": list(pair)} if pair else {},
                lambda: not is_commutative(ring)[0],
            )
        )
    else:
        results.append(CheckResult.vacuous(RADICAL_CHECKS[4], name, "the nilradical is non-zero"))
    return results


def _maximal_from_idempotents(name: str, reduced: RingPresentation, p: int, config: Config) -> CheckResult:
    check_id = f"maximal-ideals-from-idempotents[{p}]"
    radical = jacobson_radical(reduced).jacobson
    quotient = quotient_algebra(reduced, radical)
    pullbacks = set()
    for e in elements(quotient.ring, cap=config.enumeration_cap):
        if e * e == e and e != quotient.ring.identity and is_central(e):
            gens = list(radical.basis) + [quotient.lift(e).coords]
            pullbacks.add(generate(reduced, Side.right, gens).sub)

    maximal = maximal_right_ideals(reduced, config=config)
    missing = next((m for m in maximal if m.sub not in pullbacks), None)
    evidence: dict[str, Any] = {
        "maximal": len(maximal),
        "local": len(maximal) == 1 and maximal[0].sub == radical,
    }
    if missing is not None:
        evidence["ideal"] = _generators(reduced, missing.sub)
    return CheckResult.verdict_of(
        check_id,
        name,
        missing is None,
        evidence,
        lambda: missing is not None and not is_two_sided(missing)[0],
    )


def _lifts(ring: RingPresentation, p: int, found: list[Idempotent], config: Config) -> Optional[RingElement]:
    # Lift through the nilpotent ideal p * R of R / p ** 2 R and reduce back.
    square = quotient_mod(ring, p * p).target
    nil = Submodule(ring.rank, square.scalar, [tuple(p if k == i else 0 for k in range(ring.rank)) for i in range(ring.rank)])
    down = quotient_mod(square, p)
    for idempotent in found:
        lifted = lift_idempotent(square.element([int(v) for v in idempotent.e.coords]), nil, cap=config.power_cap)
        if down(lifted.e).coords != idempotent.e.coords or lift_idempotent(lifted.e, nil).e != lifted.e:
            return idempotent.e
    return None


def check_prime_quotients(
    ring: RingPresentation,
    config: Optional[Config] = None,
    *,
    decision: Optional[CEDecision] = None,
) -> list[CheckResult]:
    """Checks the finite quotients of a centrally essential integer ring.

    The center is checked to be a pure subgroup. For every configured prime ``p``
    the quotient ``R / pR`` must be centrally essential, have a nilpotent radical
    and only central idempotents. Its maximal right ideals must be the pullbacks
    of the ideals cut out by central idempotents of the semisimple quotient, and
    its idempotents must lift to ``R / p ** 2 R``.

    Checks that need an enumeration larger than the configured cap are skipped.
    """
    config = config or Config()
    name = ring.name
    if not ring.scalar.is_integer:
        reason = "the ring is not over the integers"
        return [CheckResult.skipped(c, name, reason) for c in ("center-pure",) + QUOTIENT_CHECKS]

    center = center_basis(ring)
    results = [
        CheckResult.verdict_of(
            "center-pure",
            name,
            is_pure(center.sub),
            {"rank": center.rank},
            lambda: not is_pure(center_basis(ring).sub),
        )
    ]
    decision = _decide(ring, config, decision)
    if decision.verdict is not Verdict.yes:
        reason = "the ring is not centrally essential"
        return results + [CheckResult.skipped(c, name, reason) for c in QUOTIENT_CHECKS]

    for p in config.primes:
        logger.debug("Checking the quotient of %r modulo %d", name, p)
        reduced = quotient_mod(ring, p).target
        quotient_decision = is_centrally_essential(reduced, config)
        results.append(
            CheckResult.verdict_of(
                f"quotient-centrally-essential[{p}]",
                name,
                quotient_decision.verdict is Verdict.yes,
                quotient_decision.to_dict(),
                lambda d=quotient_decision: d.verdict is Verdict.no and d.revalidate(),
            )
        )

        radical = jacobson_radical(reduced)
        results.append(
            CheckResult.verdict_of(
                f"radical-nilpotent[{p}]",
                name,
                radical.nilpotency_index is not None,
                {"index": radical.nilpotency_index, "rank": radical.jacobson.rank},
                lambda r=reduced, j=radical.jacobson: nilpotency_index(r, j, cap=config.power_cap) is None,
            )
        )

        try:
            found = idempotents(reduced, cap=config.enumeration_cap)
        except EnumerationCapExceeded as exc:
            for check_id in QUOTIENT_CHECKS[2:]:
                results.append(CheckResult.skipped(f"{check_id}[{p}]", name, str(exc)))
            continue

        noncentral = next((e for e in found if not e.central), None)
        results.append(
            CheckResult.verdict_of(
                f"idempotents-central[{p}]",
                name,
                noncentral is None,
                {"idempotents": len(found)} if noncentral is None else {"idempotent": noncentral.e.to_list()},
                lambda e=noncentral: e is not None and not Idempotent(e.e).central,
            )
        )

        try:
            maximal = _maximal_from_idempotents(name, reduced, p, config)
        except EnumerationCapExceeded as exc:
            maximal = CheckResult.skipped(f"maximal-ideals-from-idempotents[{p}]", name, str(exc))
        results.append(maximal)

        stuck = _lifts(ring, p, found, config)
        results.append(
            CheckResult.verdict_of(
                f"idempotent-lifting[{p}]",
                name,
                stuck is None,
                {"idempotents": len(found)} if stuck is None else {"idempotent": stuck.to_list()},
                lambda r=ring, q=p, f=found: _lifts(r, q, f, config) is not None,
            )
        )
    return results


def probe_essential_ideals(
    ring: RingPresentation,
    config: Optional[Config] = None,
    *,
    decision: Optional[CEDecision] = None,
) -> CheckResult:
    """Looks for an essential right ideal that is not two-sided.

    Random generator sets are drawn from a finite centrally essential ring, or from
    the quotient of an integer ring modulo the first configured prime. A right
    ideal is essential exactly when it contains the right socle. Passing only
    means that no candidate was found among the samples.
    """
    config = config or Config()
    check_id = "essential-ideals-two-sided"
    target = ring
    if ring.scalar.is_integer:
        if not config.primes:
            return CheckResult.skipped(check_id, ring.name, "no primes are configured")
        target = quotient_mod(ring, config.primes[0]).target
    elif not ring.is_finite:
        return CheckResult.skipped(check_id, ring.name, "the ring is infinite")

    decision = _decide(ring, config, decision)
    if decision.verdict is not Verdict.yes:
        return CheckResult.skipped(check_id, ring.name, "the ring is not centrally essential")

    socle = socle_right(target)
    modulus = target.scalar.modulus
    rng = np.random.default_rng(config.seed)
    essential = 0
    candidate: Optional[IdealRep] = None
    for _ in range(config.samples):
        count = int(rng.integers(1, 3))
        gens = [[int(v) for v in rng.integers(0, modulus, size=target.rank)] for _ in range(count)]
        ideal = generate(target, Side.right, gens)
        if not socle <= ideal.sub:
            continue
        essential += 1
        if not is_two_sided(ideal)[0]:
            candidate = ideal
            break

    evidence: dict[str, Any] = {"ring": target.name, "samples": config.samples, "essential": essential}
    if candidate is not None:
        evidence["ideal"] = _generators(target, candidate.sub)
    return CheckResult.verdict_of(
        check_id,
        ring.name,
        candidate is None,
        evidence,
        lambda: candidate is not None and is_essential(candidate) and not is_two_sided(candidate)[0],
    )
