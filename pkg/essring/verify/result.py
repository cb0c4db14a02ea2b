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
from typing import Any, Callable, Optional

from ..enums import CheckVerdict

logger = logging.getLogger(__name__)

__all__ = ("CheckResult",)

Recheck = Callable[[], bool]


class CheckResult:
    """The outcome of one check on one ring.

    A failing result carries evidence and a recheck that confirms the evidence from
    ring arithmetic alone, independently of the computation that produced it.

    Attributes
    ----------
    check_id: :class:`str`
        The check, e.g. ``minimal-right-ideals-central``.
    ring: :class:`str`
        The name of the ring.
    verdict: :class:`~essring.CheckVerdict`
        The outcome.
    evidence: Optional[Dict[:class:`str`, Any]]
        Witness or counterexample coordinates as decimal strings, or a reason.
    millis: Optional[:class:`int`]
        The duration, only recorded when timings are enabled.
    """

    __slots__ = ("check_id", "ring", "verdict", "evidence", "millis", "_recheck")

    def __init__(
        self,
        check_id: str,
        ring: str,
        verdict: CheckVerdict,
        evidence: Optional[dict[str, Any]] = None,
        *,
        recheck: Optional[Recheck] = None,
    ) -> None:
        self.check_id: str = check_id
        self.ring: str = ring
        self.verdict: CheckVerdict = verdict
        self.evidence: Optional[dict[str, Any]] = evidence
        self.millis: Optional[int] = None
        self._recheck: Optional[Recheck] = recheck

    def __repr__(self) -> str:
        return f"<CheckResult check_id={self.check_id!r} ring={self.ring!r} verdict={self.verdict.value!r}>"

    @classmethod
    def passed(cls, check_id: str, ring: str, evidence: Optional[dict[str, Any]] = None) -> CheckResult:
        return cls(check_id, ring, CheckVerdict.passed, evidence)

    @classmethod
    def failed(cls, check_id: str, ring: str, evidence: dict[str, Any], recheck: Recheck) -> CheckResult:
        return cls(check_id, ring, CheckVerdict.failed, evidence, recheck=recheck)

    @classmethod
    def vacuous(cls, check_id: str, ring: str, reason: str) -> CheckResult:
        return cls(check_id, ring, CheckVerdict.vacuous, {"reason": reason})

    @classmethod
    def skipped(cls, check_id: str, ring: str, reason: str) -> CheckResult:
        return cls(check_id, ring, CheckVerdict.skipped, {"reason": reason})

    @classmethod
    def verdict_of(
        cls,
        check_id: str,
        ring: str,
        ok: bool,
        evidence: dict[str, Any],
        recheck: Recheck,
    ) -> CheckResult:
        """Returns a passing or failing result depending on ``ok``."""
        if ok:
            return cls.passed(check_id, ring, evidence)
        return cls.failed(check_id, ring, evidence, recheck)

    def revalidate(self) -> Optional[bool]:
        """Rechecks the evidence of a failing result and records the outcome in it.

        Returns ``None`` for results that did not fail.
        """
        if self.verdict is not CheckVerdict.failed or self._recheck is None:
            return None
        try:
            confirmed = bool(self._recheck())
        except Exception:
            logger.exception("Rechecking %s on %s raised", self.check_id, self.ring)
            confirmed = False
        if self.evidence is not None:
            self.evidence["revalidated"] = confirmed
        return confirmed

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "check_id": self.check_id,
            "ring": self.ring,
            "verdict": self.verdict.value,
        }
        if self.evidence is not None:
            data["evidence"] = self.evidence
        if self.millis is not None:
            data["millis"] = self.millis
        return data
