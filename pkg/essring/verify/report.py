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
import time
from typing import Any, Callable, Optional, Sequence

from .._types import canonical_dumps
from ..center import CEDecision, is_centrally_essential
from ..config import Config
from ..constructions import is_noninvariant
from ..enums import CheckVerdict
from ..errors import EnumerationCapExceeded, IncompleteSearch
from ..ring import RingPresentation
from .checks import (
    check_corpus_tags,
    check_ideal_properties,
    check_noninvariant_family,
    check_prime_quotients,
    check_radical_commutativity,
    probe_essential_ideals,
)
from .corpus import Corpus, CorpusEntry
from .result import CheckResult

logger = logging.getLogger(__name__)

__all__ = (
    "Report",
    "run_report",
)

REPORT_VERSION = 1

Checker = Callable[[RingPresentation, Config, CEDecision], Sequence[CheckResult]]


class Report:
    """The results of verifying a corpus.

    .. container:: operations

        .. describe:: bool(x)

            Returns whether no check failed.

    Attributes
    ----------
    corpus: List[:class:`str`]
        The names of the verified rings, in order.
    results: List[:class:`CheckResult`]
        Every result, grouped by ring in corpus order.
    config: :class:`~essring.Config`
        The configuration the report was produced with.
    """

    __slots__ = ("corpus", "results", "config")

    def __init__(self, corpus: Sequence[str], results: Sequence[CheckResult], config: Config) -> None:
        self.corpus: list[str] = list(corpus)
        self.results: list[CheckResult] = list(results)
        self.config: Config = config

    def __repr__(self) -> str:
        return f"<Report rings={len(self.corpus)} summary={self.summary!r}>"

    def __bool__(self) -> bool:
        return self.exit_code == 0

    @property
    def summary(self) -> dict[str, int]:
        """Dict[:class:`str`, :class:`int`]: The number of results of each verdict."""
        counts = {verdict.value: 0 for verdict in CheckVerdict}
        for result in self.results:
            counts[result.verdict.value] += 1
        return counts

    @property
    def exit_code(self) -> int:
        """:class:`int`: ``1`` when any check failed, ``0`` otherwise."""
        return int(any(result.verdict is CheckVerdict.failed for result in self.results))

    def failures(self) -> list[CheckResult]:
        return [result for result in self.results if result.verdict is CheckVerdict.failed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "version": REPORT_VERSION,
            "corpus": list(self.corpus),
            "results": [result.to_dict() for result in self.results],
            "summary": self.summary,
        }

    def dumps(self) -> bytes:
        """Serializes the report as compact JSON.

        Without timings the output only depends on the corpus and the configuration.
        """
        return canonical_dumps(self.to_dict())


def _family_checks(ring: RingPresentation, config: Config, decision: CEDecision) -> list[CheckResult]:
    if not is_noninvariant(ring):
        return []
    return check_noninvariant_family(ring, config, decision=decision)


def _checkers(entry: CorpusEntry) -> list[tuple[str, Checker]]:
    return [
        ("corpus-tags", lambda r, c, d: [check_corpus_tags(r, entry.expected, d)]),
        ("ideal-properties", lambda r, c, d: check_ideal_properties(r, c, decision=d)),
        ("noninvariant-family", _family_checks),
        ("radical-commutativity", lambda r, c, d: check_radical_commutativity(r, c, decision=d)),
        ("prime-quotients", lambda r, c, d: check_prime_quotients(r, c, decision=d)),
        ("essential-ideals", lambda r, c, d: [probe_essential_ideals(r, c, decision=d)]),
    ]


def _run(name: str, checker: Checker, ring: RingPresentation, config: Config, decision: CEDecision) -> list[CheckResult]:
    start = time.perf_counter()
    try:
        results = list(checker(ring, config, decision))
    except (EnumerationCapExceeded, IncompleteSearch) as exc:
        logger.warning("Skipping %s on %r: %s", name, ring.name, exc)
        results = [CheckResult.skipped(name, ring.name, str(exc))]
    if config.timings:
        millis = int((time.perf_counter() - start) * 1000)
        for result in results:
            result.millis = millis
    return results


def run_report(corpus: Corpus, config: Optional[Config] = None) -> Report:
    """Runs every check over every ring of a corpus.

    The centrally essential decision of each ring is computed once and shared by
    its checks. The evidence of every failing result is rechecked, and the
    outcome is recorded in the evidence.

    Parameters
    ----------
    corpus: :class:`Corpus`
        The rings to verify.
    config: Optional[:class:`~essring.Config`]
        The limits, primes and seed to use.
    """
    config = config or Config()
    results: list[CheckResult] = []
    for entry in corpus:
        ring = entry.ring
        logger.info("Verifying %r", ring.name)
        decision = is_centrally_essential(ring, config)
        for name, checker in _checkers(entry):
            results += _run(name, checker, ring, config, decision)
        logger.info("Finished %r", ring.name)

    for result in results:
        if result.verdict is CheckVerdict.failed and not result.revalidate():
            logger.warning("Evidence of %s on %r did not revalidate", result.check_id, result.ring)
    return Report(corpus.names, results, config)
