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

import os
import logging
from typing import Any, Iterator, Optional, Sequence

from ..config import ConfigLoadStrategy, parse_document
from ..constructions import FamilySpec
from ..enums import Family
from ..errors import InvalidPresentation
from ..linalg.scalars import ScalarSpec
from ..ring import RingPresentation, validate
from ..utils import MISSING

logger = logging.getLogger(__name__)

__all__ = (
    "CorpusEntry",
    "Corpus",
    "default_corpus",
)

TAGS = ("centrally-essential", "commutative", "finite")


def _tags(data: Any, field: str) -> dict[str, Optional[bool]]:
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise InvalidPresentation(field, "expected an object of tags")
    tags: dict[str, Optional[bool]] = {}
    for key, value in data.items():
        if key not in TAGS:
            raise InvalidPresentation(f"{field}.{key}", f"unknown tag, expected one of {', '.join(TAGS)}")
        if value is not None and not isinstance(value, bool):
            raise InvalidPresentation(f"{field}.{key}", f"expected a boolean or null, got {value!r}")
        tags[key] = value
    return tags


class CorpusEntry:
    """A ring of the corpus with the tags it is expected to carry.

    Attributes
    ----------
    ring: :class:`~essring.RingPresentation`
        The ring.
    expected: Dict[:class:`str`, Optional[:class:`bool`]]
        The expected ``centrally-essential``, ``commutative`` and ``finite`` tags.
        Missing tags are not checked.
    spec: Optional[:class:`~essring.FamilySpec`]
        The family member the ring was built from, if any.
    """

    __slots__ = ("ring", "expected", "spec")

    def __init__(
        self,
        ring: RingPresentation,
        expected: Optional[dict[str, Optional[bool]]] = None,
        *,
        spec: Optional[FamilySpec] = None,
    ) -> None:
        self.ring: RingPresentation = ring
        self.expected: dict[str, Optional[bool]] = dict(expected or {})
        self.spec: Optional[FamilySpec] = spec

    def __repr__(self) -> str:
        return f"<CorpusEntry ring={self.ring.name!r} expected={self.expected!r}>"

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {}
        if self.spec is not None:
            data["family"] = self.spec.to_dict()
        else:
            data["ring"] = self.ring.to_dict()
        data["expect"] = dict(self.expected)
        return data


class Corpus:
    """An ordered collection of rings to verify.

    Every ring is validated when the corpus is built.

    .. container:: operations

        .. describe:: len(x)

            Returns the number of rings.

        .. describe:: iter(x)

            Iterates over the entries in order.

    Raises
    ------
    InvalidPresentation
        A ring fails validation.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[CorpusEntry] = ()) -> None:
        for index, entry in enumerate(entries):
            report = validate(entry.ring)
            if not report.passed:
                raise InvalidPresentation(
                    f"rings[{index}]",
                    f"{entry.ring.name!r} is not an associative ring with identity",
                )
        self.entries: tuple[CorpusEntry, ...] = tuple(entries)

    def __repr__(self) -> str:
        return f"<Corpus rings={len(self.entries)}>"

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CorpusEntry]:
        return iter(self.entries)

    @property
    def names(self) -> list[str]:
        return [entry.ring.name for entry in self.entries]

    def to_dict(self) -> dict[str, Any]:
        return {"rings": [entry.to_dict() for entry in self.entries]}

    @classmethod
    def from_dict(cls, data: Any, *, root: Optional[str] = None) -> Corpus:
        """Builds a corpus from a document.

        Each item of ``rings`` names its ring with exactly one of ``family`` (a
        family member), ``ring`` (an inline ring document) or ``path`` (a ring
        file, relative to ``root``), and may carry an ``expect`` object of tags.

        Raises
        ------
        InvalidPresentation
            The document or one of its rings is malformed.
        """
        if not isinstance(data, dict) or not isinstance(data.get("rings"), list):
            raise InvalidPresentation("rings", "expected an object with a 'rings' list")

        entries = []
        for index, item in enumerate(data["rings"]):
            field = f"rings[{index}]"
            if not isinstance(item, dict):
                raise InvalidPresentation(field, "expected an object")
            sources = [key for key in ("family", "ring", "path") if key in item]
            if len(sources) != 1:
                raise InvalidPresentation(field, "expected exactly one of 'family', 'ring' or 'path'")

            spec = None
            try:
                if "family" in item:
                    spec = FamilySpec.from_dict(item["family"])
                    ring = spec.build()
                elif "ring" in item:
                    ring = RingPresentation.from_dict(item["ring"])
                else:
                    path = str(item["path"])
                    ring = RingPresentation.load(os.path.join(root, path) if root else path)
            except InvalidPresentation as exc:
                raise InvalidPresentation(f"{field}.{exc.field}", exc.reason) from exc
            except (ValueError, OSError) as exc:
                raise InvalidPresentation(field, str(exc)) from exc

            entries.append(CorpusEntry(ring, _tags(item.get("expect"), f"{field}.expect"), spec=spec))
        logger.debug("Read a corpus of %d rings", len(entries))
        return cls(entries)

    @classmethod
    def load(
        cls,
        path: str | os.PathLike[str],
        *,
        strategy: ConfigLoadStrategy = MISSING,
    ) -> Corpus:
        """Loads a corpus file, JSON or YAML depending on its extension.

        Ring paths inside the file are relative to its directory.

        Raises
        ------
        ValueError
            The strategy is not supported or its requirements are not installed.
        InvalidPresentation
            The document or one of its rings is malformed.
        """
        if strategy is MISSING:
            strategy = str(path).split(".")[-1]  # type: ignore

        with open(path, "rb") as file:
            raw = file.read()
        try:
            data = parse_document(raw, strategy)
        except ValueError as exc:
            if strategy != "json":
                raise
            raise InvalidPresentation("<document>", str(exc)) from exc
        return cls.from_dict(data, root=os.path.dirname(os.fspath(path)))


def _entry(spec: FamilySpec, ce: bool, commutative: bool, finite: bool) -> CorpusEntry:
    tags = {"centrally-essential": ce, "commutative": commutative, "finite": finite}
    return CorpusEntry(spec.build(), tags, spec=spec)


def default_corpus() -> Corpus:
    """Returns the corpus verified by default.

    - the noninvariant rings of rank 7 to 12 over the integers, and of rank 7
      modulo 2 and 3;
    - the Grassmann algebras of a 3-dimensional space over the fields of order 3
      and 2, and of a plane over the field of order 3, which is not centrally
      essential;
    - the 2 by 2 full and upper triangular matrix rings over small fields, none of
      them centrally essential;
    - commutative controls.
    """
    integers = ScalarSpec.integers()
    f2, f3 = ScalarSpec.mod(2), ScalarSpec.mod(3)

    entries = [_entry(FamilySpec(Family.noninvariant, n=n, scalar=integers), True, False, False) for n in range(7, 13)]
    entries += [
        _entry(FamilySpec(Family.noninvariant, n=7, scalar=f2), True, False, True),
        _entry(FamilySpec(Family.noninvariant, n=7, scalar=f3), True, False, True),
        _entry(FamilySpec(Family.grassmann, d=3, p=3), True, False, True),
        _entry(FamilySpec(Family.grassmann, d=3, p=2), True, True, True),
        _entry(FamilySpec(Family.grassmann, d=2, p=3), False, False, True),
        _entry(FamilySpec(Family.full_matrix, k=2, scalar=f2), False, False, True),
        _entry(FamilySpec(Family.triangular, k=2, scalar=f2), False, False, True),
        _entry(FamilySpec(Family.triangular, k=2, scalar=f3), False, False, True),
        _entry(FamilySpec(Family.commutative_control, kind="truncated", k=3, scalar=integers), True, True, False),
        _entry(FamilySpec(Family.commutative_control, kind="truncated", k=3, scalar=f2), True, True, True),
        _entry(FamilySpec(Family.commutative_control, kind="cyclic", k=3, scalar=f3), True, True, True),
    ]
    return Corpus(entries)
