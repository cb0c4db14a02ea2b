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
from typing import Any, Iterable, Literal

from sympy import isprime

from ._types import loads
from .errors import ConfigError
from .utils import MISSING

ConfigLoadStrategy = Literal["json", "yaml", "yml"]
logger = logging.getLogger(__name__)

__all__ = ("Config",)

DEFAULT_ENUMERATION_CAP = 2**24
DEFAULT_EXHAUSTIVE_LIMIT = 3**8
DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)
DEFAULT_SEED = 20240


class Config:
    """Represents the tunable limits of the deciders and the verification harness.

    Every value has a default, so ``Config()`` is a complete configuration. Reports
    produced with the same configuration are byte-identical.

    Attributes
    ----------
    enumeration_cap: :class:`int`
        The largest number of elements an exhaustive scan may visit. Defaults to ``2 ** 24``.
    exhaustive_limit: :class:`int`
        The largest finite ring the centrally essential decider settles by challenging
        every element. Larger rings over a prime field use the socle criterion.
        Defaults to ``3 ** 8``.
    primes: Tuple[:class:`int`, ...]
        The primes used for finite quotients of integer rings.
    samples: :class:`int`
        How many random generator sets the probes draw.
    witness_trials: :class:`int`
        How many random elements the witness family checks revalidate.
    seed: :class:`int`
        The seed of every random draw.
    power_cap: :class:`int`
        The longest chain of ideal powers computed before giving up.
    timings: :class:`bool`
        Whether reports record durations. Reports with durations are not reproducible.
    """

    __slots__ = (
        "enumeration_cap",
        "exhaustive_limit",
        "primes",
        "samples",
        "witness_trials",
        "seed",
        "power_cap",
        "timings",
    )

    def __init__(
        self,
        *,
        enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
        exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
        primes: Iterable[int] = DEFAULT_PRIMES,
        samples: int = 500,
        witness_trials: int = 1000,
        seed: int = DEFAULT_SEED,
        power_cap: int = 64,
        timings: bool = False,
    ) -> None:
        self.enumeration_cap: int = _positive("enumeration_cap", enumeration_cap)
        self.exhaustive_limit: int = _positive("exhaustive_limit", exhaustive_limit)
        self.primes: tuple[int, ...] = _primes(primes)
        self.samples: int = _non_negative("samples", samples)
        self.witness_trials: int = _non_negative("witness_trials", witness_trials)
        self.seed: int = int(seed)
        self.power_cap: int = _positive("power_cap", power_cap)
        self.timings: bool = bool(timings)

    def __repr__(self) -> str:
        attrs = " ".join(f"{name}={getattr(self, name)!r}" for name in self.__slots__)
        return f"<Config {attrs}>"

    def replace(self, **overrides: Any) -> Config:
        """Returns a copy of this configuration with some values replaced.

        ``None`` values are ignored, which lets command line flags that were not
        given fall through to the file or default values.
        """
        values = self.to_dict()
        values.update({key: value for key, value in overrides.items() if value is not None})
        return Config.from_dict(values)

    def to_dict(self) -> dict[str, Any]:
        return {name: getattr(self, name) for name in self.__slots__}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Config:
        """Builds a configuration from a mapping.

        Unknown keys are discarded with a warning.

        Raises
        ------
        ConfigError
            A value was rejected.
        """
        if not isinstance(data, dict):
            raise ConfigError("<root>", f"expected a mapping, got {data.__class__.__name__!r}")

        known: dict[str, Any] = {}
        for key, value in data.items():
            name = str(key).replace("-", "_")
            if name not in cls.__slots__:
                logger.warning("Unknown configuration key %r. Discarding.", key)
                continue
            known[name] = value
        try:
            return cls(**known)
        except TypeError as exc:
            raise ConfigError("<root>", str(exc)) from exc

    @classmethod
    def load(
        cls,
        path: str | os.PathLike[str],
        *,
        strategy: ConfigLoadStrategy = MISSING,
    ) -> Config:
        """Loads a configuration file.

        Parameters
        ----------
        path: Union[:class:`str`, :class:`os.PathLike`]
            The path to the file to read.
        strategy: :class:`str`
            How to parse the file, defaults to the file extension.

        Raises
        ------
        ValueError
            The strategy is not supported or its requirements are not installed.
        ConfigError
            A value was rejected.
        """
        if strategy is MISSING:
            strategy = str(path).split(".")[-1]  # type: ignore

        with open(path, "rb") as file:
            raw = file.read()

        data = parse_document(raw, strategy)
        return cls.from_dict(data or {})


def parse_document(raw: bytes, strategy: str) -> Any:
    if strategy == "json":
        return loads(raw)
    if strategy in ("yaml", "yml"):
        try:
            import yaml  # pyright: ignore[reportMissingModuleSource]
        except ImportError:
            raise ValueError(
                "Cannot read y(a)ml files because the requirements are not installed, "
                'you can install them by using "pip install essring[yaml]"'
            )
        return yaml.safe_load(raw)
    raise ValueError(f"Not supported configuration strategy provided: {strategy!r}.")


def _positive(key: str, value: Any) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ConfigError(key, f"expected a positive integer, got {value!r}")
    return value


def _non_negative(key: str, value: Any) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ConfigError(key, f"expected a non-negative integer, got {value!r}")
    return value


def _primes(values: Iterable[Any]) -> tuple[int, ...]:
    if isinstance(values, str):
        values = [part for part in values.split(",") if part.strip()]
    primes: list[int] = []
    for value in values:
        try:
            number = int(value)
        except (TypeError, ValueError):
            raise ConfigError("primes", f"{value!r} is not an integer")
        if not isprime(number):
            raise ConfigError("primes", f"{number} is not a prime number")
        primes.append(number)
    return tuple(primes)
