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
import sys
from typing import IO, Any, NoReturn, Optional

import click

from ._types import canonical_dumps, loads
from .center import center_basis, is_centrally_essential
from .config import Config
from .constructions import FamilySpec
from .enums import Family, Verdict
from .errors import EssringError, InvalidPresentation
from .ideals.ideal import IdealRep, is_two_sided
from .ideals.lattice import cap_complement, closure, is_closed, is_essential
from .linalg.scalars import ScalarSpec
from .ring import RingPresentation, quotient_mod, validate
from .verify.corpus import Corpus, default_corpus
from .verify.report import run_report

logger = logging.getLogger(__name__)

__all__ = ("main",)

EXIT_FAILURE = 1
EXIT_USAGE = 2

# hidden spellings of family names
FAMILY_ALIASES = {"example24": Family.noninvariant.value}


class _FamilyChoice(click.Choice):
    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Any:
        return super().convert(FAMILY_ALIASES.get(value, value), param, ctx)


def _fail(exc: BaseException) -> NoReturn:
    if isinstance(exc, InvalidPresentation):
        message = f"invalid input at {exc.field}: {exc.reason}"
    else:
        message = str(exc)
    click.echo(f"error: {message}", err=True)
    raise SystemExit(EXIT_USAGE)


def _emit(out: IO[bytes], data: Any) -> None:
    out.write(canonical_dumps(data) + b"\n")


def _read_ring(source: IO[bytes]) -> RingPresentation:
    try:
        return RingPresentation.loads(source.read())
    except EssringError as exc:
        _fail(exc)


def _config(ctx: click.Context) -> Config:
    return ctx.find_object(Config) or Config()


@click.group()
@click.option("-v", "--verbose", count=True, help="Log more, repeat for debug output.")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    help="A JSON or YAML configuration file.",
)
@click.option("--cap", type=int, default=None, help="The largest number of elements a scan may visit.")
@click.option("--seed", type=int, default=None, help="The seed of every random draw.")
@click.option("--primes", type=str, default=None, help="Comma separated primes for finite quotients.")
@click.version_option(package_name="essring")
@click.pass_context
def main(
    ctx: click.Context,
    verbose: int,
    config_path: Optional[str],
    cap: Optional[int],
    seed: Optional[int],
    primes: Optional[str],
) -> None:
    """Computations in centrally essential rings of finite rank.

    Rings are read from JSON files, or from standard input when the file is -.
    Results are written to standard output.
    """
    level = logging.WARNING - 10 * min(verbose, 2)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        base = Config.load(config_path) if config_path else Config()
        ctx.obj = base.replace(enumeration_cap=cap, seed=seed, primes=primes)
    except (EssringError, ValueError, OSError) as exc:
        _fail(exc)


@main.command()
@click.argument("family", type=_FamilyChoice([family.value for family in Family]))
@click.option("--n", type=int, default=None, help="Rank of a noninvariant ring.")
@click.option("--d", type=int, default=None, help="Dimension of the space of a Grassmann algebra.")
@click.option("--p", type=int, default=None, help="Field order of a Grassmann algebra.")
@click.option("--k", type=int, default=None, help="Matrix size, or rank of a commutative control.")
@click.option("--kind", type=click.Choice(["truncated", "cyclic"]), default=None)
@click.option("--scalar", type=str, default="int", show_default=True, help="int, rat, mod:M or FP.")
@click.option("--out", type=click.File("wb"), default="-")
def make(
    family: str,
    n: Optional[int],
    d: Optional[int],
    p: Optional[int],
    k: Optional[int],
    kind: Optional[str],
    scalar: str,
    out: IO[bytes],
) -> None:
    """Writes a member of a ring family."""
    try:
        spec = FamilySpec(Family(family), n=n, d=d, p=p, k=k, kind=kind, scalar=ScalarSpec.parse(scalar))
        ring = spec.build()
    except (EssringError, ValueError) as exc:
        _fail(exc)
    out.write(ring.dumps() + b"\n")


@main.command(name="validate")
@click.argument("ring", type=click.File("rb"))
def validate_command(ring: IO[bytes]) -> None:
    """Checks associativity and the identity of a ring."""
    presentation = _read_ring(ring)
    report = validate(presentation)
    _emit(click.get_binary_stream("stdout"), report.to_dict(presentation.scalar))
    if not report.passed:
        raise SystemExit(EXIT_FAILURE)


@main.command()
@click.argument("ring", type=click.File("rb"))
def center(ring: IO[bytes]) -> None:
    """Writes a basis of the center of a ring."""
    presentation = _read_ring(ring)
    basis = center_basis(presentation)
    fmt = presentation.scalar.format_value
    _emit(
        click.get_binary_stream("stdout"),
        {
            "ring": presentation.name,
            "rank": basis.rank,
            "basis": [[fmt(v) for v in row] for row in basis.sub.basis],
        },
    )


@main.group()
def check() -> None:
    """Decides properties of a ring."""


@check.command(name="ce")
@click.argument("ring", type=click.File("rb"))
@click.option(
    "--backend",
    type=click.Choice(["auto", "exhaustive", "socle", "family"]),
    default="auto",
    show_default=True,
)
@click.pass_context
def check_ce(ctx: click.Context, ring: IO[bytes], backend: str) -> None:
    """Decides whether a ring is centrally essential.

    Exits with 1 unless the verdict is yes.
    """
    presentation = _read_ring(ring)
    try:
        decision = is_centrally_essential(presentation, _config(ctx), backend=backend)  # type: ignore
    except (EssringError, ValueError) as exc:
        _fail(exc)
    _emit(click.get_binary_stream("stdout"), {"ring": presentation.name, **decision.to_dict()})
    if decision.verdict is not Verdict.yes:
        raise SystemExit(EXIT_FAILURE)


@main.command()
@click.argument("ring", type=click.File("rb"))
@click.option("--spec", "spec", type=click.File("rb"), required=True, help="An ideal document.")
@click.option("--two-sided", "query", flag_value="two-sided", help="Whether the ideal is two-sided.")
@click.option("--closed", "query", flag_value="closed", help="Whether the ideal is closed.")
@click.option("--essential", "query", flag_value="essential", help="Whether the ideal is essential.")
@click.option("--complement", "query", flag_value="complement", help="Writes a complement of the ideal.")
@click.option("--closure", "query", flag_value="closure", help="Writes a closed ideal the ideal is essential in.")
@click.pass_context
def ideal(ctx: click.Context, ring: IO[bytes], spec: IO[bytes], query: Optional[str]) -> None:
    """Answers a question about the ideal generated by a document.

    The yes or no questions exit with 1 when the answer is no.
    """
    if query is None:
        _fail(click.UsageError("one of --two-sided, --closed, --essential, --complement or --closure is required"))
    presentation = _read_ring(ring)
    config = _config(ctx)
    try:
        generated = IdealRep.from_dict(presentation, loads(spec.read()))
        data: dict[str, Any] = {"ring": presentation.name, "ideal": generated.to_dict()}
        answer = True
        if query == "two-sided":
            answer, witness = is_two_sided(generated)
            if witness is not None:
                data["witness"] = [witness[0].to_list(), witness[1].to_list()]
        elif query == "closed":
            answer = is_closed(generated)
        elif query == "essential":
            answer = is_essential(generated)
        elif query == "complement":
            data["complement"] = cap_complement(generated, config=config).to_dict()
        else:
            data["closure"] = closure(generated, config=config).to_dict()
    except (EssringError, ValueError) as exc:
        _fail(exc)

    if query in ("two-sided", "closed", "essential"):
        data[query.replace("-", "_")] = answer
    _emit(click.get_binary_stream("stdout"), data)
    if not answer:
        raise SystemExit(EXIT_FAILURE)


@main.command()
@click.argument("ring", type=click.File("rb"))
@click.option("-p", "modulus", type=int, required=True, help="The modulus to reduce by.")
@click.option("--out", type=click.File("wb"), default="-")
def quotient(ring: IO[bytes], modulus: int, out: IO[bytes]) -> None:
    """Writes the reduction of a ring modulo an integer."""
    presentation = _read_ring(ring)
    try:
        reduced = quotient_mod(presentation, modulus).target
    except (EssringError, ValueError) as exc:
        _fail(exc)
    out.write(reduced.dumps() + b"\n")


@main.command(name="verify-corpus")
@click.option(
    "--corpus",
    "corpus_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="A corpus file, defaults to the built-in corpus.",
)
@click.option("--out", type=click.File("wb"), default="-")
@click.option("--samples", type=int, default=None, help="How many random generator sets the probe draws.")
@click.option("--timings", is_flag=True, default=False, help="Record durations, the report is then not reproducible.")
@click.pass_context
def verify_corpus(
    ctx: click.Context,
    corpus_path: Optional[str],
    out: IO[bytes],
    samples: Optional[int],
    timings: bool,
) -> None:
    """Runs every check over a corpus and writes the report.

    Exits with 1 when any check fails.
    """
    try:
        config = _config(ctx).replace(samples=samples, timings=timings or None)
        corpus = Corpus.load(corpus_path) if corpus_path else default_corpus()
    except (EssringError, ValueError, OSError) as exc:
        _fail(exc)

    report = run_report(corpus, config)
    out.write(report.dumps() + b"\n")
    logger.info("Summary: %s", report.summary)
    raise SystemExit(report.exit_code)


main.add_command(
    click.Command(
        "verify-paper",
        callback=verify_corpus.callback,
        params=verify_corpus.params,
        help=verify_corpus.help,
        hidden=True,
    )
)
