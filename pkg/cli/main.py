"""
Command-line driver: pullbacks, degrees, degree sequences, wedges,
obstruction sets and the replication suite.

Exit codes: 0 ok, 1 failed checks, 2 parse, usage or configuration errors,
3 any other library error.
"""

import argparse
import asyncio
import logging
import re
import sys
from fractions import Fraction

from pydantic import ValidationError

from src.birmap.builtins import parse_map, parse_word
from src.config import SessionConfig, load_config
from src.core.context import suite_context
from src.core.errors import CremonaError, ExpressionSyntaxError, UnknownSymbol
from src.dforms.forms import Aff1Form, Proj1Form, dehomogenize, homogenize_affine, wedge11
from src.exactalg.symbols import STANDARD, SymbolTable
from src.expr.parser import parse_form, parse_polynomial
from src.foliation.foliation import Foliation, degree_sequence, from_form, pullback_foliation
from src.paperlab import families
from src.paperlab.families import family
from src.paperlab.obstructions import monomial_div_obstructions
from src.paperlab.registry import Report, build_report, run_suite
from src.paperlab.sampling import foliation_sample, stream

logger = logging.getLogger("cli")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_MATH = 0, 1, 2, 3

# generic members of the ρ-, τ- and Ψ-numerically invariant families
SAMPLES = {
    "omega_rho_sample": "omega3",
    "omega_tau_sample": "omega6",
    "omega_psi_sample": "omega9",
}

GEOMETRIC_RE = re.compile(r"\b[xyz]\b")


class Session:
    """Config and symbol table shared by one command."""

    def __init__(self, config: SessionConfig):
        self.config = config
        self.table: SymbolTable = STANDARD.with_parameters(config.PARAMETERS)

    def spell(self, value) -> str:
        text = str(value)
        if self.config.GEOMETRIC == "XYZ":
            return GEOMETRIC_RE.sub(lambda m: m.group(0).upper(), text)
        return text

    def form(self, text: str) -> Proj1Form:
        """A family name, a named sample, or a `[A, B, C]` / `{a, b}` literal."""
        text = text.strip()
        if text in SAMPLES:
            rng = stream(self.config.SAMPLE_SEED, text)
            foliation, values = foliation_sample(rng, SAMPLES[text])
            logger.debug("%s drawn at %s", text, {k: str(v) for k, v in values.items()})
            return foliation.form.embed(self.table)
        if text in families.names():
            return family(text, table=self.table).form
        parsed = parse_form(text, self.table)
        return homogenize_affine(parsed) if isinstance(parsed, Aff1Form) else parsed

    def map_args(self, text: str | None) -> dict[str, Fraction]:
        if not text or text.strip().lower() == "none":
            return {}
        args = {}
        for item in text.split(","):
            name, sep, value = item.partition("=")
            if not sep:
                raise ExpressionSyntaxError(f"map argument {item!r} is not NAME=VALUE")
            try:
                args[name.strip()] = Fraction(value.strip())
            except ValueError:
                raise ExpressionSyntaxError(f"map argument {item!r} is not rational") from None
        return args

    def show(self, foliation: Foliation, affine: bool = False) -> str:
        form = dehomogenize(foliation.form) if affine else foliation.form
        lines = [self.spell(form), f"degree {foliation.degree}"]
        if not foliation.complete:
            lines.append("(reduced by monomial content only)")
        return "\n".join(lines)


def cmd_pullback(session: Session, args) -> int:
    phi = parse_map(args.map, session.table, session.map_args(args.map_arg))
    pulled = pullback_foliation(phi, from_form(session.form(args.form)))
    print(session.show(pulled, args.affine))
    return EXIT_OK


def cmd_degree(session: Session, args) -> int:
    print(session.show(from_form(session.form(args.form)), args.affine))
    return EXIT_OK


def cmd_degseq(session: Session, args) -> int:
    word = parse_word(args.word, session.table)
    sequence = degree_sequence(word, from_form(session.form(args.form)))
    print(" ".join(str(d) for d in sequence))
    return EXIT_OK


def cmd_wedge(session: Session, args) -> int:
    print(session.spell(wedge11(session.form(args.form), session.form(args.form2))))
    return EXIT_OK


def cmd_obstruct(session: Session, args) -> int:
    phi = parse_map(args.map, session.table, session.map_args(args.map_arg))
    obstructions = monomial_div_obstructions(
        phi, session.form(args.form), parse_polynomial(args.monomial, session.table)
    )
    for member in obstructions:
        print(session.spell(member))
    if obstructions.is_empty():
        print("EMPTY")
    return EXIT_OK


async def run_verify(config: SessionConfig) -> Report:
    async with suite_context(config) as ctx:
        results = await run_suite(ctx, config.CHECK_FILTER)
        return build_report(ctx, results)


def cmd_verify(session: Session, args) -> int:
    report = asyncio.run(run_verify(session.config))
    if session.config.FORMAT == "structured":
        print(report.model_dump_json(indent=2))
    else:
        for result in report.checks:
            print(f"{result.status.upper():<14} {result.check_id:<36} {result.paper_ref}")
        print(
            f"\n{report.pass_count} passed, {report.fail_count} failed, "
            f"{report.evidence_count} evidence-only (seed {report.seed})"
        )
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", default=None, help="log at DEBUG")
    common.add_argument(
        "--param", action="append", default=None, metavar="NAME",
        help="declare an extra parameter symbol (repeatable, or comma separated)",
    )
    common.add_argument(
        "--seed", type=int, default=None, help="seed of the sampled checks and named samples"
    )

    parser = argparse.ArgumentParser(prog="cremona", description=__doc__.splitlines()[1])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("pullback", cmd_pullback, "reduced pullback of a form and its degree")
    p.add_argument("--map", required=True)
    p.add_argument("--map-arg", default=None, help="NAME=VALUE,... for parametric builtins")
    p.add_argument("--form", required=True)
    p.add_argument("--affine", action="store_true", help="print {a, b} in the chart z = 1")

    p = add("degree", cmd_degree, "degree of the foliation defined by a form")
    p.add_argument("--form", required=True)
    p.add_argument("--affine", action="store_true")

    p = add("degseq", cmd_degseq, "degrees along a factorization word")
    p.add_argument("--word", required=True)
    p.add_argument("--form", required=True)

    p = add("wedge", cmd_wedge, "wedge of two projective 1-forms")
    p.add_argument("--form", required=True)
    p.add_argument("--form2", required=True)

    p = add("obstruct", cmd_obstruct, "conditions for a monomial to divide a pullback")
    p.add_argument("--map", required=True)
    p.add_argument("--map-arg", default=None)
    p.add_argument("--monomial", required=True)
    p.add_argument("--form", default="general")

    p = add("verify", cmd_verify, "run the replication suite")
    p.add_argument("--filter", default=None, help="check id prefix or glob")
    p.add_argument("--format", choices=("text", "structured"), default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--no-timings", action="store_true", help="write elapsed_ms as 0")
    return parser


def session_config(args) -> SessionConfig:
    return load_config(
        SEED=args.seed,
        DEBUG=args.verbose,
        PARAMETERS=",".join(args.param) if args.param else None,
        FORMAT=getattr(args, "format", None),
        CHECK_FILTER=getattr(args, "filter", None),
        WORKERS=getattr(args, "workers", None),
        REPORT_TIMINGS=False if getattr(args, "no_timings", False) else None,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = session_config(args)
    except ValidationError as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if config.DEBUG else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(Session(config), args)
    except (ExpressionSyntaxError, UnknownSymbol) as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_USAGE
    except CremonaError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
