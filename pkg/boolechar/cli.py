"""Command-line front end.

Subcommands:
    verify <suite>    run a verification suite and emit its report
    eval <op>         evaluate one library operation
    list-suites       show the registered suites
    list-chars        show the characters of a modulus

Reports and values go to stdout; logs and provenance lines go to stderr.
Exit codes are 0 (pass), 1 (fail) and 2 (configuration or domain error).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Callable

from pydantic import ValidationError

from boolechar import __version__
from boolechar.arith.characters import (
    CharacterError,
    DirichletCharacter,
    enumerate_characters,
    find_character,
    primitive_characters,
    to_json,
)
from boolechar.arith.eulerfun import (
    SIDE_RIGHT,
    EulerFunctionError,
    bernoulli_spec,
    char_euler_at_zero,
    char_periodic_eval,
    euler_spec,
    magnitude_bound,
    periodic_eval,
)
from boolechar.arith.numeric import NumericError, hurwitz_zeta
from boolechar.formulas.gammastar import (
    GammaStarQuery,
    gamma_star,
    log_mean_defect,
    psi_star,
    stirling_log_gamma_star,
)
from boolechar.formulas.genfun import gf_coefficients, gf_expected
from boolechar.formulas.hbsums import (
    HardyBerndtError,
    HBParams,
    S1,
    S2,
    S_chi,
    euler_integral_closed,
    hardy_S,
    recip1_defect,
    recip2_defect,
)
from boolechar.formulas.lfunc import (
    LFunctionError,
    LQuery,
    ell,
    ell_cot,
    ell_cot_reflection,
    ell_derivative0,
    ell_partial,
    ell_prime_zero,
    ell_special_negint,
    ell_zero,
)
from boolechar.formulas.summation import (
    SummationError,
    boole_sum,
    char_boole_sum,
    char_euler_maclaurin,
    make_family,
)
from boolechar.shared.config import RuntimeConfig, load_runtime_config
from boolechar.shared.constants import (
    CONVENTION_PROOF,
    EXIT_CONFIG_ERROR,
    EXIT_PASS,
    GAMMA_ROUTE_QUOTIENT,
    KIND_BERNOULLI,
    KIND_EULER,
    ROUTE_INTEGRAL,
    ROUTE_SERIES,
    VALID_CONVENTIONS,
    VALID_FAMILIES,
    VALID_FORMATS,
    VALID_GAMMA_ROUTES,
    VALID_KERNELS,
    VALID_PROFILES,
    VALID_ROUTES,
)
from boolechar.verify.models import SuiteConfig
from boolechar.verify.registry import SuiteError
from boolechar.verify.report import format_value
from boolechar.verify.runner import exit_status, run_suite, write_report
from boolechar.verify.suites import default_registry

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
ROUTE_AUTO = "auto"

DOMAIN_ERRORS: tuple[type[Exception], ...] = (
    CharacterError,
    EulerFunctionError,
    HardyBerndtError,
    LFunctionError,
    NumericError,
    SummationError,
    ValueError,
    ZeroDivisionError,
)


class UsageError(Exception):
    """Raised when an eval operation is missing a parameter."""


# Argument parsing helpers


def parse_int_list(text: str) -> tuple[int, ...]:
    """'1..4' -> (1, 2, 3, 4); '3,5' -> (3, 5); pieces may be mixed."""
    values: list[int] = []
    try:
        for piece in text.split(","):
            piece = piece.strip()
            if ".." in piece:
                low, high = piece.split("..", 1)
                values.extend(range(int(low), int(high) + 1))
            elif piece:
                values.append(int(piece))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid integer list '{text}'") from exc
    if not values:
        raise argparse.ArgumentTypeError(f"empty integer list '{text}'")
    return tuple(values)


def parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid complex number '{text}'") from exc


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid rational number '{text}'") from exc


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ", ".join(f"--{name.replace('_', '-')}" for name in missing)
        raise UsageError(f"'{args.op}' needs {flags}")


def _character(args: argparse.Namespace) -> DirichletCharacter:
    _need(args, "modulus")
    return find_character(args.modulus, args.char)


def _real_if(value: complex, chi: DirichletCharacter, s: complex = 0j) -> complex | float:
    return value.real if chi.is_real and complex(s).imag == 0 else value


# eval operations: each returns (value, provenance)

EvalResult = tuple[Any, str]


def _eval_ell(args: argparse.Namespace) -> EvalResult:
    _need(args, "s")
    chi = _character(args)
    a = float(args.a or 0)
    method = args.method
    if method == ROUTE_AUTO:
        method = ROUTE_SERIES if args.s.real > 0 else ROUTE_INTEGRAL
    value = ell(LQuery(s=args.s, a=a, character=chi, method=method, order=args.order))
    return _real_if(value, chi, args.s), f"route={method} character={chi.label}"


def _eval_ell_partial(args: argparse.Namespace) -> EvalResult:
    _need(args, "x", "s")
    chi = _character(args)
    value = ell_partial(float(args.x), args.s, float(args.a or 0), chi, args.order)
    return _real_if(value, chi, args.s), f"route=integral-representation character={chi.label}"


def _eval_ell_special(args: argparse.Namespace) -> EvalResult:
    _need(args, "p")
    chi = _character(args)
    a = args.a if args.a is not None else Fraction(0)
    return ell_special_negint(args.p, a, chi), f"route=euler-polynomial character={chi.label}"


def _eval_ell_zero(args: argparse.Namespace) -> EvalResult:
    chi = _character(args)
    return ell_zero(chi), f"route=boundary-value character={chi.label}"


def _eval_ell_prime_zero(args: argparse.Namespace) -> EvalResult:
    chi = _character(args)
    return ell_prime_zero(chi), f"route=log-gamma character={chi.label}"


def _eval_ell_derivative0(args: argparse.Namespace) -> EvalResult:
    _need(args, "a")
    chi = _character(args)
    report = ell_derivative0(float(args.a), chi)
    values = {"logGamma": report.log_gamma_route, "integral": report.integral_route}
    return values, f"route=log-gamma,integral character={chi.label}"


def _eval_ell_cot(args: argparse.Namespace) -> EvalResult:
    _need(args, "m")
    chi = _character(args)
    return ell_cot(args.m, chi), f"route=cot-derivatives character={chi.label}"


def _eval_ell_cot_reflection(args: argparse.Namespace) -> EvalResult:
    _need(args, "a")
    chi = _character(args)
    return ell_cot_reflection(float(args.a), chi), f"route=cot character={chi.label}"


def _eval_char_periodic(kind: str) -> Callable[[argparse.Namespace], EvalResult]:
    def evaluate(args: argparse.Namespace) -> EvalResult:
        _need(args, "m", "x")
        chi = _character(args)
        make = euler_spec if kind == KIND_EULER else bernoulli_spec
        value = char_periodic_eval(make(args.m, chi), args.x, args.side)
        exactness = "exact" if chi.is_real else "complex-double"
        return value, f"route={exactness} side={args.side} character={chi.label}"

    return evaluate


def _eval_periodic(kind: str) -> Callable[[argparse.Namespace], EvalResult]:
    def evaluate(args: argparse.Namespace) -> EvalResult:
        _need(args, "n", "x")
        return periodic_eval(kind, args.n, args.x, args.side), f"route=exact side={args.side}"

    return evaluate


def _eval_boundary(args: argparse.Namespace) -> EvalResult:
    _need(args, "m")
    chi = _character(args)
    return char_euler_at_zero(args.m, chi), f"route=exact character={chi.label}"


def _eval_bound(args: argparse.Namespace) -> EvalResult:
    _need(args, "l", "modulus")
    return magnitude_bound(args.l, args.modulus), "route=zeta-bound"


def _eval_hurwitz_zeta(args: argparse.Namespace) -> EvalResult:
    _need(args, "s", "a")
    return hurwitz_zeta(args.s, float(args.a)), "route=euler-maclaurin"


def _eval_gamma_star(args: argparse.Namespace) -> EvalResult:
    _need(args, "a")
    chi = _character(args)
    query = GammaStarQuery(float(args.a), chi, args.route, args.terms or 100_000)
    return gamma_star(query), f"route={args.route} character={chi.label}"


def _eval_psi_star(args: argparse.Namespace) -> EvalResult:
    _need(args, "a")
    chi = _character(args)
    return psi_star(float(args.a), chi, args.m or 0), f"route=polygamma character={chi.label}"


def _eval_stirling(args: argparse.Namespace) -> EvalResult:
    _need(args, "a", "order")
    chi = _character(args)
    report = stirling_log_gamma_star(float(args.a), chi, args.order)
    values = {"value": report.value, "errorProxy": report.error_proxy}
    return values, f"route=asymptotic character={chi.label}"


def _eval_log_mean(args: argparse.Namespace) -> EvalResult:
    _need(args, "t", "order")
    chi = _character(args)
    return log_mean_defect(args.t, chi, args.order), f"route=asymptotic character={chi.label}"


def _eval_gf(args: argparse.Namespace) -> EvalResult:
    _need(args, "kernel", "order")
    chi = _character(args)
    coefficients = gf_coefficients(args.kernel, chi, args.order)
    expected = gf_expected(args.kernel, chi, args.order)
    values = {f"c{j}": (c, e) for j, (c, e) in enumerate(zip(coefficients, expected))}
    return values, f"route=fft kernel={args.kernel} character={chi.label}"


def _hb_params(args: argparse.Namespace) -> HBParams:
    _need(args, "p", "b", "c")
    return HBParams(args.p, args.b, args.c, _character(args), args.convention)


def _eval_hardy_s(args: argparse.Namespace) -> EvalResult:
    _need(args, "b", "c")
    return hardy_S(args.b, args.c), "route=exact"


def _eval_s_chi(args: argparse.Namespace) -> EvalResult:
    result = S_chi(_hb_params(args))
    values = {"definition": result.definition, "modified": result.modified}
    return values, "route=exact-if-gaussian"


def _eval_s1(args: argparse.Namespace) -> EvalResult:
    return S1(_hb_params(args)), f"route=exact-if-gaussian convention={args.convention}"


def _eval_s2(args: argparse.Namespace) -> EvalResult:
    return S2(_hb_params(args)), f"route=exact-if-gaussian convention={args.convention}"


def _eval_recip(check: Callable[[HBParams], Any]) -> Callable[[argparse.Namespace], EvalResult]:
    def evaluate(args: argparse.Namespace) -> EvalResult:
        report = check(_hb_params(args))
        values = {"lhs": report.lhs, "rhs": report.rhs, "defect": report.defect, **report.meta}
        return values, f"route=exact-if-gaussian convention={report.convention}"

    return evaluate


def _eval_integral(args: argparse.Namespace) -> EvalResult:
    _need(args, "l", "p", "b", "c")
    report = euler_integral_closed(args.l, args.p, args.b, args.c, _character(args))
    values = {"quadrature": report.value, "closedForm": report.closed_form}
    return values, f"route=quadrature branch={report.branch}"


def _family(args: argparse.Namespace) -> Any:
    _need(args, "family", "parameter", "alpha", "beta", "l")
    return make_family(args.family, args.parameter)


def _summation_values(report: Any) -> dict[str, Any]:
    return {"lhs": report.lhs, "rhs": report.rhs, "defect": report.defect}


def _eval_boole(args: argparse.Namespace) -> EvalResult:
    f = _family(args)
    report = boole_sum(f, int(args.alpha), int(args.beta), args.l)
    return _summation_values(report), "route=quadrature"


def _eval_cem(args: argparse.Namespace) -> EvalResult:
    f = _family(args)
    chi = _character(args)
    report = char_euler_maclaurin(chi, f, args.alpha, args.beta, args.l)
    return _summation_values(report), f"route=quadrature character={chi.label}"


def _eval_char_boole(args: argparse.Namespace) -> EvalResult:
    f = _family(args)
    chi = _character(args)
    report = char_boole_sum(chi, f, args.alpha, args.beta, args.l)
    return _summation_values(report), f"route=quadrature character={chi.label}"


EVAL_OPS: dict[str, Callable[[argparse.Namespace], EvalResult]] = {
    "ell": _eval_ell,
    "ell-partial": _eval_ell_partial,
    "ell-special": _eval_ell_special,
    "ell-zero": _eval_ell_zero,
    "ell-prime-zero": _eval_ell_prime_zero,
    "ell-derivative0": _eval_ell_derivative0,
    "ell-cot": _eval_ell_cot,
    "ell-cot-reflection": _eval_ell_cot_reflection,
    "char-euler": _eval_char_periodic(KIND_EULER),
    "char-bernoulli": _eval_char_periodic(KIND_BERNOULLI),
    "periodic-euler": _eval_periodic(KIND_EULER),
    "periodic-bernoulli": _eval_periodic(KIND_BERNOULLI),
    "boundary": _eval_boundary,
    "bound": _eval_bound,
    "hurwitz-zeta": _eval_hurwitz_zeta,
    "gamma-star": _eval_gamma_star,
    "psi-star": _eval_psi_star,
    "stirling": _eval_stirling,
    "log-mean": _eval_log_mean,
    "gf": _eval_gf,
    "hardy-s": _eval_hardy_s,
    "s-chi": _eval_s_chi,
    "s1": _eval_s1,
    "s2": _eval_s2,
    "recip1": _eval_recip(recip1_defect),
    "recip2": _eval_recip(recip2_defect),
    "integral": _eval_integral,
    "boole": _eval_boole,
    "cem": _eval_cem,
    "char-boole": _eval_char_boole,
}


def render_value(value: Any) -> str:
    """Mappings one "key: value" line each, pairs joined by tabs."""
    if isinstance(value, dict):
        return "\n".join(f"{key}: {render_value(item)}" for key, item in value.items())
    if isinstance(value, tuple | list):
        return "\t".join(format_value(item) for item in value)
    return format_value(value)


# Subcommands


def _provenance(text: str) -> None:
    print(f"boolechar {__version__}: {text}", file=sys.stderr)


def cmd_verify(args: argparse.Namespace, runtime: RuntimeConfig) -> int:
    try:
        config = SuiteConfig(
            suite=args.suite,
            profile=args.profile or runtime.profile,
            moduli=args.moduli,
            p_values=args.p_values,
            pmax=args.pmax,
            bc_max=args.bcmax,
            orders=args.orders,
            tol=args.tol,
            jobs=args.jobs or runtime.default_jobs,
            output_format=args.format or runtime.output_format,
            out=args.out,
        )
    except ValidationError as exc:
        print(f"error: invalid configuration\n{exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    try:
        run = run_suite(config)
        text = write_report(run, config)
    except SuiteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    if not config.out:
        sys.stdout.write(text)
    _provenance(
        f"suite {run.suite} v{run.version} profile={config.profile} "
        f"cases={len(run.cases)} failures={run.failures} max_defect={run.max_defect:.3e}"
    )
    return exit_status(run)


def cmd_eval(args: argparse.Namespace, runtime: RuntimeConfig) -> int:
    operation = EVAL_OPS[args.op]
    try:
        value, provenance = operation(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except DOMAIN_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    print(render_value(value))
    _provenance(f"eval {args.op} {provenance}")
    return EXIT_PASS


def cmd_list_suites(args: argparse.Namespace, runtime: RuntimeConfig) -> int:
    for suite in default_registry().describe():
        print(f"{suite['name']}\tv{suite['version']}\t{suite['description']}")
    return EXIT_PASS


def cmd_list_chars(args: argparse.Namespace, runtime: RuntimeConfig) -> int:
    try:
        characters = (
            primitive_characters(args.modulus) if args.primitive
            else enumerate_characters(args.modulus)
        )
    except CharacterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    print(json.dumps([to_json(chi) for chi in characters], indent=2))
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolechar",
        description="Character Boole summation: evaluation and verification suites.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Override BOOLECHAR_LOG_LEVEL.")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Run a verification suite.")
    verify.add_argument("suite", help="Suite name; see list-suites.")
    verify.add_argument("--profile", choices=sorted(VALID_PROFILES), default=None)
    verify.add_argument("--moduli", type=parse_int_list, default=None, help="e.g. 3,5")
    verify.add_argument("--p-values", type=parse_int_list, default=None, help="e.g. 1..5")
    verify.add_argument("--pmax", type=int, default=None, help="Largest p in the grid.")
    verify.add_argument("--bcmax", type=int, default=None, help="Largest b and c in the grid.")
    verify.add_argument("--orders", type=parse_int_list, default=None, help="e.g. 1..4")
    verify.add_argument("--tol", type=float, default=None, help="Override inexact tolerances.")
    verify.add_argument("--jobs", type=int, default=None, help="Worker processes.")
    verify.add_argument("--format", choices=sorted(VALID_FORMATS), default=None)
    verify.add_argument("--out", default=None, help="Write the report here instead of stdout.")
    verify.set_defaults(handler=cmd_verify)

    evaluate = commands.add_parser("eval", help="Evaluate one operation.")
    evaluate.add_argument("op", choices=sorted(EVAL_OPS))
    evaluate.add_argument("--modulus", type=int, default=None)
    evaluate.add_argument("--char", default="quadratic", help="'quadratic', 'principal' or n.")
    evaluate.add_argument("--s", type=parse_complex, default=None)
    evaluate.add_argument("--a", type=parse_fraction, default=None)
    evaluate.add_argument("--x", type=parse_fraction, default=None)
    evaluate.add_argument("--t", type=float, default=None)
    for name in ("m", "n", "p", "b", "c", "l", "order", "terms"):
        evaluate.add_argument(f"--{name}", type=int, default=None)
    evaluate.add_argument("--side", choices=("right", "left", "mid"), default=SIDE_RIGHT)
    evaluate.add_argument("--method", choices=sorted(VALID_ROUTES | {ROUTE_AUTO}),
                          default=ROUTE_AUTO)
    evaluate.add_argument("--route", choices=sorted(VALID_GAMMA_ROUTES),
                          default=GAMMA_ROUTE_QUOTIENT)
    evaluate.add_argument("--kernel", choices=sorted(VALID_KERNELS), default=None)
    evaluate.add_argument("--convention", choices=sorted(VALID_CONVENTIONS),
                          default=CONVENTION_PROOF)
    evaluate.add_argument("--family", choices=sorted(VALID_FAMILIES), default=None)
    evaluate.add_argument("--parameter", type=float, default=None)
    evaluate.add_argument("--alpha", type=parse_fraction, default=None)
    evaluate.add_argument("--beta", type=parse_fraction, default=None)
    evaluate.set_defaults(handler=cmd_eval)

    suites = commands.add_parser("list-suites", help="List verification suites.")
    suites.set_defaults(handler=cmd_list_suites)

    chars = commands.add_parser("list-chars", help="List the characters mod k.")
    chars.add_argument("--modulus", type=int, required=True)
    chars.add_argument("--primitive", action="store_true", help="Primitive characters only.")
    chars.set_defaults(handler=cmd_list_chars)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        runtime = load_runtime_config()
        level = runtime.logging_level
        if args.log_level:
            level = RuntimeConfig(log_level=args.log_level.upper()).logging_level
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    logging.basicConfig(level=level, stream=sys.stderr, format=LOG_FORMAT)
    return int(args.handler(args, runtime))


if __name__ == "__main__":
    sys.exit(main())
