"""Named verification suites.

Each suite turns a :class:`SuiteConfig` into a deterministic list of
JSON-safe cases and checks one case at a time. Real characters go
through exact rational arithmetic wherever the identity is rational, so
those cases pass only with a defect of exactly zero; the tolerance
override does not apply to them.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Any, Callable

import numpy as np

from boolechar.arith.characters import (
    DirichletCharacter,
    conjugate,
    find_character,
    primitive_characters,
    real_primitive_characters,
)
from boolechar.arith.eulerfun import (
    SIDE_MID,
    bernoulli_spec,
    char_periodic_eval,
    char_periodic_kernel,
    euler_spec,
    magnitude_bound,
    periodic_eval,
)
from boolechar.formulas.gammastar import (
    GammaStarQuery,
    gamma_star,
    log_mean_defect,
    psi_star,
    psi_star_at_zero,
    stirling_log_gamma_star,
    taylor_defect,
    weierstrass_partial,
)
from boolechar.formulas.genfun import gf_coefficients, gf_expected
from boolechar.formulas.hbsums import (
    HBParams,
    alternating_lemma_defect,
    euler_integral_closed,
    is_prime,
    recip1_defect,
    recip2_defect,
)
from boolechar.formulas.lfunc import (
    LQuery,
    ell,
    ell_cot,
    ell_cot_reflection,
    ell_derivative0,
    ell_partial,
    ell_partial_sum,
    ell_prime_zero,
    ell_special_negint,
    ell_value,
)
from boolechar.formulas.summation import (
    SummationReport,
    alternating_split_defect,
    boole_sum,
    char_boole_sum,
    char_euler_maclaurin,
    make_family,
)
from boolechar.shared.constants import (
    CONVENTION_DEFINITION,
    CONVENTION_PROOF,
    DEFAULT_CLOSED_FORM_TOL,
    DEFAULT_COMPLEX_RECIP_TOL,
    DEFAULT_DERIVATIVE_TOL,
    DEFAULT_EXACT_TOL,
    DEFAULT_GF_TOL,
    DEFAULT_INTEGRAL_TOL,
    DEFAULT_INTEGRAL_ZERO_TOL,
    DEFAULT_LERCH_TOL,
    DEFAULT_PARTIAL_TOL,
    DEFAULT_PRODUCT_TOL,
    DEFAULT_ROUTE_TOL,
    DEFAULT_SUMMATION_TOL,
    FAMILY_EXP,
    FAMILY_POWER,
    FAMILY_RECIPROCAL,
    GAMMA_ROUTE_LOG_FORMULA,
    GAMMA_ROUTE_PARTIAL_PRODUCT,
    GAMMA_ROUTE_QUOTIENT,
    KERNEL_COS,
    KERNEL_COSH,
    KERNEL_EXP,
    KERNEL_SIN,
    KERNEL_SINH,
    KIND_BERNOULLI,
    KIND_EULER,
    ROUTE_HURWITZ,
    ROUTE_INTEGRAL,
    ROUTE_SERIES,
    SUITE_ASYMPTOTICS,
    SUITE_BOOLE,
    SUITE_CEM,
    SUITE_CHAR_BOOLE,
    SUITE_CLOSED_FORM,
    SUITE_GF,
    SUITE_IDENTITIES,
    SUITE_INTEGRALS,
    SUITE_LERCH,
    SUITE_LFUNC_ROUTES,
    SUITE_RECIP1,
    SUITE_RECIP2,
)
from boolechar.verify.registry import Case, SuiteRegistry
from boolechar.verify.report import VerificationReport, magnitude

if TYPE_CHECKING:
    from boolechar.verify.models import SuiteConfig

logger = logging.getLogger(__name__)

SUMMATION_FAMILIES: tuple[tuple[str, float], ...] = (
    (FAMILY_EXP, 0.1),
    (FAMILY_POWER, 4),
    (FAMILY_RECIPROCAL, 2.0),
)
GF_KERNELS = (KERNEL_EXP, KERNEL_COS, KERNEL_SIN, KERNEL_COSH, KERNEL_SINH)

# ell_partial cases: (modulus, x, s, a, order)
PARTIAL_CASES: tuple[tuple[int, float, complex, float, int], ...] = (
    (3, 5.5, 0.5, 0.25, 2),
    (3, 6.0, 0.0, 1.0, 1),
    (5, 3.5, 1.5, 0.5, 3),
    (3, 8.25, -0.5, 0.75, 2),
    (5, 12.0, 1.0, 0.25, 2),
    (3, 4.5, 2.0, 1.0, 3),
    (5, 9.5, 0.25 + 1j, 0.5, 2),
    (3, 2.5, -1.5, 0.5, 1),
    (5, 15.0, 0.5, 2.0, 2),
    (3, 7.0, 2.5, 0.25, 4),
)
SPECIAL_A_VALUES = ("1/4", "1/2")
SPECIAL_P_MAX = 4
REFLECTION_A_VALUES = (0.1, 0.3)
CONJUGATION_TOL = 1e-12
PSI_TOL = 1e-10
PSI_A_VALUES = (0.3, 0.5)
TAYLOR_POINT = (1.0, 0.4)

SAMPLE_POINTS = ("0", "1/3", "1/2", "2/5", "1", "7/4", "7/3", "5/2", "13/6", "-2/5")
SHIFTS = (-2, -1, 0, 1, 2)
RAABE_MAX_R = 6
EVEN_R_VALUES = (2, 4, 6)
COMPLEX_IDENTITY_TOL = 1e-12
FD_STEP = 1e-6
FD_POINTS = 7
BOUND_MAX_ORDER = 5

STIRLING_POINTS = (20.0, 40.0)
STIRLING_ORDER = 6
LOG_MEAN_POINTS = (30.5, 60.5)
LOG_MEAN_ORDER = 3
MIN_REDUCTION = 10.0


# Shared helpers


def _tol(tol: float | None, default: float) -> float:
    return default if tol is None else tol


def _scale(*values: Any) -> float:
    return max([1.0, *(magnitude(v) for v in values)])


def _character(case: Case) -> DirichletCharacter:
    return find_character(int(case["modulus"]), int(case["char"]))


def _char_params(chi: DirichletCharacter) -> Case:
    return {"modulus": chi.modulus, "char": chi.number}


def _odd(moduli: tuple[int, ...], suite: str) -> tuple[int, ...]:
    kept = tuple(k for k in moduli if k % 2)
    if len(kept) != len(moduli):
        logger.warning(
            "Suite '%s' skips even moduli %s", suite, [k for k in moduli if k % 2 == 0]
        )
    return kept


def _primitive(moduli: tuple[int, ...]) -> list[DirichletCharacter]:
    return [chi for k in moduli for chi in primitive_characters(k)]


def _real(moduli: tuple[int, ...]) -> list[DirichletCharacter]:
    return [chi for k in moduli for chi in real_primitive_characters(k)]


def _complex(moduli: tuple[int, ...]) -> list[DirichletCharacter]:
    return [chi for chi in _primitive(moduli) if not chi.is_real]


def _s(case: Case) -> complex:
    re, im = case["s"]
    return complex(re, im)


def _encode_s(s: complex) -> list[float]:
    s = complex(s)
    return [s.real, s.imag]


def _summation_report(case: Case, report: SummationReport, tol: float) -> VerificationReport:
    return VerificationReport.compare(
        case,
        report.lhs,
        report.rhs,
        tol,
        scale=_scale(report.lhs, report.rhs_boundary),
        route_meta={
            "order": report.order,
            "quadError": report.quad_error,
            "rhsBoundary": report.rhs_boundary,
            "rhsIntegral": report.rhs_integral,
            **report.notes,
        },
    )


def _exact_or_scaled(
    case: Case, lhs: Any, rhs: Any, exact: bool, tol: float, meta: dict[str, Any]
) -> VerificationReport:
    if exact:
        return VerificationReport.compare(case, lhs, rhs, DEFAULT_EXACT_TOL, route_meta=meta)
    return VerificationReport.compare(case, lhs, rhs, tol, scale=_scale(lhs, rhs), route_meta=meta)


# Summation suites


def _summation_grid(cfg: SuiteConfig, moduli: tuple[int, ...]) -> list[Case]:
    orders = cfg.pick(cfg.orders, cfg.grid.summation_orders)
    cases: list[Case] = []
    for chi in _primitive(moduli):
        k = chi.modulus
        ranges = (("0", str(2 * k)), ("0", str(4 * k)), ("1/2", f"{4 * k + 1}/2"))
        for family, parameter in SUMMATION_FAMILIES:
            for alpha, beta in ranges:
                for order in orders:
                    cases.append(
                        {
                            **_char_params(chi),
                            "family": family,
                            "parameter": parameter,
                            "alpha": alpha,
                            "beta": beta,
                            "l": order,
                        }
                    )
    return cases


def build_boole_cases(cfg: SuiteConfig) -> list[Case]:
    orders = [o for o in cfg.pick(cfg.orders, cfg.grid.summation_orders) if o >= 1]
    return [
        {"family": family, "parameter": parameter, "alpha": alpha, "beta": beta, "l": order}
        for family, parameter in SUMMATION_FAMILIES
        for alpha in (0, 1)
        for beta in cfg.grid.boole_betas
        for order in orders
    ]


def run_boole_case(case: Case, tol: float | None) -> VerificationReport:
    f = make_family(case["family"], case["parameter"])
    report = boole_sum(f, int(case["alpha"]), int(case["beta"]), int(case["l"]))
    return _summation_report(case, report, _tol(tol, DEFAULT_SUMMATION_TOL))


def build_cem_cases(cfg: SuiteConfig) -> list[Case]:
    return _summation_grid(cfg, cfg.pick(cfg.moduli, cfg.grid.summation_moduli))


def run_cem_case(case: Case, tol: float | None) -> VerificationReport:
    f = make_family(case["family"], case["parameter"])
    report = char_euler_maclaurin(
        _character(case), f, Fraction(case["alpha"]), Fraction(case["beta"]), int(case["l"])
    )
    return _summation_report(case, report, _tol(tol, DEFAULT_SUMMATION_TOL))


def build_char_boole_cases(cfg: SuiteConfig) -> list[Case]:
    moduli = _odd(cfg.pick(cfg.moduli, cfg.grid.summation_moduli), SUITE_CHAR_BOOLE)
    grid = _summation_grid(cfg, moduli)
    cases = [{"check": "boole", **case} for case in grid]
    split = {
        (c["modulus"], c["char"], c["family"], c["alpha"], c["beta"]): c for c in grid
    }
    cases.extend({"check": "split", **case, "l": 2} for case in split.values())
    return cases


def run_char_boole_case(case: Case, tol: float | None) -> VerificationReport:
    chi = _character(case)
    f = make_family(case["family"], case["parameter"])
    alpha, beta = Fraction(case["alpha"]), Fraction(case["beta"])
    limit = _tol(tol, DEFAULT_SUMMATION_TOL)
    if case["check"] == "split":
        split = alternating_split_defect(chi, f, alpha, beta, int(case["l"]))
        return VerificationReport.compare(
            case, split.alternating, split.split, limit, scale=_scale(split.alternating)
        )
    return _summation_report(case, char_boole_sum(chi, f, alpha, beta, int(case["l"])), limit)


# L-function suites


def build_lfunc_cases(cfg: SuiteConfig) -> list[Case]:
    grid = cfg.grid
    moduli = cfg.pick(cfg.moduli, grid.route_moduli)
    cases: list[Case] = []
    for chi in _real(moduli):
        for s in grid.route_s_values:
            for a in grid.route_a_values:
                cases.append({"check": "routes", **_char_params(chi), "s": _encode_s(s), "a": a})
    for k, x, s, a, order in PARTIAL_CASES:
        chi = find_character(k, "quadratic")
        cases.append(
            {"check": "partial", **_char_params(chi), "x": x, "s": _encode_s(s), "a": a, "l": order}
        )
    for chi in _real(moduli):
        for p in range(1, SPECIAL_P_MAX + 1):
            for a_text in SPECIAL_A_VALUES:
                cases.append({"check": "special", **_char_params(chi), "p": p, "a": a_text})
    for chi in _complex(moduli):
        for s in grid.route_s_values:
            cases.append(
                {"check": "conjugation", **_char_params(chi), "s": _encode_s(s), "a": 0.25}
            )
    for chi in _real(moduli):
        for a in REFLECTION_A_VALUES:
            cases.append({"check": "cot-reflection", **_char_params(chi), "a": a})
    return cases


def _route_agreement(case: Case, tol: float) -> VerificationReport:
    chi = _character(case)
    s, a = _s(case), float(case["a"])
    routes = [ROUTE_HURWITZ, ROUTE_INTEGRAL]
    if s.real > 0:
        routes.insert(0, ROUTE_SERIES)
    values = {route: ell_value(s, a, chi, route) for route in routes}
    spread = max(abs(u - v) for u in values.values() for v in values.values())
    lhs, rhs = values[ROUTE_HURWITZ], values[ROUTE_INTEGRAL]
    scale = _scale(*values.values())
    return VerificationReport(
        case,
        lhs,
        rhs,
        lhs - rhs,
        spread <= tol * scale,
        {"routes": values, "spread": spread},
    )


def run_lfunc_case(case: Case, tol: float | None) -> VerificationReport:
    check = case["check"]
    chi = _character(case)
    if check == "routes":
        return _route_agreement(case, _tol(tol, DEFAULT_ROUTE_TOL))
    if check == "partial":
        x, s, a = float(case["x"]), _s(case), float(case["a"])
        literal = ell_partial_sum(x, s, a, chi)
        formula = ell_partial(x, s, a, chi, int(case["l"]))
        return VerificationReport.compare(
            case, literal, formula, _tol(tol, DEFAULT_PARTIAL_TOL), scale=_scale(literal)
        )
    if check == "special":
        p, a = int(case["p"]), Fraction(case["a"])
        exact = ell_special_negint(p, a, chi)
        integral = ell(LQuery(s=complex(1 - p), a=float(a), character=chi, method=ROUTE_INTEGRAL))
        return VerificationReport.compare(
            case,
            integral,
            complex(exact),
            _tol(tol, DEFAULT_PARTIAL_TOL),
            scale=_scale(exact),
            route_meta={"exact": exact},
        )
    if check == "conjugation":
        s, a = _s(case), float(case["a"])
        direct = ell_value(s, a, conjugate(chi), ROUTE_HURWITZ)
        mirrored = ell_value(s.conjugate(), a, chi, ROUTE_HURWITZ).conjugate()
        return VerificationReport.compare(
            case, direct, mirrored, _tol(tol, CONJUGATION_TOL), scale=_scale(direct)
        )
    a = float(case["a"])
    series = ell_value(1, a, chi, ROUTE_SERIES) - chi.sign * ell_value(1, -a, chi, ROUTE_SERIES)
    closed = ell_cot_reflection(a, chi)
    return VerificationReport.compare(
        case, series, closed, _tol(tol, DEFAULT_PARTIAL_TOL), scale=_scale(closed)
    )


def build_lerch_cases(cfg: SuiteConfig) -> list[Case]:
    grid = cfg.grid
    characters = _real(cfg.pick(cfg.moduli, grid.route_moduli))
    cases: list[Case] = []
    for chi in characters:
        for a in grid.lerch_a_values:
            for check in ("lerch", "gamma-routes", "derivative0"):
                cases.append({"check": check, **_char_params(chi), "a": a})
            cases.append(
                {"check": "gamma-product", **_char_params(chi), "a": a, "terms": grid.product_terms}
            )
            cases.append(
                {"check": "weierstrass", **_char_params(chi), "a": a, "terms": grid.product_terms}
            )
        for a in PSI_A_VALUES:
            cases.append({"check": "psi-star", **_char_params(chi), "a": a})
            for m in (1, 2):
                cases.append({"check": "psi-derivative", **_char_params(chi), "a": a, "m": m})
        a, z = TAYLOR_POINT
        cases.append({"check": "taylor", **_char_params(chi), "a": a, "z": z})
    return cases


def run_lerch_case(case: Case, tol: float | None) -> VerificationReport:
    check = case["check"]
    chi = _character(case)
    a = float(case["a"])
    if check == "lerch":
        derivative = ell_derivative0(a, chi).integral_route
        rhs = gamma_star(GammaStarQuery(a, chi)) + ell_prime_zero(chi)
        return VerificationReport.compare(
            case, derivative, rhs, _tol(tol, DEFAULT_LERCH_TOL), scale=_scale(derivative)
        )
    if check == "gamma-routes":
        quotient = gamma_star(GammaStarQuery(a, chi, GAMMA_ROUTE_QUOTIENT))
        formula = gamma_star(GammaStarQuery(a, chi, GAMMA_ROUTE_LOG_FORMULA))
        return VerificationReport.compare(
            case, quotient, formula, _tol(tol, DEFAULT_LERCH_TOL), scale=_scale(quotient)
        )
    if check == "gamma-product":
        terms = int(case["terms"])
        quotient = gamma_star(GammaStarQuery(a, chi, GAMMA_ROUTE_QUOTIENT))
        product = gamma_star(GammaStarQuery(a, chi, GAMMA_ROUTE_PARTIAL_PRODUCT, terms))
        return VerificationReport.compare(
            case, product, quotient, _tol(tol, DEFAULT_PRODUCT_TOL), route_meta={"terms": terms}
        )
    if check == "weierstrass":
        terms = int(case["terms"])
        partial = weierstrass_partial(a, chi, terms)
        quotient = gamma_star(GammaStarQuery(a, chi, GAMMA_ROUTE_QUOTIENT))
        return VerificationReport.compare(
            case, partial, quotient, _tol(tol, DEFAULT_PRODUCT_TOL), route_meta={"terms": terms}
        )
    if check == "derivative0":
        report = ell_derivative0(a, chi)
        return VerificationReport.compare(
            case,
            report.log_gamma_route,
            report.integral_route,
            _tol(tol, DEFAULT_LERCH_TOL),
            scale=_scale(report.log_gamma_route),
        )
    if check == "psi-star":
        minus_psi = -psi_star(a, chi)
        value = ell_value(1, a, chi, ROUTE_SERIES)
        return VerificationReport.compare(
            case, minus_psi, value, _tol(tol, PSI_TOL), scale=_scale(value)
        )
    if check == "psi-derivative":
        m = int(case["m"])
        derivative = psi_star(a, chi, m)
        expected = (-1) ** (m + 1) * math.factorial(m) * ell_value(m + 1, a, chi, ROUTE_HURWITZ)
        return VerificationReport.compare(
            case, derivative, expected, _tol(tol, PSI_TOL), scale=_scale(expected)
        )
    z = float(case["z"])
    difference = complex(psi_star(a, chi) - psi_star(a - z, chi))
    series = difference + taylor_defect(a, z, chi)
    return VerificationReport.compare(
        case, series, difference, _tol(tol, DEFAULT_LERCH_TOL), scale=_scale(difference)
    )


# Hardy-Berndt suites


def _bc_pairs(bound: int) -> list[tuple[int, int]]:
    return [(b, c) for b in range(1, bound + 1) for c in range(1, bound + 1) if (b + c) % 2]


def build_recip1_cases(cfg: SuiteConfig) -> list[Case]:
    grid = cfg.grid
    p_values = [p for p in cfg.p_grid(grid.recip1_p_values) if p > 1 and p % 2]
    pairs = _bc_pairs(cfg.bc_max or grid.recip1_bc_max)
    if cfg.moduli is not None:
        moduli = _odd(cfg.moduli, SUITE_RECIP1)
        characters = _primitive(moduli)
    else:
        characters = _real(grid.recip1_moduli) + _complex(grid.recip1_complex_moduli)
    cases: list[Case] = []
    for chi in characters:
        for p in p_values:
            for b, c in pairs:
                cases.append({"check": "reciprocity", **_char_params(chi), "p": p, "b": b, "c": c})
                if chi.is_real:
                    cases.append({"check": "remark", **_char_params(chi), "p": p, "b": b, "c": c})
                    cases.append({"check": "lemma", **_char_params(chi), "p": p, "b": b, "c": c})
    return cases


def run_recip1_case(case: Case, tol: float | None) -> VerificationReport:
    chi = _character(case)
    p, b, c = int(case["p"]), int(case["b"]), int(case["c"])
    if case["check"] == "lemma":
        defect = alternating_lemma_defect(p, b, c, chi, chi)
        return VerificationReport.compare(case, defect, Fraction(0), DEFAULT_EXACT_TOL)
    params = HBParams(p, b, c, chi, CONVENTION_DEFINITION, exact=chi.is_gaussian)
    report = recip1_defect(params)
    if case["check"] == "remark":
        return VerificationReport.compare(
            case, report.lhs, report.meta["modifiedLhs"], DEFAULT_EXACT_TOL
        )
    meta: dict[str, Any] = {
        "printedRhs": report.meta["printedRhs"],
        "convention": report.convention,
    }
    if report.exact:
        return VerificationReport.compare(
            case, report.lhs, report.rhs, DEFAULT_EXACT_TOL, route_meta=meta
        )
    # values outside Q(i): the absolute bound is reported, the verdict is scaled
    limit = _tol(tol, DEFAULT_COMPLEX_RECIP_TOL)
    size = magnitude(report.defect)
    meta |= {
        "absDefect": size,
        "scale": report.scale,
        "scaledBudget": limit * report.scale,
        "absoluteBound": size <= limit,
    }
    return VerificationReport.compare(
        case, report.lhs, report.rhs, limit, scale=report.scale, route_meta=meta
    )


def build_recip2_cases(cfg: SuiteConfig) -> list[Case]:
    grid = cfg.grid
    moduli = _odd(cfg.pick(cfg.moduli, grid.recip_moduli), SUITE_RECIP2)
    p_values = [p for p in cfg.p_grid(grid.recip2_p_values) if p >= 1]
    pairs = _bc_pairs(cfg.bc_max or grid.recip2_bc_max)
    cases: list[Case] = []
    dropped = 0
    for chi in _real(moduli):
        for p in p_values:
            if chi.sign * (-1) ** p != 1:
                dropped += len(pairs)
                continue
            for b, c in pairs:
                cases.append({**_char_params(chi), "p": p, "b": b, "c": c})
    if dropped:
        logger.warning(
            "Suite '%s' drops %d cases failing the parity condition", SUITE_RECIP2, dropped
        )
    return cases


def run_recip2_case(case: Case, tol: float | None) -> VerificationReport:
    chi = _character(case)
    params = HBParams(int(case["p"]), int(case["b"]), int(case["c"]), chi, CONVENTION_PROOF)
    report = recip2_defect(params)
    return VerificationReport.compare(
        case,
        report.lhs,
        report.rhs,
        DEFAULT_EXACT_TOL,
        route_meta={"convention": CONVENTION_PROOF},
    )


def _has_closed_form(p: int, b: int, c: int, chi: DirichletCharacter) -> bool:
    if p % 2:
        return (b + c) % 2 == 0
    if (b + c) % 2:
        return True
    return math.gcd(b, c) == 1 and is_prime(chi.modulus)


def build_integral_cases(cfg: SuiteConfig) -> list[Case]:
    grid = cfg.grid
    moduli = _odd(cfg.pick(cfg.moduli, grid.integral_moduli), SUITE_INTEGRALS)
    p_max = cfg.pmax if cfg.pmax is not None else grid.integral_p_max
    bound = cfg.bc_max or grid.integral_bc_max
    cases: list[Case] = []
    for chi in _real(moduli):
        for p in range(2, p_max + 1):
            for order in range(p - 1):
                for b in range(1, bound + 1):
                    for c in range(1, bound + 1):
                        if _has_closed_form(p, b, c, chi):
                            cases.append(
                                {**_char_params(chi), "l": order, "p": p, "b": b, "c": c}
                            )
    return cases


def run_integral_case(case: Case, tol: float | None) -> VerificationReport:
    report = euler_integral_closed(
        int(case["l"]), int(case["p"]), int(case["b"]), int(case["c"]), _character(case)
    )
    meta = {"branch": report.branch, "quadError": report.quad_error}
    if report.closed_form == 0:
        return VerificationReport.compare(
            case, report.value, 0.0, _tol(tol, DEFAULT_INTEGRAL_ZERO_TOL), route_meta=meta
        )
    return VerificationReport.compare(
        case,
        report.value,
        report.closed_form,
        _tol(tol, DEFAULT_INTEGRAL_TOL),
        scale=_scale(report.closed_form),
        route_meta=meta,
    )


# Generating functions


def build_gf_cases(cfg: SuiteConfig) -> list[Case]:
    characters = _primitive(cfg.pick(cfg.moduli, cfg.grid.gf_moduli))
    order = cfg.grid.gf_order
    return [
        {"kernel": kernel, **_char_params(chi), "order": order}
        for chi in characters
        for kernel in GF_KERNELS
    ]


def run_gf_case(case: Case, tol: float | None) -> VerificationReport:
    chi, kernel, order = _character(case), case["kernel"], int(case["order"])
    coefficients = gf_coefficients(kernel, chi, order)
    expected = gf_expected(kernel, chi, order)
    errors = [abs(x - e) / _scale(e) for x, e in zip(coefficients, expected)]
    worst = int(np.argmax(errors))
    return VerificationReport.compare(
        case,
        coefficients[worst],
        expected[worst],
        _tol(tol, DEFAULT_GF_TOL),
        scale=_scale(expected[worst]),
        route_meta={"worstIndex": worst, "maxRelative": errors[worst]},
    )


# Periodic function identities


def _samples() -> list[Fraction]:
    return [Fraction(x) for x in SAMPLE_POINTS]


def _reflection_rows(chi: DirichletCharacter, m: int) -> list[tuple[Fraction, Any, Any]]:
    spec = euler_spec(m, chi)
    sign = chi.sign * (1 if m % 2 else -1)
    return [
        (x, char_periodic_eval(spec, -x, SIDE_MID), sign * char_periodic_eval(spec, x, SIDE_MID))
        for x in _samples()
    ]


def _periodicity_rows(chi: DirichletCharacter, m: int) -> list[tuple[Fraction, Any, Any]]:
    spec = euler_spec(m, chi)
    k = chi.modulus
    return [
        (
            x + n * k,
            char_periodic_eval(spec, x + n * k),
            (-1) ** (n % 2) * char_periodic_eval(spec, x),
        )
        for x in _samples()
        for n in SHIFTS
    ]


def _halving_rows(chi: DirichletCharacter, m: int) -> list[tuple[Fraction, Any, Any]]:
    spec = bernoulli_spec(m, chi)
    k = chi.modulus
    two = chi.value(2)
    return [
        (
            x,
            char_periodic_eval(spec, x / 2, SIDE_MID)
            + char_periodic_eval(spec, (x + k) / 2, SIDE_MID),
            Fraction(2) ** (1 - m) * two * char_periodic_eval(spec, x, SIDE_MID),
        )
        for x in _samples()
    ]


def _euler_link_rows(chi: DirichletCharacter, m: int) -> list[tuple[Fraction, Any, Any]]:
    chi_bar = conjugate(chi)
    spec = bernoulli_spec(m, chi_bar)
    two = chi.value(2)
    return [
        (
            x,
            2**m * two * char_periodic_eval(spec, x / 2, SIDE_MID)
            - char_periodic_eval(spec, x, SIDE_MID),
            Fraction(-m, 2) * char_periodic_eval(euler_spec(m - 1, chi_bar), x, SIDE_MID),
        )
        for x in _samples()
    ]


def _raabe_rows(n: int, r: int) -> list[tuple[Fraction, Any, Any]]:
    return [
        (
            x,
            r ** (n - 1)
            * sum(periodic_eval(KIND_BERNOULLI, n, x + Fraction(j, r), SIDE_MID) for j in range(r)),
            periodic_eval(KIND_BERNOULLI, n, r * x, SIDE_MID),
        )
        for x in _samples()
    ]


def _alternating_raabe_rows(n: int, r: int) -> list[tuple[Fraction, Any, Any]]:
    return [
        (
            x,
            r ** (n - 1)
            * sum(
                (-1) ** j * periodic_eval(KIND_BERNOULLI, n, (x + j) / r, SIDE_MID)
                for j in range(r)
            ),
            Fraction(-n, 2) * periodic_eval(KIND_EULER, n - 1, x, SIDE_MID),
        )
        for x in _samples()
    ]


_CHARACTER_ROWS: dict[str, Callable[[DirichletCharacter, int], list[tuple[Fraction, Any, Any]]]] = {
    "reflection": _reflection_rows,
    "periodicity": _periodicity_rows,
    "halving": _halving_rows,
    "euler-link": _euler_link_rows,
}


def build_identity_cases(cfg: SuiteConfig) -> list[Case]:
    grid = cfg.grid
    moduli = _odd(cfg.pick(cfg.moduli, grid.identity_moduli), SUITE_IDENTITIES)
    top = max(cfg.pick(cfg.orders, (grid.identity_max_order,)))
    characters = _primitive(moduli)
    cases: list[Case] = []
    for check in ("reflection", "periodicity"):
        for chi in characters:
            cases.extend({"check": check, **_char_params(chi), "m": m} for m in range(top + 1))
    for check in ("halving", "euler-link"):
        for chi in characters:
            cases.extend({"check": check, **_char_params(chi), "m": m} for m in range(1, top + 1))
    for n in range(1, top + 1):
        cases.extend({"check": "raabe", "n": n, "r": r} for r in range(1, RAABE_MAX_R + 1))
        cases.extend({"check": "alternating-raabe", "n": n, "r": r} for r in EVEN_R_VALUES)
    for chi in characters:
        for kind in (KIND_EULER, KIND_BERNOULLI):
            cases.extend(
                {"check": "derivative", **_char_params(chi), "kind": kind, "m": m}
                for m in range(2, min(5, top) + 1)
            )
        cases.extend(
            {"check": "bound", **_char_params(chi), "l": order, "samples": grid.bound_samples}
            for order in range(1, min(BOUND_MAX_ORDER, top) + 1)
        )
    return cases


def _worst_row(
    case: Case, rows: list[tuple[Fraction, Any, Any]], exact: bool, tol: float
) -> VerificationReport:
    x, lhs, rhs = max(rows, key=lambda row: magnitude(row[1] - row[2]))
    meta = {"x": x, "samples": len(rows)}
    return _exact_or_scaled(case, lhs, rhs, exact, tol, meta)


def _derivative_check(case: Case, chi: DirichletCharacter, tol: float) -> VerificationReport:
    m = int(case["m"])
    make = euler_spec if case["kind"] == KIND_EULER else bernoulli_spec
    value = char_periodic_kernel(make(m, chi))
    lower = char_periodic_kernel(make(m - 1, chi))
    k = chi.modulus
    x = np.array([k * (i + 0.37) / FD_POINTS for i in range(FD_POINTS)])
    difference = (value(x + FD_STEP) - value(x - FD_STEP)) / (2 * FD_STEP)
    expected = m * lower(x)
    scale = np.maximum(1.0, np.maximum(np.abs(expected), np.abs(value(x))))
    errors = np.abs(difference - expected) / scale
    worst = int(np.argmax(errors))
    lhs = complex(difference[worst])
    rhs = complex(expected[worst])
    if chi.is_real:
        lhs, rhs = lhs.real, rhs.real
    return VerificationReport.compare(
        case,
        lhs,
        rhs,
        tol,
        scale=float(scale[worst]),
        route_meta={"x": float(x[worst]), "step": FD_STEP},
    )


def _bound_check(case: Case, chi: DirichletCharacter) -> VerificationReport:
    order = int(case["l"])
    x = np.linspace(0.0, 2.0 * chi.modulus, int(case["samples"]), endpoint=False)
    peak = float(np.max(np.abs(char_periodic_kernel(euler_spec(order, chi))(x))))
    bound = magnitude_bound(order, chi.modulus)
    return VerificationReport(
        case, peak, bound, peak - bound, peak <= bound, {"ratio": peak / bound}
    )


def run_identity_case(case: Case, tol: float | None) -> VerificationReport:
    check = case["check"]
    if check == "raabe":
        return _worst_row(case, _raabe_rows(int(case["n"]), int(case["r"])), True, 0.0)
    if check == "alternating-raabe":
        rows = _alternating_raabe_rows(int(case["n"]), int(case["r"]))
        return _worst_row(case, rows, True, 0.0)
    chi = _character(case)
    if check == "derivative":
        return _derivative_check(case, chi, _tol(tol, DEFAULT_DERIVATIVE_TOL))
    if check == "bound":
        return _bound_check(case, chi)
    rows = _CHARACTER_ROWS[check](chi, int(case["m"]))
    return _worst_row(case, rows, chi.is_real, _tol(tol, COMPLEX_IDENTITY_TOL))


# Closed forms and asymptotics


def build_closed_form_cases(cfg: SuiteConfig) -> list[Case]:
    cases: list[Case] = []
    for chi in _real(cfg.pick(cfg.moduli, cfg.grid.route_moduli)):
        if chi.sign == -1:
            cases.append({"check": "ell-one", **_char_params(chi)})
        cases.extend(
            {"check": "cot", **_char_params(chi), "m": m}
            for m in range(1, 5)
            if chi.sign * (-1) ** m == 1
        )
    return cases


def run_closed_form_case(case: Case, tol: float | None) -> VerificationReport:
    chi = _character(case)
    limit = _tol(tol, DEFAULT_CLOSED_FORM_TOL)
    if case["check"] == "cot":
        m = int(case["m"])
        closed = ell_cot(m, chi)
        series = ell_value(m, 0.0, chi, ROUTE_SERIES)
        return VerificationReport.compare(case, series, closed, limit, scale=_scale(closed))
    paths: dict[str, Any] = {
        "cot": ell_cot(1, chi),
        "psiStar": -psi_star_at_zero(chi),
        "series": ell_value(1, 0.0, chi, ROUTE_SERIES),
    }
    if chi.modulus == 3:
        paths["known"] = -2 * math.sqrt(3) * math.pi / 9
    spread = max(abs(u - v) for u in paths.values() for v in paths.values())
    lhs, rhs = paths["series"], paths["cot"]
    return VerificationReport(
        case, lhs, rhs, lhs - rhs, spread <= limit * _scale(rhs), {"paths": paths, "spread": spread}
    )


def build_asymptotic_cases(cfg: SuiteConfig) -> list[Case]:
    cases: list[Case] = []
    for chi in _real(cfg.pick(cfg.moduli, cfg.grid.route_moduli)):
        near, far = STIRLING_POINTS
        cases.append(
            {
                "check": "stirling",
                **_char_params(chi),
                "near": near,
                "far": far,
                "order": STIRLING_ORDER,
            }
        )
        near, far = LOG_MEAN_POINTS
        cases.append(
            {
                "check": "log-mean",
                **_char_params(chi),
                "near": near,
                "far": far,
                "order": LOG_MEAN_ORDER,
            }
        )
    return cases


def _stirling_defect(a: float, chi: DirichletCharacter, order: int) -> float:
    expansion = stirling_log_gamma_star(a, chi, order)
    return abs(gamma_star(GammaStarQuery(a, chi)) - expansion.value)


def run_asymptotic_case(case: Case, tol: float | None) -> VerificationReport:
    chi = _character(case)
    near, far, order = float(case["near"]), float(case["far"]), int(case["order"])
    if case["check"] == "stirling":
        first, second = _stirling_defect(near, chi, order), _stirling_defect(far, chi, order)
        proxy = stirling_log_gamma_star(near, chi, order).error_proxy
        meta: dict[str, Any] = {"errorProxy": proxy}
    else:
        first, second = log_mean_defect(near, chi, order), log_mean_defect(far, chi, order)
        meta = {}
    reduction = first / second if second else math.inf
    meta["reduction"] = reduction
    return VerificationReport(
        case, first, second, first - second, reduction >= MIN_REDUCTION, meta
    )


@lru_cache(maxsize=1)
def default_registry() -> SuiteRegistry:
    """The registry of every built-in suite."""
    registry = SuiteRegistry()
    character = frozenset({"modulus", "char"})
    registry.register(
        SUITE_BOOLE,
        build_boole_cases,
        run_boole_case,
        description="Classical Boole summation against direct alternating sums",
        required_params=frozenset({"family", "alpha", "beta", "l"}),
    )
    registry.register(
        SUITE_CEM,
        build_cem_cases,
        run_cem_case,
        description="Character Euler-MacLaurin summation",
        required_params=character | {"family", "alpha", "beta", "l"},
    )
    registry.register(
        SUITE_CHAR_BOOLE,
        build_char_boole_cases,
        run_char_boole_case,
        description="Character Boole summation and its even/all split",
        required_params=character | {"check", "family", "alpha", "beta", "l"},
    )
    registry.register(
        SUITE_LFUNC_ROUTES,
        build_lfunc_cases,
        run_lfunc_case,
        description="Alternating L-function routes, partial sums and special values",
        required_params=character | {"check"},
    )
    registry.register(
        SUITE_LERCH,
        build_lerch_cases,
        run_lerch_case,
        description="Lerch formula, gamma-star routes and digamma analogue",
        required_params=character | {"check", "a"},
    )
    registry.register(
        SUITE_RECIP1,
        build_recip1_cases,
        run_recip1_case,
        description="Reciprocity of the character Hardy-Berndt sum S_p",
        required_params=character | {"check", "p", "b", "c"},
    )
    registry.register(
        SUITE_RECIP2,
        build_recip2_cases,
        run_recip2_case,
        description="Reciprocity of the character sums S_p^(1) and S_p^(2)",
        required_params=character | {"p", "b", "c"},
    )
    registry.register(
        SUITE_INTEGRALS,
        build_integral_cases,
        run_integral_case,
        description="Closed forms of products of character Euler functions",
        required_params=character | {"l", "p", "b", "c"},
    )
    registry.register(
        SUITE_GF,
        build_gf_cases,
        run_gf_case,
        description="Generating-function coefficients of the boundary values",
        required_params=character | {"kernel", "order"},
    )
    registry.register(
        SUITE_IDENTITIES,
        build_identity_cases,
        run_identity_case,
        description="Periodic Bernoulli and Euler function identities",
        required_params=frozenset({"check"}),
    )
    registry.register(
        SUITE_CLOSED_FORM,
        build_closed_form_cases,
        run_closed_form_case,
        description="Closed-form values of the alternating L-function",
        required_params=character | {"check"},
    )
    registry.register(
        SUITE_ASYMPTOTICS,
        build_asymptotic_cases,
        run_asymptotic_case,
        description="Decay of the Stirling and log-mean expansion errors",
        required_params=character | {"check", "near", "far", "order"},
    )
    return registry
