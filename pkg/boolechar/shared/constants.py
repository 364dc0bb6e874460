"""Shared constants used across the library, the suites and the CLI."""

from __future__ import annotations

# Function kinds
KIND_BERNOULLI = "bernoulli"
KIND_EULER = "euler"

VALID_KINDS = frozenset({KIND_BERNOULLI, KIND_EULER})

# L-function routes
ROUTE_SERIES = "series"
ROUTE_HURWITZ = "hurwitz"
ROUTE_INTEGRAL = "integral"

VALID_ROUTES = frozenset({ROUTE_SERIES, ROUTE_HURWITZ, ROUTE_INTEGRAL})

# Gamma-star routes
GAMMA_ROUTE_QUOTIENT = "quotient"
GAMMA_ROUTE_PARTIAL_PRODUCT = "partial_product"
GAMMA_ROUTE_LOG_FORMULA = "log_formula"

VALID_GAMMA_ROUTES = frozenset(
    {GAMMA_ROUTE_QUOTIENT, GAMMA_ROUTE_PARTIAL_PRODUCT, GAMMA_ROUTE_LOG_FORMULA}
)

# Generating-function kernels
KERNEL_EXP = "exp"
KERNEL_COS = "cos"
KERNEL_SIN = "sin"
KERNEL_COSH = "cosh"
KERNEL_SINH = "sinh"

VALID_KERNELS = frozenset({KERNEL_EXP, KERNEL_COS, KERNEL_SIN, KERNEL_COSH, KERNEL_SINH})

# Hardy-Berndt sum conventions
CONVENTION_DEFINITION = "definition"
CONVENTION_PROOF = "proof"

VALID_CONVENTIONS = frozenset({CONVENTION_DEFINITION, CONVENTION_PROOF})

# Test-function families for the summation suites
FAMILY_EXP = "exp"
FAMILY_POWER = "power"
FAMILY_RECIPROCAL = "reciprocal"
FAMILY_LOG = "log"

VALID_FAMILIES = frozenset({FAMILY_EXP, FAMILY_POWER, FAMILY_RECIPROCAL, FAMILY_LOG})

# Suites
SUITE_BOOLE = "boole"
SUITE_CEM = "cem"
SUITE_CHAR_BOOLE = "char-boole"
SUITE_LFUNC_ROUTES = "lfunc-routes"
SUITE_LERCH = "lerch"
SUITE_RECIP1 = "recip1"
SUITE_RECIP2 = "recip2"
SUITE_INTEGRALS = "integrals"
SUITE_GF = "gf"
SUITE_IDENTITIES = "identities"
SUITE_CLOSED_FORM = "closed-form"
SUITE_ASYMPTOTICS = "asymptotics"

VALID_SUITES = frozenset(
    {
        SUITE_BOOLE,
        SUITE_CEM,
        SUITE_CHAR_BOOLE,
        SUITE_LFUNC_ROUTES,
        SUITE_LERCH,
        SUITE_RECIP1,
        SUITE_RECIP2,
        SUITE_INTEGRALS,
        SUITE_GF,
        SUITE_IDENTITIES,
        SUITE_CLOSED_FORM,
        SUITE_ASYMPTOTICS,
    }
)

# Output formats
FORMAT_JSON = "json"
FORMAT_CSV = "csv"

VALID_FORMATS = frozenset({FORMAT_JSON, FORMAT_CSV})

# Grid profiles
PROFILE_QUICK = "quick"
PROFILE_STANDARD = "standard"
PROFILE_FULL = "full"

VALID_PROFILES = frozenset({PROFILE_QUICK, PROFILE_STANDARD, PROFILE_FULL})

# Case statuses
CASE_STATUS_PASSED = "passed"
CASE_STATUS_FAILED = "failed"
CASE_STATUS_ERROR = "error"

VALID_CASE_STATUSES = frozenset({CASE_STATUS_PASSED, CASE_STATUS_FAILED, CASE_STATUS_ERROR})

# Tolerances
DEFAULT_EXACT_TOL = 0.0
DEFAULT_SUMMATION_TOL = 1e-10
DEFAULT_ROUTE_TOL = 1e-8
DEFAULT_PARTIAL_TOL = 1e-9
DEFAULT_LERCH_TOL = 1e-8
DEFAULT_PRODUCT_TOL = 1e-4
DEFAULT_COMPLEX_RECIP_TOL = 1e-10
DEFAULT_INTEGRAL_ZERO_TOL = 1e-10
DEFAULT_INTEGRAL_TOL = 1e-8
DEFAULT_GF_TOL = 1e-10
DEFAULT_DERIVATIVE_TOL = 1e-6
DEFAULT_CLOSED_FORM_TOL = 1e-9

# Numeric kernels
DEFAULT_ZETA_TOL = 1e-15
DEFAULT_QUAD_REL_TOL = 1e-13
DEFAULT_QUAD_ABS_TOL = 1e-14
QUAD_NODES = 16
QUAD_MAX_DEPTH = 30

# L-function series route
SERIES_BLOCKS = 40
SERIES_TAIL_TERMS = 12
TAIL_PERIODS = 16
TAIL_IBP_TERMS = 12

# Exit codes
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG_ERROR = 2

# Environment variables
ENV_JOBS = "BOOLECHAR_JOBS"
ENV_LOG_LEVEL = "BOOLECHAR_LOG_LEVEL"
ENV_FORMAT = "BOOLECHAR_FORMAT"
ENV_PROFILE = "BOOLECHAR_PROFILE"

REPORT_SCHEMA_VERSION = "1"
