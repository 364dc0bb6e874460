"""Named verification grid profiles.

A profile fixes the default parameter grid of every suite. ``standard``
is the acceptance grid; ``quick`` trims it for smoke runs and ``full``
widens it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from boolechar.shared.constants import PROFILE_FULL, PROFILE_QUICK, PROFILE_STANDARD


@dataclass(frozen=True)
class GridProfile:
    """Immutable per-suite grid defaults."""

    name: str

    # Summation suites
    summation_moduli: tuple[int, ...] = (3, 5)
    summation_orders: tuple[int, ...] = (1, 2, 3, 4)
    boole_betas: tuple[int, ...] = (4, 6)

    # Hardy-Berndt suites
    recip_moduli: tuple[int, ...] = (3, 5)
    recip2_p_values: tuple[int, ...] = (1, 3, 5)
    recip2_bc_max: int = 6
    recip1_moduli: tuple[int, ...] = (3,)
    recip1_p_values: tuple[int, ...] = (3, 5, 7)
    recip1_bc_max: int = 5
    recip1_complex_moduli: tuple[int, ...] = (5, 9)
    integral_moduli: tuple[int, ...] = (3, 5, 7)
    integral_p_max: int = 6
    integral_bc_max: int = 5

    # L-function suites
    route_moduli: tuple[int, ...] = (3, 5)
    route_s_values: tuple[complex, ...] = (0.5, 1.0, 2.0, -0.5 + 0j)
    route_a_values: tuple[float, ...] = (0.25, 1.0)
    lerch_a_values: tuple[float, ...] = (0.25, 0.5, 1.5)
    product_terms: int = 100_000
    gf_moduli: tuple[int, ...] = (3, 5)
    gf_order: int = 8

    # Identity suite
    identity_moduli: tuple[int, ...] = (3, 5, 7)
    identity_max_order: int = 6
    bound_samples: int = 1000

    tags: dict[str, str] = field(default_factory=dict)


_PROFILES: dict[str, dict[str, object]] = {
    PROFILE_QUICK: {
        "name": PROFILE_QUICK,
        "summation_moduli": (3,),
        "summation_orders": (1, 2),
        "boole_betas": (4,),
        "recip_moduli": (3,),
        "recip2_p_values": (1, 3),
        "recip2_bc_max": 4,
        "recip1_p_values": (3,),
        "recip1_bc_max": 3,
        "recip1_complex_moduli": (5,),
        "integral_moduli": (3,),
        "integral_p_max": 4,
        "integral_bc_max": 3,
        "route_moduli": (3,),
        "route_s_values": (0.5, 2.0),
        "gf_moduli": (3,),
        "gf_order": 4,
        "identity_moduli": (3,),
        "identity_max_order": 3,
        "bound_samples": 100,
        "tags": {"purpose": "smoke"},
    },
    PROFILE_STANDARD: {
        "name": PROFILE_STANDARD,
        "tags": {"purpose": "acceptance"},
    },
    PROFILE_FULL: {
        "name": PROFILE_FULL,
        "summation_moduli": (3, 5, 7),
        "summation_orders": (1, 2, 3, 4, 5),
        "boole_betas": (4, 6, 9),
        "recip_moduli": (3, 5, 7, 11),
        "recip1_moduli": (3, 7, 11),
        "recip2_p_values": (1, 2, 3, 4, 5, 6, 7),
        "recip2_bc_max": 8,
        "recip1_p_values": (3, 5, 7, 9),
        "recip1_bc_max": 6,
        "recip1_complex_moduli": (5, 7, 9),
        "integral_moduli": (3, 5, 7, 11),
        "integral_p_max": 8,
        "integral_bc_max": 7,
        "route_moduli": (3, 5, 7),
        "route_s_values": (0.5, 1.0, 2.0, 3.5, -0.5 + 0j, -1.5 + 0j, 0.75 + 2j),
        "route_a_values": (0.25, 1.0, 2.5),
        "identity_moduli": (3, 5, 7, 9, 11),
        "identity_max_order": 8,
        "tags": {"purpose": "extended"},
    },
}


def get_grid_profile(name: str) -> GridProfile:
    """Get the grid profile with the given name.

    Raises:
        ValueError: If name is not a known profile.
    """
    if name not in _PROFILES:
        raise ValueError(f"Unknown profile '{name}'. Choose from: {list(_PROFILES.keys())}")
    return GridProfile(**_PROFILES[name])  # type: ignore[arg-type]
