"""Sector decomposition of Euler characteristics on P(V)/G for finite G."""
from .fixtures import FIXTURES, action_from_descriptor, fixture_action
from .rr import (
    CapExceeded,
    Caps,
    DEFAULT_CAPS,
    LinearAction,
    RRResult,
    SectorReport,
    galois_orbits,
    kawasaki_chi,
    molien_oracle,
    sector_contribution,
    sector_vs_lefschetz,
)

__all__ = [
    "CapExceeded",
    "Caps",
    "DEFAULT_CAPS",
    "FIXTURES",
    "LinearAction",
    "RRResult",
    "SectorReport",
    "action_from_descriptor",
    "fixture_action",
    "galois_orbits",
    "kawasaki_chi",
    "molien_oracle",
    "sector_contribution",
    "sector_vs_lefschetz",
]
