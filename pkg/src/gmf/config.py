"""Run configuration and shared numeric defaults.

External formats and docs are 1-based; everything internal is 0-based.
All comparisons are relative with an absolute floor near zero.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-9            # generic identity / inequality tolerance
DEFAULT_PSD_TOL = 1e-10       # relative pivot tolerance for PSD tests
ABS_FLOOR = 1e-12             # absolute floor for comparisons near zero
OMEGA_TOL = 1e-9              # |(chi,1)_{G_gamma}| > OMEGA_TOL means gamma is in Omega
DEFAULT_ENUM_CAP = 20_000_000 # max n**m sequences enumerated
GROUP_ORDER_CAP = 40320       # 8!; largest supported group order
PERMANENT_RYSER_CAP = 24
PERMANENT_NAIVE_CAP = 9


def scaled_tol(tol: float, ref) -> float:
    """Relative tolerance with the absolute floor: tol * (1 + |ref|)."""
    return max(tol * (1.0 + abs(ref)), ABS_FLOOR)


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based generator; the only entropy source in the package."""
    return np.random.Generator(np.random.Philox(key=int(seed) & (2**64 - 1)))


@dataclass
class RunConfig:
    tolerance: float = DEFAULT_TOL
    psd_tol: float = DEFAULT_PSD_TOL
    enumeration_cap: int = DEFAULT_ENUM_CAP
    seed: int = 0
    thread_count: int = 1

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be > 0")
        if self.enumeration_cap < 1:
            raise ValueError("enumeration cap must be >= 1")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        """Defaults, then GMF_TOL / GMF_CAP / GMF_THREADS, then explicit overrides."""
        vals = {}
        if "GMF_TOL" in os.environ:
            vals["tolerance"] = float(os.environ["GMF_TOL"])
        if "GMF_CAP" in os.environ:
            vals["enumeration_cap"] = int(os.environ["GMF_CAP"])
        if "GMF_THREADS" in os.environ:
            vals["thread_count"] = int(os.environ["GMF_THREADS"])
        vals.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**vals)
