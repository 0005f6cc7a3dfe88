"""
    @file:              config.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       This file contains the Settings class, the tolerances, lattice depth and working thresholds
                        shared by every operation of the package.
"""

import math
import os

from attrs import evolve, field, frozen, validators


@frozen
class Settings:
    """
    Tolerances, lattice depth and thresholds. Operations take a `settings` keyword defaulting to DEFAULT_SETTINGS.

    Attributes
    ----------
    tol : float
        Construction residual tolerance (series truncation, unitarity of constructed values).
    audit_tol : float
        Tolerance of cocycle and compatibility comparisons.
    lattice_depth : int
        Common denominator m of the barycentric lattices.
    seed : int
        Seed of every random draw made on behalf of the caller.
    flux_margin : float
        Eigenphases of boundary holonomies must stay within pi - flux_margin.
    extension_diameter : float
        Largest boundary diameter accepted by the series unitary extension.
    polar_reach : float
        Largest ||xx* - 1|| accepted by the polar projection.
    flatness_threshold : float
        Largest flatness accepted by trivializations and extensions, 1/(7 sqrt 2) by default.
    """
    tol: float = field(default=1e-9, validator=validators.gt(0))
    audit_tol: float = field(default=1e-7, validator=validators.gt(0))
    lattice_depth: int = field(default=4, validator=validators.gt(0))
    seed: int = field(default=0)
    flux_margin: float = field(default=0.1, validator=validators.ge(0))
    extension_diameter: float = field(default=0.5, validator=validators.gt(0))
    polar_reach: float = field(default=7 / 9, validator=validators.gt(0))
    flatness_threshold: float = field(default=1 / (7 * math.sqrt(2)), validator=validators.gt(0))

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Settings read from the ALMOSTFLAT_TOL, ALMOSTFLAT_LATTICE_DEPTH and ALMOSTFLAT_SEED environment variables.

        Returns
        -------
        settings : Settings
            Defaults overridden by the variables that are set.
        """
        overrides = {}
        if "ALMOSTFLAT_TOL" in os.environ:
            overrides["tol"] = float(os.environ["ALMOSTFLAT_TOL"])
        if "ALMOSTFLAT_LATTICE_DEPTH" in os.environ:
            overrides["lattice_depth"] = int(os.environ["ALMOSTFLAT_LATTICE_DEPTH"])
        if "ALMOSTFLAT_SEED" in os.environ:
            overrides["seed"] = int(os.environ["ALMOSTFLAT_SEED"])

        return cls(**overrides)

    def replace(self, **changes) -> "Settings":
        """
        Copy of the settings with some fields changed.

        Returns
        -------
        settings : Settings
            New settings.
        """
        return evolve(self, **changes)


DEFAULT_SETTINGS = Settings()
