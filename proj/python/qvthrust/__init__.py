"""Python face of the qvthrust toolkit.

Everything heavy lives in the compiled ``_core`` module; this package
just re-exports it.
"""

from ._core import (  # noqa: F401
    ModeContext,
    boost_fields,
    c,
    colinearizing_boost,
    critical_field,
    current_vev,
    dominant_term_rate,
    drift_velocity,
    electron_mass,
    elementary_charge,
    field_normalization,
    gyro_averaged_drift,
    hbar,
    hermite_function,
    hermite_mode,
    momentum_vev,
    pair_production_rate,
    pair_thruster_f_over_p,
    pair_thruster_power,
    pcf_d,
    phi_mode,
    photon_thruster_f_over_p,
    push_particle,
    residual_kg,
    tau,
    wronskian,
    xi,
)
from ._core import __version__  # noqa: F401
