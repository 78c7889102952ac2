"""One-parameter families of strictly isospectral quantum potentials.

Construct rationally extended solvable models, deform them through a real
parameter ``lambda`` into families sharing one spectrum and one SUSY partner,
take the level-deleting boundary limits (pursey at ``lambda = 0``,
abraham-moses at ``lambda = -1``), and verify everything against an
independent finite-difference eigensolver.
"""

__version__ = "0.1.0"

from .models import (FAMILIES, GPT, GPT_X1, RADOSC, RADOSC_X1, SCARF1,
                     SCARF1_X1, SHOWCASE, ModelSpec, bound_state_cap,
                     default_spec, eigenfunction_minus, eigenfunction_plus,
                     energy, v_minus, v_plus, w, w_prime)
from .numerics import Grid, SampledFunction, make_grid, sample
from .oracle import (SpectrumReport, eigen_residual, spectrum_with_richardson,
                     verify_isospectral)
from .scattering import AmplitudeSet, amplitude_set, log_gamma_complex
from .susy import (ABRAHAM_MOSES, GENERIC, PURSEY, UNDEFORMED,
                   DeformationParam, DeformedFamily, am_potential,
                   build_family, deformed_excited_state, deformed_ground_state,
                   deformed_potential, parse_lambda, pursey_potential,
                   superpotential_from_ground)

__all__ = [
    "__version__",
    "FAMILIES", "RADOSC", "SCARF1", "GPT",
    "RADOSC_X1", "SCARF1_X1", "GPT_X1", "SHOWCASE",
    "ModelSpec", "default_spec", "energy", "bound_state_cap",
    "v_minus", "v_plus", "w", "w_prime",
    "eigenfunction_minus", "eigenfunction_plus",
    "Grid", "SampledFunction", "make_grid", "sample",
    "DeformationParam", "DeformedFamily", "parse_lambda", "build_family",
    "deformed_potential", "deformed_ground_state", "deformed_excited_state",
    "pursey_potential", "am_potential", "superpotential_from_ground",
    "GENERIC", "PURSEY", "ABRAHAM_MOSES", "UNDEFORMED",
    "SpectrumReport", "spectrum_with_richardson", "verify_isospectral",
    "eigen_residual",
    "AmplitudeSet", "amplitude_set", "log_gamma_complex",
]
