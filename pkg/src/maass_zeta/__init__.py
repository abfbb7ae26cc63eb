"""Certified evaluation of degree-2 Maass-form L-functions.

Library layout:

- ``ball``          ball/interval arithmetic over MPFR
- ``functions``     special functions with certified enclosures
- ``besselk``       fast panel-based evaluator for K_{ir}(y)
- ``quadrature``    certified Gauss-Legendre integration
- ``forms``         Maass-form data files, validation, ray evaluation
- ``gamma_factors`` rotated Gamma-factors, conductor, bound constants
- ``grid``          FFT evaluation of completed-L / Gamma-factor grids
- ``interpolate``   damped Whittaker-Shannon off-grid evaluation
- ``zeros``         the real function Z, zero isolation and certificates
- ``turing``        zero-counting functions and completeness proofs
- ``stats``         unfolded-zero statistics and reference curves
- ``cli``           command-line pipeline
"""

from .ball import Ball, CBall, set_precision, get_precision, local_precision

__all__ = ["Ball", "CBall", "set_precision", "get_precision", "local_precision"]
__version__ = "0.1.0"
