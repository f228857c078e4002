"""knotforge: exact enumeration and classification of Lissajous and
Fourier-(1,1,2) knots via phase-torus decomposition and 2-bridge
fraction arithmetic."""

from .exactmath import (
    BigRational,
    PiRational,
    cf_evaluate,
    cf_evaluate_projective,
    even_cf_expand,
    mod_inverse,
    sin_sign,
)
from .lissajous import (
    LissajousSpec,
    classify_spec,
    decompose_phase_torus,
    enumerate_L,
    enumerate_L_family,
    extract_diagram,
    predict_flips,
    reduce_to_fundamental,
)
from .twobridge import (
    UNKNOT,
    TwoBridgeFraction,
    canonical,
    crossing_number,
    enumerate_two_bridge,
    fraction_from_diagram,
)
from .fourier import (
    FourierSpec,
    classify_fourier,
    torus_knot_spec,
    twist_knot_spec,
)

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "PiRational",
    "sin_sign",
    "mod_inverse",
    "even_cf_expand",
    "cf_evaluate",
    "cf_evaluate_projective",
    "LissajousSpec",
    "classify_spec",
    "decompose_phase_torus",
    "enumerate_L",
    "enumerate_L_family",
    "extract_diagram",
    "predict_flips",
    "reduce_to_fundamental",
    "UNKNOT",
    "TwoBridgeFraction",
    "canonical",
    "crossing_number",
    "enumerate_two_bridge",
    "fraction_from_diagram",
    "FourierSpec",
    "classify_fourier",
    "torus_knot_spec",
    "twist_knot_spec",
    "__version__",
]
