"""Exact divisor classes of divisorial strata of abelian differentials on M_g-bar."""

from .classes import (
    InvariantViolation,
    NoPositiveDenominator,
    SlopeReport,
    ZeroC0,
    component_classes,
    decomposition_in_paper,
    divisor_class,
    slope_closed_even,
    slope_closed_odd,
    slope_diaz,
    slope_report,
    spin_component_class,
)
from .core import (
    BadGenus,
    BadLength,
    BadPart,
    BadSum,
    ComponentLabel,
    DivisorClass,
    DKappaError,
    IndexSubset,
    InvalidSignature,
    Rational,
    Signature,
    enumerate_signatures,
    signature_new,
    subsets_with_size,
)
from .dejonquieres import (
    BadArity,
    NonIntegerResult,
    ZeroOrder,
    dj,
    dj_closed_all_twos,
    dj_closed_one_and_twos,
    picard_degree,
)
from .testcurves import (
    BadIndex,
    IntersectionRecord,
    intersect_A,
    intersect_B,
    intersect_B_even,
    intersect_B_odd,
    intersect_C,
    intersect_C_even,
    intersect_C_odd,
)

__version__ = "0.1.0"
