"""Unipolar and bipolar fuzzy integrals over capacities and bi-capacities."""

from .bipolar import (
    bipolar_choquet,
    bipolar_choquet_oracle,
    bipolar_shilkret,
    bipolar_sugeno,
    link_check,
)
from .bipolar_ops import (
    bipolar_max,
    bipolar_max_neg,
    bipolar_max_pos,
    symmetric_max,
    vector_bipolar_max,
)
from .core import (
    BIPOLAR,
    EPS,
    UNIT,
    BiCapacity,
    Capacity,
    Interval,
    Measure,
    ScoreVector,
    SignedCoalition,
    coalition,
    indicator,
    is_bipolar_comonotone,
    is_comonotone,
    lattice_leq,
    level_pair,
    pair_inclusion,
    validate_bicapacity,
    validate_capacity,
)
from .integrals import (
    choquet,
    choquet_negative,
    choquet_symmetric,
    shilkret,
    shilkret_negative,
    shilkret_symmetric,
    sugeno,
    sugeno_negative,
    sugeno_subset_oracle,
    sugeno_symmetric,
)

__version__ = "0.1.0"
