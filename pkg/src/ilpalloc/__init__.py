"""Energy-aware component-to-machine allocation as a 0-1 integer linear program."""

from .model import (
    Allocation,
    Component,
    Instance,
    Machine,
    check_feasibility,
    normalize,
    objective_value,
    total_demand,
    validate_instance,
)
from .standard_form import (
    StandardForm,
    VariableIndex,
    build_standard_form,
    decode_solution,
    dimensions,
    encode_allocation,
    nonzero_count,
    verify_solution,
)

__version__ = "0.1.0"
