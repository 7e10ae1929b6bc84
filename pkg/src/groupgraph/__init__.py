"""Power, enhanced power, commuting and prime graphs of finite groups."""

__version__ = "0.1.0"

from .classify import (  # noqa: E402
    PowerCommutingClass,
    TheoremReport,
    has_prime_square_subgroup,
    is_eppo,
    is_generalized_quaternion,
    maximal_cyclic_subgroups,
    power_eq_commuting_class,
    prime_graph_is_null,
    verify_theorems,
)
from .graphs import (  # noqa: E402
    DirectedPowerGraph,
    Graph,
    build_graph,
    difference_graph,
    directed_power_graph,
    enhanced_from_directed,
    graphs_equal,
    prime_graph,
)
from .groups import (  # noqa: E402
    Alternating,
    Cyclic,
    Dihedral,
    DirectProduct,
    ElementaryAbelian,
    ElementSet,
    FiniteGroup,
    GeneralizedQuaternion,
    SemidirectCyclic,
    Symmetric,
    build_group,
    center,
    cyclic_subgroup,
    element_order,
    exponent,
    generated_subgroup,
    is_cyclic_set,
    order_spectrum,
)
from .invariants import (  # noqa: E402
    InvariantReport,
    PerfectnessParams,
    chromatic_number,
    clique_number,
    comparability_coloring,
    diameter_and_components,
    domination_number,
    euler_phi,
    independence_number,
    invariant_report,
    perfectness_check,
    power_omega_chi_formula,
)
from .parser import parse_group_spec  # noqa: E402
