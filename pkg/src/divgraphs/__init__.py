"""Divisibility graphs of conjugacy class sizes in small classical groups.

The divisibility graph of a finite group has a vertex for each noncentral
conjugacy class size and an edge where one size divides the other.  This
package builds the graph three ways: from explicit size lists, from
closed-form class data for three-dimensional linear and unitary groups, and
by brute-force enumeration of classical matrix groups over small odd fields.
It also carries the centralizer-order machinery for unipotent classes
(Jordan types, q-exponents, a commutant-algebra oracle) and the companion
structures used to cross-check the graphs: prime graphs, commuting-graph
components, and centralizer-closed torus tests.
"""

from .errors import CapExceeded, VerificationError
from .graphs import (
    DivGraph,
    connected_components,
    divisibility_graph,
    from_centralizer_orders,
    graph_json,
    shape,
    shape_name,
    to_dot,
)
from .gf import GF, factorize, is_prime, split_prime_power
from .jordan import (
    JordanType,
    enumerate_types,
    from_partition,
    jordan_type,
    lie_rank,
    q_exponent,
    regular_type,
    type_label,
    verify_unipotent_bound,
)
from .generic import (
    GenericClassData,
    fundamental_group_order,
    good_prime,
    isolated_class_size,
    psl3_data,
    psl3_divgraph,
    psl3_json,
    psl3_shape,
)
from .matgroups import (
    FAMILIES,
    GroupSpec,
    GroupTable,
    ClassProfile,
    commutant_centralizer_order,
    commuting_components,
    conjugacy_profile,
    generate,
    jordan_partition,
    load_table,
    prime_graph,
    save_table,
    verify_cc_torus,
)
from .reports import AnalysisReport, analyze, report_json, report_text

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "CapExceeded",
    "ClassProfile",
    "DivGraph",
    "FAMILIES",
    "GF",
    "GenericClassData",
    "GroupSpec",
    "GroupTable",
    "JordanType",
    "VerificationError",
    "analyze",
    "commutant_centralizer_order",
    "commuting_components",
    "conjugacy_profile",
    "connected_components",
    "divisibility_graph",
    "enumerate_types",
    "factorize",
    "from_centralizer_orders",
    "from_partition",
    "fundamental_group_order",
    "generate",
    "good_prime",
    "graph_json",
    "is_prime",
    "isolated_class_size",
    "jordan_partition",
    "jordan_type",
    "lie_rank",
    "load_table",
    "prime_graph",
    "psl3_data",
    "psl3_divgraph",
    "psl3_json",
    "psl3_shape",
    "q_exponent",
    "regular_type",
    "report_json",
    "report_text",
    "save_table",
    "shape",
    "shape_name",
    "split_prime_power",
    "to_dot",
    "type_label",
    "verify_cc_torus",
    "verify_unipotent_bound",
    "__version__",
]
