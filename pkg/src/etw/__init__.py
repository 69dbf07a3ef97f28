"""Exact edge-treewidth and layout-width toolkit for loop-free multigraphs."""

from .blocks import (
    Block,
    BlockDecomposition,
    block_decomposition,
    is_biconnected,
    is_cactus,
)
from .bounds import BoundReport, StructuralVerdicts, bound_report, p_block, verify_structural_bounds
from .errors import (
    BudgetExceeded,
    GraphFormatError,
    SizeLimitError,
    StepError,
    TimeBudgetExceeded,
)
from .families import (
    DEFAULT_ANTICHAIN,
    AntichainSpec,
    fixed_obstruction_set,
    generate,
    minimality_check,
    nonclosure_immersion_pair,
    nonclosure_topminor_pair,
    universal_p,
)
from .multigraph import (
    CutQuantities,
    GraphMetrics,
    Multigraph,
    boundary_edges,
    boundary_size,
    cut_quantities,
    graph_metrics,
    neighborhood,
    parse_graph,
    serialize_graph,
)
from .reduction import (
    BisectionInstance,
    BisectionResult,
    EtwInstance,
    ReductionVerdict,
    min_bisection_exact,
    reduce_bisection_to_etw,
    verify_reduction,
)
from .rewrites import (
    Contract,
    DeleteEdgeCopy,
    DeleteVertex,
    Dissolve,
    Lift,
    Relation,
    RewriteStep,
    WtpContract,
    apply_step,
    canonical_code,
    contains,
    isomorphic,
    legal_steps,
    weak_subdivision,
)
from .treelayout import (
    TreeLayout,
    TreeLayoutVerdict,
    block_tree_layout,
    layout_to_tree_layout,
    parse_tree_layout,
    serialize_tree_layout,
    tree_cost_profile,
    tree_layout_to_layout,
    validate_tree_layout,
)
from .widths import (
    PARAM_KINDS,
    CostKind,
    WidthCertificate,
    cost_profile,
    position_cost,
    width_exact,
)

__version__ = "0.1.0"
