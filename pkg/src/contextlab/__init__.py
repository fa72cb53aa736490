"""contextlab: mechanical verification of quantum pigeonhole and Cheshire-cat
paradoxes, Kochen-Specker colorability, magic configurations, and qudit GHZ
graphs - every construction checked both symbolically and by brute-force
matrix computation."""

from .errors import (
    ContextlabError,
    ContractViolation,
    IncompatibleOperands,
    MalformedConfiguration,
    MatrixCapExceeded,
    OperatorFormatError,
    UndefinedDistribution,
)
from .graphs import (
    WeightedGraph,
    eigenstate_family,
    enumerate_ghz_graphs,
    graph_state,
    is_ghz_graph,
    k4_graph,
    stabilizer_generators,
    stabilizer_product,
    triangle_graph,
)
from .ks import (
    KSSearchResult,
    RaySet,
    build_rayset,
    builtin_34_rays,
    builtin_48_rays,
    ks_search,
    validate_assignment,
)
from .magic import (
    MagicConfiguration,
    builtin_configurations,
    parity_contradiction,
    pm_square,
    qudit_config,
    verify_quantum_products,
)
from .reporting import CheckResult, ReportDocument
from .scenarios import (
    PrePostScenario,
    ScenarioReport,
    cheshire_cat,
    cheshire_cat_state_independent,
    ghz_pentagram,
    magic_square_pigeonhole,
    pigeonhole_original,
    pigeonhole_state_independent,
    postselection_success,
    qudit_pigeonhole,
    qudit_product_prepost,
)
from .states import (
    OutcomeProjector,
    StateVector,
    abl_probability,
    amplitude,
    joint_eigenspace,
    postselection_probability,
    spectral_projectors,
)
from .weyl import (
    MeasurementContext,
    WeylOperator,
    commutes,
    format_weyl,
    parse_weyl,
    symplectic_product,
    to_matrix,
    weyl_dagger,
    weyl_mul,
)

__version__ = "0.1.0"
