"""Community detection by label propagation, with a neighborhood-strength
score rule, an active-node scheduler, planted-partition benchmarks, and
an evaluation/report toolchain.
"""

from .graph import (
    CcHistogram,
    EdgeListParseError,
    Graph,
    cc_distribution,
    clustering_coefficient,
    largest_connected_component,
    mean_clustering,
    parse_edge_list,
    summary,
    write_edge_list,
)
from .lpa import (
    ActivePool,
    LpaConfig,
    NodeState,
    RunResult,
    classify_node,
    extract_communities,
    initial_labels,
    label_scores,
    neighborhood_link_count,
    run_original,
    run_speedup,
    update_node,
    write_labeling,
)
from .metrics import (
    MetricReport,
    PowerLawFit,
    ari,
    fit_power_law,
    fit_power_law_two_part,
    membership,
    modularity,
    nmi,
    score_partition,
    size_ccdf,
)
from .lfr import (
    LfrFeasibilityError,
    LfrParams,
    PlantedNetwork,
    WiringError,
    generate,
    realized_mixing,
    sample_power_law,
    write_truth,
)
from .experiment import (
    ALGORITHMS,
    AggregateReport,
    CRow,
    DEFAULT_C_GRID,
    DEFAULT_MU_GRID,
    ExperimentConfig,
    MuRow,
    RunRecord,
    aggregate_c_row,
    emit_report,
    render_csv,
    run_batch,
    run_detect,
    run_experiment,
    run_sweep,
    write_ccdf_csv,
)
from .datasets import data_dir, dataset_path, karate_graph, load_dataset

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "ActivePool",
    "AggregateReport",
    "CRow",
    "CcHistogram",
    "DEFAULT_C_GRID",
    "DEFAULT_MU_GRID",
    "EdgeListParseError",
    "ExperimentConfig",
    "Graph",
    "LfrFeasibilityError",
    "LfrParams",
    "LpaConfig",
    "MetricReport",
    "MuRow",
    "NodeState",
    "PlantedNetwork",
    "PowerLawFit",
    "RunRecord",
    "RunResult",
    "WiringError",
    "aggregate_c_row",
    "ari",
    "cc_distribution",
    "classify_node",
    "clustering_coefficient",
    "data_dir",
    "dataset_path",
    "emit_report",
    "extract_communities",
    "fit_power_law",
    "fit_power_law_two_part",
    "generate",
    "initial_labels",
    "karate_graph",
    "label_scores",
    "largest_connected_component",
    "load_dataset",
    "mean_clustering",
    "membership",
    "modularity",
    "neighborhood_link_count",
    "nmi",
    "parse_edge_list",
    "realized_mixing",
    "render_csv",
    "run_batch",
    "run_detect",
    "run_experiment",
    "run_original",
    "run_speedup",
    "run_sweep",
    "sample_power_law",
    "score_partition",
    "size_ccdf",
    "summary",
    "update_node",
    "write_ccdf_csv",
    "write_edge_list",
    "write_labeling",
    "write_truth",
]
