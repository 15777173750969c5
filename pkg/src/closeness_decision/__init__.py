"""Graph closeness under single-link failure and single-link construction."""

from .closed_forms import (
    Case,
    CliquesCriteria,
    case_multiplicity,
    cycle_closeness,
    cycle_maximin,
    cycle_one_tail_closeness,
    cycle_tail_min,
    cycle_tails_closeness,
    join_closeness,
    linked_cliques_additional,
    linked_cliques_closeness,
    linked_cliques_decision,
    linked_cliques_delta,
    linked_cliques_regret_exact,
    lollipop_maximax,
    path_closeness,
)
from .decision import (
    Criterion,
    CriterionKind,
    DecisionReport,
    PayoffTable,
    build_payoff_table,
    decide,
    find_saddle_points,
    score_action,
)
from .estimators import ClosenessTransformer, LinkDecisionMaker, check_graph
from .exceptions import DomainError, GraphParseError
from .graph import (
    UNREACHABLE,
    FamilySpec,
    Graph,
    all_pairs_distances,
    generate,
    load_graph,
    mutate_copy,
    parse_graph,
)
from .metrics import (
    MetricReport,
    additional_closeness,
    closeness,
    metric_report,
    residual_closeness,
    vertex_closeness,
)
from .verify import SweepReport, fixture_check, sweep

__version__ = "0.1.0"
