"""Minimax-regret scheduling on unrelated parallel machines with interval
release dates: evaluation, bounds, constructive heuristics, an exact
enumeration oracle at desk scale, and reproducible dataset generation."""

from .model import (
    CompletionProfile,
    InfeasibleScenarioError,
    Instance,
    InvalidScheduleError,
    RegretReport,
    Scenario,
    Schedule,
    ScheduleViolation,
    completion_profile,
    covered_jobs,
    effective_scenarios,
    extreme_scenario,
    extreme_scenarios,
    lower_scenario,
    makespan,
    regret,
    regret_upper_bound,
    validate_schedule,
)
from .bounds import (
    BoundsReport,
    lb1,
    lb2,
    lb3,
    lb_avg,
    lb_combined,
    relaxed_regret,
)
from .heuristics import (
    BuildState,
    HeuristicConfig,
    availability_set,
    build_schedule,
    detect_disjoint,
    detect_dominant_job,
    pm,
    pm_indicator,
    pr,
    pre,
)
from .oracle import (
    LimitExceededError,
    MinRegretResult,
    OptimalMakespan,
    OracleLimits,
    exact_worst_case_regret,
    exhaustive_min_regret,
    grid_regret,
    optimal_makespan,
)
from .datagen import (
    GenParams,
    derive_family,
    ds1_params,
    ds2_params,
    generate,
    random_schedule,
)
from .experiments import ExperimentSpec, run_benchmark

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "BuildState",
    "CompletionProfile",
    "ExperimentSpec",
    "GenParams",
    "HeuristicConfig",
    "InfeasibleScenarioError",
    "Instance",
    "InvalidScheduleError",
    "LimitExceededError",
    "MinRegretResult",
    "OptimalMakespan",
    "OracleLimits",
    "RegretReport",
    "Scenario",
    "Schedule",
    "ScheduleViolation",
    "availability_set",
    "build_schedule",
    "completion_profile",
    "covered_jobs",
    "derive_family",
    "detect_disjoint",
    "detect_dominant_job",
    "ds1_params",
    "ds2_params",
    "effective_scenarios",
    "exact_worst_case_regret",
    "exhaustive_min_regret",
    "extreme_scenario",
    "extreme_scenarios",
    "generate",
    "grid_regret",
    "lb1",
    "lb2",
    "lb3",
    "lb_avg",
    "lb_combined",
    "lower_scenario",
    "makespan",
    "optimal_makespan",
    "pm",
    "pm_indicator",
    "pr",
    "pre",
    "random_schedule",
    "regret",
    "regret_upper_bound",
    "relaxed_regret",
    "run_benchmark",
    "validate_schedule",
]
