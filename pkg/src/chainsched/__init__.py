"""chainsched: scheduling chains of unit-time multiprocessor tasks.

Library entry points:

- workload: instances, validation, random generation, instance file format
- schedule_core: schedules, validity checking, metrics, lower bound,
  criticality
- algorithms: the LCMPF / LCF / MCF / LCMCF heuristics
- knapsack: 0-1 and fractional knapsack selection
- oracle: exact optimal makespan for desk-scale instances
- experiments: seeded sweeps and CSV tables
- report: matplotlib figures for sweep results
"""

from .algorithms import (ALGORITHMS, AlgorithmModeError, InvalidSystemError,
                         UnknownAlgorithmError, schedule, schedule_lcf,
                         schedule_lcmcf, schedule_lcmpf, schedule_mcf)
from .experiments import (ExperimentResult, ExperimentSpec,
                          find_dominance_counterexamples, gap_study,
                          read_experiment_spec, run_experiment, to_csv)
from .knapsack import KnapsackItem, select_01, select_fractional
from .oracle import BudgetExceededError, optimal_makespan, optimal_schedule
from .schedule_core import (Allocation, Schedule, ScheduleMetrics,
                            check_schedule, criticality, lower_bound, metrics,
                            read_schedule, write_schedule)
from .workload import (ChainClass, GeneratorConfig, InstanceFormatError,
                       TaskSystem, classify_chain, generate, read_system,
                       validate_system, write_system)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS", "AlgorithmModeError", "Allocation", "BudgetExceededError",
    "ChainClass", "ExperimentResult", "ExperimentSpec", "GeneratorConfig",
    "InstanceFormatError", "InvalidSystemError", "KnapsackItem", "Schedule",
    "ScheduleMetrics", "TaskSystem", "UnknownAlgorithmError", "check_schedule",
    "classify_chain", "criticality", "find_dominance_counterexamples",
    "gap_study", "generate", "lower_bound",
    "metrics", "optimal_makespan", "optimal_schedule", "read_schedule",
    "read_experiment_spec", "read_system", "run_experiment", "schedule",
    "schedule_lcf",
    "schedule_lcmcf", "schedule_lcmpf", "schedule_mcf", "select_01",
    "select_fractional", "to_csv", "validate_system", "write_schedule",
    "write_system",
]
