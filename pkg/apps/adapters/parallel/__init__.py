from apps.adapters.parallel.objective_map import (
    ProcessPoolObjectiveMap,
    SerialObjectiveMap,
    jobs_from_env,
    make_objective_map,
)

__all__ = [
    "ProcessPoolObjectiveMap",
    "SerialObjectiveMap",
    "jobs_from_env",
    "make_objective_map",
]
