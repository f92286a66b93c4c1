"""Walkthrough: why evaluating n extreme scenarios is enough.

The scenario set is a box with uncountably many points, yet the worst-case
regret of any schedule is attained at one of the n extreme scenarios (all
release dates low, one raised). This demo sweeps a dense grid and shows it
never beats the extreme sweep, then prunes scenarios of jobs whose whole
interval hides behind their predecessors.
"""
import random

from robust_sched import (
    Instance,
    Schedule,
    covered_jobs,
    effective_scenarios,
    exact_worst_case_regret,
    grid_regret,
)

rng = random.Random(5)

for trial in range(5):
    n, m = rng.randint(3, 5), rng.randint(1, 2)
    p = tuple(tuple(rng.randint(1, 9) for _ in range(n)) for _ in range(m))
    release = []
    for _ in range(n):
        lo = rng.randint(0, 8)
        release.append((lo, lo + rng.randint(0, 6)))
    inst = Instance(p=p, release=tuple(release))

    machines = [[] for _ in range(m)]
    for job in range(n):
        machines[rng.randrange(m)].append(job)
    schedule = Schedule(machines=tuple(tuple(seq) for seq in machines))

    dense = grid_regret(schedule, inst, grid_points=7)
    extreme = exact_worst_case_regret(schedule, inst)
    print(f"trial {trial}: grid sweep {dense.value:3d}   "
          f"extreme sweep {extreme.value:3d}   "
          f"agree: {dense.value == extreme.value}")

# Pruning: a job whose upper release bound is covered by its predecessor's
# completion can never move the makespan through its release date.
inst = Instance(p=((10, 2, 3),), release=((0, 0), (3, 8), (20, 30)))
schedule = Schedule(machines=((0, 1, 2),))
print("\ncovered jobs:", sorted(covered_jobs(schedule, inst)))
print("effective scenarios:",
      [(job, scenario.r) for job, scenario in effective_scenarios(schedule, inst)])
pruned = exact_worst_case_regret(schedule, inst, effective_only=True)
full = exact_worst_case_regret(schedule, inst, effective_only=False)
print(f"pruned sweep {pruned.value} == full sweep {full.value}")
