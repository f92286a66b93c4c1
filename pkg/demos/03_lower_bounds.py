"""Walkthrough: makespan lower bounds and the relaxed worst-case regret.

Exact worst-case regret needs an optimal makespan per scenario, which is
NP-hard to get. The relaxed regret swaps the optimum for a combinatorial
lower bound: cheap, and always an upper bound on the true regret.
"""
import random

from robust_sched import (
    Instance,
    Scenario,
    exact_worst_case_regret,
    lb_combined,
    optimal_makespan,
    pm,
    relaxed_regret,
)

# The four bounds on a small scenario, next to the true optimum.
inst = Instance(p=((4, 7, 3), (5, 6, 6)), release=((2, 4), (3, 8), (0, 5)))
scenario = Scenario(r=(2, 8, 0))
report = lb_combined(scenario, inst)
best = optimal_makespan(inst, scenario)
print("scenario:", scenario.r)
print(f"  averaged work bound  {float(report.lb_avg):6.2f}")
print(f"  single-job bound     {report.lb1:6d}")
print(f"  anchored average     {float(report.lb2):6.2f}")
print(f"  batched suffix bound {report.lb3:6d}")
print(f"  combined             {float(report.combined):6.2f}"
      f"   (true optimum {best.makespan})")
print("  per-anchor terms:", {
    job: (float(avg), batched) for job, (avg, batched) in report.per_job.items()
})

# The combined bound is valid on every scenario, so the relaxed regret
# dominates the exact one on every schedule.
rng = random.Random(11)
print("\nrelaxed vs exact worst-case regret on random instances:")
for trial in range(6):
    n, m = rng.randint(3, 5), rng.randint(1, 2)
    p = tuple(tuple(rng.randint(1, 9) for _ in range(n)) for _ in range(m))
    release = tuple(
        (lo, lo + rng.randint(0, 6))
        for lo in (rng.randint(0, 8) for _ in range(n))
    )
    inst = Instance(p=p, release=release)
    schedule = pm(inst)
    relaxed = relaxed_regret(schedule, inst)
    exact = exact_worst_case_regret(schedule, inst)
    print(f"  trial {trial}: relaxed {float(relaxed.value):6.2f}   "
          f"exact {exact.value:3d}")
