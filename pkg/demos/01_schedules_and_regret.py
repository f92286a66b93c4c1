"""Walkthrough: instances, schedules, scenarios and regret.

A tiny single-machine example where the order of two jobs decides how much
we can regret our choice once the uncertain release date materializes.
"""
from robust_sched import (
    Instance,
    Scenario,
    Schedule,
    completion_profile,
    exact_worst_case_regret,
    extreme_scenarios,
    optimal_makespan,
    regret,
    regret_upper_bound,
    validate_schedule,
)

# One machine, two jobs. Job 0 takes 3 time units and may be released
# anywhere in [0, 10]; job 1 takes 4 units and is released at 0 for sure.
inst = Instance(p=((3, 4),), release=((0, 10), (0, 0)))
print("instance:", inst.m, "machine(s),", inst.n, "jobs")
print("processing times:", inst.p)
print("release intervals:", inst.release)

early_first = Schedule(machines=((1, 0),))  # the certain job first
late_first = Schedule(machines=((0, 1),))   # the uncertain job first
for schedule in (early_first, late_first):
    assert validate_schedule(schedule, inst) is None

# Under the scenario that releases job 0 as late as possible:
worst_for_job0 = Scenario(r=(10, 0))
profile = completion_profile(early_first, worst_for_job0, inst)
print("\nscenario r =", worst_for_job0.r)
print("running job 1 first:", profile.completions, "-> makespan", profile.makespan)
profile = completion_profile(late_first, worst_for_job0, inst)
print("running job 0 first:", profile.completions, "-> makespan", profile.makespan)

# The optimal makespan under that scenario is 13, so the second ordering
# regrets 4 time units there.
best = optimal_makespan(inst, worst_for_job0)
print("\noptimal makespan under that scenario:", best.makespan,
      "via", best.schedule.machines)
print("regret of job-0-first:",
      regret(late_first, worst_for_job0, inst, best.makespan))

# The worst case over the whole interval box is attained on the small set
# of extreme scenarios (one release date raised at a time):
print("\nextreme scenarios:", [s.r for s in extreme_scenarios(inst)])
for name, schedule in (("job-1-first", early_first), ("job-0-first", late_first)):
    report = exact_worst_case_regret(schedule, inst)
    print(f"worst-case regret of {name}: {report.value} "
          f"(at scenario {report.scenario.r}); "
          f"upper bound {regret_upper_bound(schedule, inst)}")
