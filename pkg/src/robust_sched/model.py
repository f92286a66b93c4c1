"""Domain model for robust parallel-machine scheduling with interval release dates.

An :class:`Instance` fixes unrelated per-machine processing times and one
closed release-date interval per job. A :class:`Scenario` picks one concrete
release date per job from its interval. A :class:`Schedule` assigns every job
to a position on exactly one machine; completion times follow the
release-respecting chain rule and the makespan is the largest completion
across machines.

Regret values compare a schedule's makespan under a scenario against the
optimal makespan for that scenario. The worst case over the whole scenario
box is attained on the small set of *extreme scenarios* (all release dates at
their lower bounds except a single job raised to its upper bound), which this
module constructs and prunes.

Jobs and machines are indexed 0-based throughout the API; human-readable
messages label them 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from operator import index as as_int
from typing import Iterable, Sequence, Union

import numpy as np

Time = Union[int, Fraction]


class InvalidScheduleError(ValueError):
    """Raised when an operation requires a valid schedule and gets none."""


class InfeasibleScenarioError(ValueError):
    """Raised when a scenario leaves the instance's release-date box."""


def _int_tuple(values: Iterable) -> tuple[int, ...]:
    return tuple(as_int(v) for v in values)


@dataclass(frozen=True)
class Instance:
    """A problem instance: processing-time matrix plus release-date intervals.

    ``p`` has one row per machine and one column per job (``p[i][j]`` is the
    processing time of job ``j`` on machine ``i``); all entries are positive
    integers. ``release`` holds one ``(lo, hi)`` pair per job with
    ``0 <= lo <= hi``; ``lo == hi`` encodes a deterministic release date.
    """

    p: tuple[tuple[int, ...], ...]
    release: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        rows = tuple(_int_tuple(row) for row in self.p)
        intervals = tuple((as_int(lo), as_int(hi)) for lo, hi in self.release)
        object.__setattr__(self, "p", rows)
        object.__setattr__(self, "release", intervals)
        if not rows:
            raise ValueError("instance needs at least one machine")
        n = len(rows[0])
        if n == 0:
            raise ValueError("instance needs at least one job")
        if any(len(row) != n for row in rows):
            raise ValueError("processing-time rows have unequal lengths")
        if len(intervals) != n:
            raise ValueError(
                f"expected {n} release intervals, got {len(intervals)}"
            )
        if any(v <= 0 for row in rows for v in row):
            raise ValueError("processing times must be positive")
        for j, (lo, hi) in enumerate(intervals):
            if lo < 0 or lo > hi:
                raise ValueError(
                    f"release interval of job {j + 1} must satisfy 0 <= lo <= hi"
                )

    @property
    def n(self) -> int:
        """Number of jobs."""
        return len(self.release)

    @property
    def m(self) -> int:
        """Number of machines."""
        return len(self.p)

    @cached_property
    def p_array(self) -> np.ndarray:
        arr = np.array(self.p, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def release_lo(self) -> np.ndarray:
        arr = np.array([lo for lo, _ in self.release], dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def release_hi(self) -> np.ndarray:
        arr = np.array([hi for _, hi in self.release], dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def min_proc(self) -> np.ndarray:
        """Per job, the smallest processing time over machines."""
        arr = self.p_array.min(axis=0)
        arr.setflags(write=False)
        return arr

    @cached_property
    def sum_proc(self) -> np.ndarray:
        """Per job, the processing-time total over machines (m * average)."""
        arr = self.p_array.sum(axis=0)
        arr.setflags(write=False)
        return arr


@dataclass(frozen=True)
class Scenario:
    """One release date per job, drawn from the instance's interval box."""

    r: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", _int_tuple(self.r))

    @cached_property
    def r_array(self) -> np.ndarray:
        arr = np.array(self.r, dtype=np.int64)
        arr.setflags(write=False)
        return arr


@dataclass(frozen=True)
class Schedule:
    """Per-machine ordered job sequences (0-based job indices)."""

    machines: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "machines", tuple(_int_tuple(seq) for seq in self.machines)
        )

    @cached_property
    def position(self) -> dict[int, tuple[int, int]]:
        """Lookup job -> (machine, position); positions are 0-based."""
        table: dict[int, tuple[int, int]] = {}
        for i, seq in enumerate(self.machines):
            for k, job in enumerate(seq):
                table.setdefault(job, (i, k))
        return table

    def job_count(self) -> int:
        return sum(len(seq) for seq in self.machines)


@dataclass(frozen=True)
class CompletionProfile:
    """Completion time of every scheduled job, grouped per machine."""

    completions: tuple[tuple[int, ...], ...]
    makespan: int


@dataclass(frozen=True)
class ScheduleViolation:
    """First constraint violated by a schedule, with a 1-based label message."""

    kind: str  # "machine-count" | "job-out-of-range" | "duplicate-job" | "missing-job"
    job: int | None
    machine: int | None
    message: str


@dataclass(frozen=True)
class RegretReport:
    """A regret value together with the scenario that attains it.

    ``per_scenario`` maps the raised job index of each evaluated extreme
    scenario to its regret term; it is empty for reports whose scenario set
    is not the extreme family (e.g. grid sweeps). ``certified`` is False when
    an enumeration stopped on its time budget and the value is only a best
    effort.
    """

    value: Time
    scenario: Scenario | None
    per_scenario: dict[int, Time] = field(default_factory=dict)
    certified: bool = True


def validate_schedule(schedule: Schedule, inst: Instance) -> ScheduleViolation | None:
    """Check a schedule against an instance; return the first violation or None.

    A valid schedule has exactly one sequence per machine and every job in
    ``0..n-1`` exactly once across all sequences.
    """
    if len(schedule.machines) != inst.m:
        return ScheduleViolation(
            kind="machine-count",
            job=None,
            machine=None,
            message=(
                f"schedule has {len(schedule.machines)} machine sequences, "
                f"instance has {inst.m} machines"
            ),
        )
    seen = [False] * inst.n
    for i, seq in enumerate(schedule.machines):
        for job in seq:
            if job < 0 or job >= inst.n:
                return ScheduleViolation(
                    kind="job-out-of-range",
                    job=job,
                    machine=i,
                    message=f"machine {i + 1} lists unknown job {job + 1}",
                )
            if seen[job]:
                return ScheduleViolation(
                    kind="duplicate-job",
                    job=job,
                    machine=i,
                    message=f"job {job + 1} is assigned more than once",
                )
            seen[job] = True
    for job, ok in enumerate(seen):
        if not ok:
            return ScheduleViolation(
                kind="missing-job",
                job=job,
                machine=None,
                message=f"job {job + 1} is unassigned",
            )
    return None


def ensure_valid_schedule(schedule: Schedule, inst: Instance) -> None:
    violation = validate_schedule(schedule, inst)
    if violation is not None:
        raise InvalidScheduleError(violation.message)


def ensure_scenario(scenario: Scenario, inst: Instance) -> None:
    if len(scenario.r) != inst.n:
        raise InfeasibleScenarioError(
            f"scenario has {len(scenario.r)} release dates, instance has {inst.n} jobs"
        )
    for j, value in enumerate(scenario.r):
        lo, hi = inst.release[j]
        if value < lo or value > hi:
            raise InfeasibleScenarioError(
                f"release date {value} of job {j + 1} leaves [{lo}, {hi}]"
            )


def completion_profile(
    schedule: Schedule, scenario: Scenario, inst: Instance
) -> CompletionProfile:
    """Chain completion times per machine and take the makespan.

    Each job starts at the later of its release date and its predecessor's
    completion on the same machine; an empty machine contributes 0.
    """
    ensure_valid_schedule(schedule, inst)
    ensure_scenario(scenario, inst)
    completions: list[tuple[int, ...]] = []
    best = 0
    for i, seq in enumerate(schedule.machines):
        row = inst.p[i]
        current = 0
        times: list[int] = []
        for job in seq:
            current = row[job] + max(current, scenario.r[job])
            times.append(current)
        completions.append(tuple(times))
        best = max(best, current)
    return CompletionProfile(completions=tuple(completions), makespan=best)


def makespan(schedule: Schedule, scenario: Scenario, inst: Instance) -> int:
    return completion_profile(schedule, scenario, inst).makespan


def regret(
    schedule: Schedule,
    scenario: Scenario,
    inst: Instance,
    reference_makespan: int,
) -> int:
    """Makespan of the schedule under the scenario minus a reference optimum.

    The caller supplies ``reference_makespan``; a negative result means the
    reference was not actually optimal and is returned unclamped.
    """
    return makespan(schedule, scenario, inst) - reference_makespan


def extreme_scenario(inst: Instance, job: int) -> Scenario:
    """All release dates at their lower bounds except ``job`` at its upper."""
    if job < 0 or job >= inst.n:
        raise IndexError(f"job index {job} out of range for {inst.n} jobs")
    values = [lo for lo, _ in inst.release]
    values[job] = inst.release[job][1]
    return Scenario(r=tuple(values))


def lower_scenario(inst: Instance) -> Scenario:
    """Every release date at its lower bound."""
    return Scenario(r=tuple(lo for lo, _ in inst.release))


def extreme_scenarios(inst: Instance) -> list[Scenario]:
    return [extreme_scenario(inst, j) for j in range(inst.n)]


def extreme_release_matrix(inst: Instance) -> np.ndarray:
    """Row ``j`` is the release vector of the extreme scenario raising job j."""
    rows = np.tile(inst.release_lo, (inst.n, 1))
    np.fill_diagonal(rows, inst.release_hi)
    return rows


def makespans_for_release_rows(
    schedule: Schedule, inst: Instance, release_rows: np.ndarray
) -> np.ndarray:
    """Makespan of one schedule under many scenarios (one per row) at once."""
    count = release_rows.shape[0]
    best = np.zeros(count, dtype=np.int64)
    p = inst.p_array
    for i, seq in enumerate(schedule.machines):
        current = np.zeros(count, dtype=np.int64)
        for job in seq:
            current = p[i, job] + np.maximum(current, release_rows[:, job])
        np.maximum(best, current, out=best)
    return best


def extreme_makespans(schedule: Schedule, inst: Instance) -> np.ndarray:
    """Vector of makespans under each extreme scenario, indexed by raised job."""
    return makespans_for_release_rows(schedule, inst, extreme_release_matrix(inst))


def covered_jobs(schedule: Schedule, inst: Instance) -> frozenset[int]:
    """Jobs whose whole release interval is hidden behind their predecessors.

    A job at position 2 or later whose predecessor (under the all-lower-bounds
    scenario) finishes no earlier than the job's upper release bound can never
    shift the makespan through its release date, so its extreme scenario is
    redundant.
    """
    ensure_valid_schedule(schedule, inst)
    base = lower_scenario(inst)
    covered: set[int] = set()
    for i, seq in enumerate(schedule.machines):
        row = inst.p[i]
        current = 0
        for k, job in enumerate(seq):
            if k >= 1 and current >= inst.release[job][1]:
                covered.add(job)
            current = row[job] + max(current, base.r[job])
    return frozenset(covered)


def effective_scenarios(
    schedule: Schedule, inst: Instance
) -> list[tuple[int, Scenario]]:
    """Extreme scenarios that can still attain the worst-case regret."""
    covered = covered_jobs(schedule, inst)
    return [
        (j, extreme_scenario(inst, j)) for j in range(inst.n) if j not in covered
    ]


def regret_upper_bound(schedule: Schedule, inst: Instance) -> int:
    """Upper bound on the worst-case regret needing no optimal makespans.

    Under the extreme scenario raising job j, any schedule finishes at
    ``release_hi[j] + min_i p[i][j]`` or later, so that quantity substitutes
    for the per-scenario optimum. Jobs with covered intervals are skipped;
    if every job is covered the bound degenerates to 0.
    """
    ensure_valid_schedule(schedule, inst)
    covered = covered_jobs(schedule, inst)
    if len(covered) == inst.n:
        return 0
    values = extreme_makespans(schedule, inst)
    floor = inst.release_hi + inst.min_proc
    best = None
    for j in range(inst.n):
        if j in covered:
            continue
        term = int(values[j] - floor[j])
        if best is None or term > best:
            best = term
    return 0 if best is None else best


def relabel_jobs(inst: Instance, permutation: Sequence[int]) -> Instance:
    """Instance with job j renamed to ``permutation[j]`` (a bijection)."""
    perm = list(permutation)
    if sorted(perm) != list(range(inst.n)):
        raise ValueError("permutation must be a bijection on job indices")
    p_new = [[0] * inst.n for _ in range(inst.m)]
    release_new: list[tuple[int, int]] = [(0, 0)] * inst.n
    for j, target in enumerate(perm):
        for i in range(inst.m):
            p_new[i][target] = inst.p[i][j]
        release_new[target] = inst.release[j]
    return Instance(p=tuple(tuple(row) for row in p_new), release=tuple(release_new))
