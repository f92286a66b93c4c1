"""Constructive heuristics for the minimax-regret scheduling problem.

Three deterministic builders place one job per iteration, always appending to
the end of some machine's sequence:

* ``pm`` ranks jobs by how little work could precede them (availability
  indicator) and then picks the machine greedily by completion time under the
  chosen job's extreme scenario.
* ``pr`` scores every (machine, job) pair by completion time minus the
  combined makespan bound of the job's extreme scenario and takes the
  smallest partial-regret score.
* ``pre`` extends ``pr`` by evaluating, for every candidate placement, the
  worst partial-regret term over the extreme scenarios of all already placed
  jobs plus the candidate.

All tie-breaking is deterministic (gap indicators, then lowest job index,
then lowest machine index), so identical inputs give identical schedules.
Bound terms are compared on values scaled by the machine count, which keeps
tie detection exact for integer instances.

Two polynomial-case detectors flag instances (pairwise disjoint intervals,
or one job whose upper release bound dominates everything else) on which the
``pm`` schedule is worst-case-regret optimal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .bounds import scaled_combined_rows, scaled_extreme_bounds
from .model import Instance, Schedule

_ALGORITHMS = ("pm", "pr", "pre")
_BOUND_MODES = ("full", "short")
_TIE_BREAKS = ("lowest-index",)


@dataclass(frozen=True)
class HeuristicConfig:
    """Algorithm selection and variant switches.

    ``bound_mode`` selects how the makespan bounds feeding ``pr``/``pre`` are
    obtained: ``"full"`` precomputes them once per extreme scenario over all
    jobs, ``"short"`` recomputes them each iteration over the already placed
    jobs plus the candidate only. ``pm`` uses no bounds, so it only accepts
    the default. All algorithms are deterministic; ``seedless`` records that
    no RNG is involved.
    """

    algorithm: str = "pm"
    bound_mode: str = "full"
    tie_break: str = "lowest-index"
    seedless: bool = True

    def __post_init__(self) -> None:
        if self.algorithm not in _ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.bound_mode not in _BOUND_MODES:
            raise ValueError(f"unknown bound mode {self.bound_mode!r}")
        if self.tie_break not in _TIE_BREAKS:
            raise ValueError(f"unknown tie-break rule {self.tie_break!r}")
        if self.algorithm == "pm" and self.bound_mode != "full":
            raise ValueError("bound_mode applies to pr/pre only")
        if not self.seedless:
            raise ValueError("the constructive algorithms take no seed")


class BuildState:
    """A schedule under construction, with completion bookkeeping.

    Tracks, per machine, the completion time of the current sequence under
    every extreme scenario and under the all-lower-bounds scenario, so the
    completion of a candidate appended next is a single max/add away.
    """

    def __init__(self, inst: Instance):
        self.inst = inst
        self.u = 1
        self.remaining: set[int] = set(range(inst.n))
        self.machines: list[list[int]] = [[] for _ in range(inst.m)]
        self.per_machine_len: list[int] = [0] * inst.m
        self.placed_order: list[int] = []
        # Column t < n: completion under the extreme scenario raising job t;
        # column n: completion under the all-lower-bounds scenario.
        self._last = np.zeros((inst.m, inst.n + 1), dtype=np.int64)

    def base_completions(self) -> np.ndarray:
        """Per machine, last completion under the all-lower-bounds scenario."""
        return self._last[:, self.inst.n]

    def completions_for_jobs(self, jobs: np.ndarray) -> np.ndarray:
        """Per machine, last completion under the extreme scenarios of ``jobs``."""
        return self._last[:, jobs]

    def place(self, job: int, machine: int) -> None:
        if job not in self.remaining:
            raise ValueError(f"job {job + 1} is not available")
        lo, hi = self.inst.release[job]
        release = np.full(self.inst.n + 1, lo, dtype=np.int64)
        release[job] = hi
        row = self._last[machine]
        np.maximum(row, release, out=row)
        row += self.inst.p_array[machine, job]
        self.machines[machine].append(job)
        self.per_machine_len[machine] += 1
        self.placed_order.append(job)
        self.remaining.discard(job)
        self.u += 1

    def to_schedule(self) -> Schedule:
        return Schedule(machines=tuple(tuple(seq) for seq in self.machines))


def availability_set(inst: Instance, job: int, remaining: Iterable[int]) -> frozenset[int]:
    """Unscheduled jobs that may become available before ``job``'s latest release."""
    pool = set(remaining)
    if job not in pool:
        raise ValueError(f"job {job + 1} is not in the remaining set")
    hi = inst.release[job][1]
    return frozenset(t for t in pool if t != job and inst.release[t][0] < hi)


def pm_indicator(inst: Instance, remaining: Iterable[int]) -> int:
    """Job with the fewest potentially earlier jobs.

    Primary key: size of the availability set. Ties: smallest total averaged
    processing load of that set (compared scaled by the machine count), then
    lowest job index.
    """
    pool = sorted(set(remaining))
    if not pool:
        raise ValueError("remaining set is empty")
    best: tuple[int, int, int] | None = None
    for j in pool:
        avail = availability_set(inst, j, pool)
        load = int(sum(int(inst.sum_proc[t]) for t in avail))
        key = (len(avail), load, j)
        if best is None or key < best:
            best = key
    return best[2]


def _argmin_with_gap_tie(
    score: np.ndarray,
    cand: np.ndarray,
    gap_of: "callable",
) -> tuple[int, int]:
    """Pick (job, machine) minimizing ``score[(machine, cand_idx)]``.

    Among tied cells the largest gap indicator wins, then the lowest job
    index, then the lowest machine index.
    """
    best = score.min()
    ties = np.argwhere(score == best)
    if len(ties) == 1:
        machine, c = int(ties[0][0]), int(ties[0][1])
        return int(cand[c]), machine
    choice: tuple[int, int, int] | None = None
    for machine, c in ties:
        job = int(cand[c])
        key = (-gap_of(int(machine), job), job, int(machine))
        if choice is None or key < choice:
            choice = key
    return choice[1], choice[2]


def pm(inst: Instance) -> Schedule:
    """Availability-guided greedy construction on the makespan alone.

    Each iteration schedules the job least likely to have work in front of it
    and appends it to the machine where it finishes earliest under its own
    extreme scenario.
    """
    n = inst.n
    state = BuildState(inst)
    rlo, rhi = inst.release_lo, inst.release_hi
    sump = inst.sum_proc

    earlier = rlo[None, :] < rhi[:, None]  # earlier[j, t]: t may precede j
    np.fill_diagonal(earlier, False)
    active = np.ones(n, dtype=bool)
    avail_count = earlier.sum(axis=1)
    avail_load = earlier @ sump  # scaled by m

    for _ in range(n):
        cand = np.flatnonzero(active)
        keys = zip(
            avail_count[cand].tolist(), avail_load[cand].tolist(), cand.tolist()
        )
        job = min(keys)[2]
        completions = inst.p_array[:, job] + np.maximum(
            state.base_completions(), rhi[job]
        )
        machine = int(np.argmin(completions))
        state.place(job, machine)
        active[job] = False
        affected = earlier[:, job] & active
        avail_count[affected] -= 1
        avail_load[affected] -= sump[job]
    return state.to_schedule()


def _short_bounds_pr(
    inst: Instance, state: BuildState, cand: np.ndarray
) -> np.ndarray:
    """Scaled combined bound per candidate over placed jobs plus the candidate,
    under the candidate's own extreme scenario."""
    placed = np.array(state.placed_order, dtype=np.int64)
    v = cand.size
    s = placed.size
    release = np.empty((v, s + 1), dtype=np.int64)
    proc = np.empty((v, s + 1), dtype=np.int64)
    if s:
        release[:, :s] = inst.release_lo[placed]
        proc[:, :s] = inst.min_proc[placed]
    release[:, s] = inst.release_hi[cand]
    proc[:, s] = inst.min_proc[cand]
    return scaled_combined_rows(release, proc, inst.m)


def pr(inst: Instance, config: HeuristicConfig | None = None) -> Schedule:
    """Partial-regret greedy construction.

    Each iteration appends the (machine, job) pair minimizing the job's
    completion time minus the combined makespan bound of its extreme
    scenario. Tied pairs prefer the largest gap between the machine's current
    completion (all release dates low) and the job's latest release, closing
    idle windows first.
    """
    config = config or HeuristicConfig(algorithm="pr")
    n, m = inst.n, inst.m
    state = BuildState(inst)
    rhi = inst.release_hi
    full_bounds = (
        scaled_extreme_bounds(inst) if config.bound_mode == "full" else None
    )

    for _ in range(n):
        cand = np.array(sorted(state.remaining), dtype=np.int64)
        base = state.base_completions()
        completions = inst.p_array[:, cand] + np.maximum(
            base[:, None], rhi[cand][None, :]
        )
        if full_bounds is not None:
            scaled_lb = full_bounds[cand]
        else:
            scaled_lb = _short_bounds_pr(inst, state, cand)
        score = m * completions - scaled_lb[None, :]

        def gap(machine: int, job: int) -> int:
            return max(int(base[machine]) - int(rhi[job]), 0)

        job, machine = _argmin_with_gap_tie(score, cand, gap)
        state.place(job, machine)
    return state.to_schedule()


def _short_bounds_pre(
    inst: Instance, placed: np.ndarray, cand: np.ndarray
) -> np.ndarray:
    """Scaled combined bounds over placed jobs plus each candidate.

    Entry ``[c, t]`` is the bound of the subset ``placed + {cand[c]}`` under
    the extreme scenario raising the t-th subset member (the candidate itself
    sits at the last position). All candidates are batched into one kernel
    call; the tensor stays small because subsets only reach the job count.
    """
    count, s = cand.size, placed.size
    width = s + 1
    release = np.empty((count, width, width), dtype=np.int64)
    proc = np.empty((count, width), dtype=np.int64)
    if s:
        release[:, :, :s] = inst.release_lo[placed]
        proc[:, :s] = inst.min_proc[placed]
        diag = np.arange(s)
        release[:, diag, diag] = inst.release_hi[placed]
    release[:, :s, s] = inst.release_lo[cand][:, None]
    release[:, s, s] = inst.release_hi[cand]
    proc[:, s] = inst.min_proc[cand]
    scaled = scaled_combined_rows(
        release.reshape(count * width, width),
        np.repeat(proc, width, axis=0),
        inst.m,
    )
    return scaled.reshape(count, width)


def pre(inst: Instance, config: HeuristicConfig | None = None) -> Schedule:
    """Partial-regret construction with nested worst-case evaluation.

    For every candidate placement the score is the worst partial-regret term
    over the extreme scenarios of all placed jobs plus the candidate, so each
    decision already accounts for the scenarios committed so far. Tied
    placements prefer the largest average gap between the machine's
    completion under those scenarios and the candidate's latest release.
    """
    config = config or HeuristicConfig(algorithm="pre")
    n, m = inst.n, inst.m
    state = BuildState(inst)
    rlo, rhi = inst.release_lo, inst.release_hi
    full_bounds = (
        scaled_extreme_bounds(inst) if config.bound_mode == "full" else None
    )

    for _ in range(n):
        cand = np.array(sorted(state.remaining), dtype=np.int64)
        placed = np.array(state.placed_order, dtype=np.int64)
        base = state.base_completions()
        last_placed = state.completions_for_jobs(placed)  # (m, s)

        if full_bounds is not None:
            own_lb = full_bounds[cand][:, None]  # (V, 1)
            placed_lb = full_bounds[placed][None, None, :]  # (1, 1, s)
        else:
            rows = _short_bounds_pre(inst, placed, cand)  # (V, s+1)
            own_lb = rows[:, -1:]
            placed_lb = rows[:, :-1][:, None, :]  # (V, 1, s)
        own = m * np.maximum(base[None, :], rhi[cand][:, None]) - own_lb
        if placed.size:
            sched_terms = m * np.maximum(
                last_placed[None, :, :], rlo[cand][:, None, None]
            )
            sched_terms -= placed_lb
            inner = np.maximum(sched_terms.max(axis=2), own)
        else:
            inner = own
        score = inner + m * inst.p_array[:, cand].T
        score = np.ascontiguousarray(score.T)  # (m, V) to match the tie helper

        def gap(machine: int, job: int) -> int:
            if not placed.size:
                return 0
            gaps = last_placed[machine] - rhi[job]
            return int(np.maximum(gaps, 0).sum())

        job, machine = _argmin_with_gap_tie(score, cand, gap)
        state.place(job, machine)
    return state.to_schedule()


def build_schedule(inst: Instance, config: HeuristicConfig) -> Schedule:
    """Run the algorithm selected by ``config``."""
    if config.algorithm == "pm":
        return pm(inst)
    if config.algorithm == "pr":
        return pr(inst, config)
    return pre(inst, config)


def detect_disjoint(inst: Instance) -> bool:
    """True when all release intervals are pairwise disjoint (closed reading,
    so touching endpoints overlap)."""
    spans = sorted(inst.release)
    return all(spans[k][1] < spans[k + 1][0] for k in range(len(spans) - 1))


def detect_dominant_job(inst: Instance) -> int | None:
    """Job whose latest release alone dominates all other work, or None.

    A job qualifies when every other job's latest release plus the total of
    the other jobs' slowest processing times does not exceed its own latest
    release. With several qualifying jobs the one with the largest latest
    release wins (lowest index on ties).
    """
    n = inst.n
    rhi = inst.release_hi
    slowest = inst.p_array.max(axis=0)
    total = int(slowest.sum())
    order = np.argsort(-rhi, kind="stable")
    top, second = int(order[0]), int(order[1]) if n > 1 else None
    best: int | None = None
    for j in range(n):
        others_hi = int(rhi[second if j == top else top]) if n > 1 else 0
        if others_hi + (total - int(slowest[j])) <= int(rhi[j]):
            if best is None or rhi[j] > rhi[best]:
                best = j
    return best
