"""Walkthrough: a small benchmark sweep with pivot tables.

Draws fresh instances per (dataset, n, m, repetition) cell, runs the
requested algorithms, and pivots mean relaxed regrets into one table per
(dataset, m). Rows are deterministic given the seed base; set the
ROBUST_SCHED_THREADS environment variable to fan cells out to worker
processes. The same sweep is available from the command line:

    robust-sched bench --dataset DS1 --n-values 50,100,150 --m-values 5 \
        --algos pm,pr,pre --reps 3 --seed-base 1 --out sweep.csv --markdown
"""
from robust_sched.experiments import (
    ExperimentSpec,
    render_markdown,
    rows_to_csv,
    run_benchmark,
)

spec = ExperimentSpec(
    dataset="DS1",
    n_values=(50, 100, 150),
    m_values=(5,),
    algorithms=("pm", "pr", "pre"),
    repetitions=3,
    seed_base=1,
)
rows = run_benchmark(spec)
rows_to_csv(rows, "demo_sweep.csv")
print(f"wrote demo_sweep.csv with {len(rows)} rows\n")
print(render_markdown(rows))
print("typical row:", rows[0])
