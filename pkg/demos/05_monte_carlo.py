"""Monte Carlo check of the expected energy of Kostlan zeros.

The expected log-chordal energy of the N zeros is N^2/4 - N log N / 4 - N/4;
the Green energy expectation is -N log N / (4 pi).  This runs a small version
of ``riemann-energy estimate``; raise ``SAMPLES`` for tighter error bars.

Run with ``python demos/05_monte_carlo.py``.
"""

from riemann_energy.experiment import ExperimentConfig, run_energy_experiment

SAMPLES = 500

reports = run_energy_experiment(
    ExperimentConfig(degrees=(2, 4, 8, 16, 32), samples_per_degree=SAMPLES, master_seed=11)
)
print(f"{'N':>3} {'mean':>12} {'+/- se':>8} {'formula':>12} {'z':>6}   {'Green mean':>11} {'formula':>11}")
for r in reports:
    print(
        f"{r.N:3d} {r.mean_abs:12.5f} {r.se_abs:8.5f} {r.formula_abs:12.5f} {r.z_abs:6.2f}"
        f"   {r.mean_zhong:11.5f} {r.formula_zhong:11.5f}"
    )
