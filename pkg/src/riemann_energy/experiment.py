"""Monte Carlo estimates of expected energies and the constants checks.

Every sample has its own generator seeded from ``(master_seed, N, index)``
through :class:`numpy.random.SeedSequence`, and per-degree statistics are
reduced in sample-index order with :func:`math.fsum`.  Reports are therefore
identical for any number of worker processes.
"""

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields

import numpy as np

from . import quadrature
from .asymptotics import abs_formula, zhong_formula
from .energy import energy_abs, energy_zhong
from .ensemble import MAX_DEGREE, polynomial_roots, sample_kostlan
from .exceptions import CoincidentPoints, DegreeOutOfRange, RootFindingFailure, TooManyRejections
from .kernels import C_HALF, F_HALF
from .sphere_geometry import INF, uniform_sphere_points

#: Largest tolerated fraction of degenerate samples per degree.
MAX_REJECTION_RATE = 0.01
#: Probe points of the mean-zero check.
PROBE_POINTS = (0.0 + 0.0j, INF, 1.0 + 1.0j, 3.0 - 2.0j, 0.5 - 0.25j)


@dataclass(frozen=True)
class ExperimentConfig:
    degrees: tuple
    samples_per_degree: int = 2000
    master_seed: int = 0
    workers: int = 1
    output_format: str = "csv"

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(n) for n in self.degrees))
        for n in self.degrees:
            if not 1 <= n <= MAX_DEGREE:
                raise DegreeOutOfRange(f"degree {n} outside [1, {MAX_DEGREE}]")
        if self.samples_per_degree < 1:
            raise ValueError("samples_per_degree must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass(frozen=True)
class EnergyReport:
    # field order is the CSV column order
    N: int
    n_samples: int
    n_rejected: int
    mean_abs: float
    se_abs: float
    mean_zhong: float
    se_zhong: float
    formula_abs: float
    formula_zhong: float
    z_abs: float
    z_zhong: float


CSV_COLUMNS = tuple(f.name for f in fields(EnergyReport))


@dataclass(frozen=True)
class ConstantsReport:
    C_quadrature_geodesic: float
    C_quadrature_planar: float
    C_exact: float
    robin_extrapolated: float
    robin_exact: float
    max_abs_mean_zero: float
    errors: dict = field(default_factory=dict)


def sample_seed(master_seed, N, index):
    """Seed sequence of sample ``index`` at degree ``N``."""
    return np.random.SeedSequence([int(master_seed), int(N), int(index)])


def sample_energies(N, master_seed, index):
    """``(energy_abs, energy_zhong)`` of one Kostlan zero set, or ``None`` if degenerate."""
    p = sample_kostlan(N, sample_seed(master_seed, N, index))
    try:
        roots = polynomial_roots(p)
        return energy_abs(roots).value, energy_zhong(roots).value
    except (CoincidentPoints, RootFindingFailure):
        return None


def _sample_block(args):
    N, master_seed, start, stop = args
    return [sample_energies(N, master_seed, k) for k in range(start, stop)]


def _mean_se(x):
    n = len(x)
    mean = math.fsum(x) / n
    if n < 2:
        return mean, 0.0
    var = math.fsum((v - mean) ** 2 for v in x) / (n - 1)
    return mean, math.sqrt(var / n)


def _z_score(mean, formula, se):
    if se > 0:
        return (mean - formula) / se
    if mean == formula:
        return 0.0
    return math.copysign(math.inf, mean - formula)


def summarize(N, results):
    """Build an :class:`EnergyReport` from per-sample results in index order."""
    good = [r for r in results if r is not None]
    n_rejected = len(results) - len(good)
    if n_rejected > MAX_REJECTION_RATE * len(results):
        raise TooManyRejections(f"degree {N}: {n_rejected} of {len(results)} samples rejected")
    mean_abs, se_abs = _mean_se([r[0] for r in good])
    mean_zhong, se_zhong = _mean_se([r[1] for r in good])
    f_abs = abs_formula(N).value
    f_zhong = zhong_formula(N, F_HALF).value
    return EnergyReport(
        N=N,
        n_samples=len(good),
        n_rejected=n_rejected,
        mean_abs=mean_abs,
        se_abs=se_abs,
        mean_zhong=mean_zhong,
        se_zhong=se_zhong,
        formula_abs=f_abs,
        formula_zhong=f_zhong,
        z_abs=_z_score(mean_abs, f_abs, se_abs),
        z_zhong=_z_score(mean_zhong, f_zhong, se_zhong),
    )


def _blocks(N, master_seed, n, parts):
    edges = np.linspace(0, n, parts + 1).astype(int)
    return [(N, master_seed, int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]


def run_energy_experiment(cfg):
    """Monte Carlo energies of Kostlan zeros for every degree in ``cfg``.

    Raises
    ------
    TooManyRejections
        If more than 1% of the samples at some degree were degenerate.
    """
    reports = []
    if cfg.workers == 1:
        for N in cfg.degrees:
            results = _sample_block((N, cfg.master_seed, 0, cfg.samples_per_degree))
            reports.append(summarize(N, results))
        return reports

    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        for N in cfg.degrees:
            blocks = _blocks(N, cfg.master_seed, cfg.samples_per_degree, 4 * cfg.workers)
            results = [r for block in pool.map(_sample_block, blocks) for r in block]
            reports.append(summarize(N, results))
    return reports


def format_reports(reports, fmt="csv"):
    """Serialise reports as CSV (fixed column order, 17 significant digits) or JSON."""
    if fmt == "json":
        return json.dumps([asdict(r) for r in reports], indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(
            [v if isinstance(v, int) else format(v, ".17g") for v in (getattr(r, c) for c in CSV_COLUMNS)]
        )
    return buf.getvalue()


def run_constants_check(tol=1e-8):
    """Quadrature and extrapolation values of ``C_HALF`` and the Robin constant."""
    geo = quadrature.compute_C_half_geodesic(tol)
    planar = quadrature.compute_C_half_planar(tol)
    robin = quadrature.compute_robin_constant(0.0, tol)
    mean_zero = max(abs(quadrature.mean_zero_check(z, tol)) for z in PROBE_POINTS)
    return ConstantsReport(
        C_quadrature_geodesic=geo.value,
        C_quadrature_planar=planar.value,
        C_exact=C_HALF,
        robin_extrapolated=robin,
        robin_exact=F_HALF,
        max_abs_mean_zero=mean_zero,
        errors={"geodesic": geo.error_estimate, "planar": planar.error_estimate},
    )


def identity_discrepancy(points):
    """Relative gap ``|abs - pi (zhong + C N (N-1))| / (1 + |abs|)`` for one configuration."""
    points = np.atleast_1d(points)
    n = len(points)
    e_abs = energy_abs(points).value
    e_zh = energy_zhong(points).value
    return abs(e_abs - math.pi * (e_zh + C_HALF * n * (n - 1))) / (1.0 + abs(e_abs))


def run_identity_check(n_configs=1000, max_N=50, seed=0):
    """Largest :func:`identity_discrepancy` over random uniform configurations.

    Configuration sizes are uniform on ``2..max_N`` (just ``1`` if
    ``max_N == 1``).
    """
    if n_configs < 1:
        raise ValueError("n_configs must be >= 1")
    rng = np.random.default_rng(seed)
    lo = min(2, max_N)
    worst = 0.0
    for _ in range(n_configs):
        n = int(rng.integers(lo, max_N + 1))
        worst = max(worst, identity_discrepancy(uniform_sphere_points(n, rng)))
    return worst
