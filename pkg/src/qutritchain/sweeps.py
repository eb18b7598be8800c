"""Parameter sweeps over the spin-1 pair model, emitted as deterministic CSV.

Output format: one header row, comma separators, newline line endings, every
float printed with 12 significant digits.  Row order is the lexicographic
product of the axis grids, so identical configurations produce byte-identical
files; grid evaluation may be spread over worker processes without changing
the output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Optional

import numpy as np

from . import densecode, entanglement, thermal
from .numkernel import Spectrum, sym_eig
from .qstate import BipartiteDims
from .spinmodels import QutritChainParams, central_block, closed_form_energies, hamiltonian_qutrit
from .thermal import MultipartiteDims

QUTRIT_DIMS = BipartiteDims(3, 3)
QUTRIT_SPLIT = MultipartiteDims((3, 3))

MEASURE_NAMES = (
    "negativity",
    "chen_lb",
    "alb",
    "ub",
    "purity",
    "entropy",
    "cdc",
    "udc_12",
    "udc_21",
)

SWEEP_MODES = (
    "grid-b1b2",
    "line-b1eqnegb2",
    "grid-kt",
    "grid-b2t",
    "bounds-scan",
    "densecode-scan",
)

# Axes swept per mode, outermost first.
_MODE_AXES = {
    "grid-b1b2": ("b1", "b2"),
    "line-b1eqnegb2": ("b1",),
    "grid-kt": ("k", "t"),
    "grid-b2t": ("b2", "t"),
    "bounds-scan": ("b1",),
    "densecode-scan": ("k",),
}

_DEFAULT_MEASURES = {
    "bounds-scan": ("chen_lb", "alb", "ub"),
    "densecode-scan": ("negativity", "cdc", "udc_12", "udc_21"),
}

_AXIS_LABEL = {"b1": "B1", "b2": "B2", "k": "K", "t": "T"}

_DEFAULT_RANGES = {
    "b1": (-6.0, 6.0, 101),
    "b2": (-6.0, 6.0, 101),
    "k": (-2.0, 0.0, 101),
    "t": (0.01, 2.0, 101),
}

# Residual ceiling for closed-form vs numerical spectra in spectrum runs.
SPECTRUM_RESIDUAL_TOL = 1e-9


class ConfigError(Exception):
    """Bad mode, range, measure, or output destination."""


class ConsistencyError(Exception):
    """An internal numerical cross-check failed while producing output."""


@dataclass(frozen=True)
class AxisRange:
    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        if self.count < 2:
            raise ConfigError(f"axis needs at least 2 points, got {self.count}")
        if not self.start < self.stop:
            raise ConfigError(f"axis start must be below stop, got {self.start}:{self.stop}")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepConfig:
    """One fully resolved run: fixed parameters, grids, and output selection."""

    mode: str = "grid-b1b2"
    J: float = -1.0
    K: float = -1.0
    B1: float = 0.0
    B2: float = 0.0
    T: float = 1.0
    ranges: dict = field(default_factory=dict)
    measures: tuple[str, ...] = ()
    out: Optional[str] = None
    threads: int = 1


def _axis_range(cfg: SweepConfig, axis: str) -> AxisRange:
    if axis in cfg.ranges:
        r = cfg.ranges[axis]
        if not isinstance(r, AxisRange):
            r = AxisRange(*r)
        return r
    return AxisRange(*_DEFAULT_RANGES[axis])


def _check_measures(names: Iterable[str]) -> tuple[str, ...]:
    names = tuple(names)
    for name in names:
        if name not in MEASURE_NAMES:
            raise ConfigError(f"unknown measure {name!r}; choose from {', '.join(MEASURE_NAMES)}")
    return names


_BASIS33 = None


def _antisym_basis33():
    global _BASIS33
    if _BASIS33 is None:
        _BASIS33 = entanglement.build_antisym_basis(QUTRIT_DIMS)
    return _BASIS33


def _point_state(j: float, k: float, b1: float, b2: float, t: float):
    spectrum = sym_eig(hamiltonian_qutrit(QutritChainParams(J=j, K=k, B1=b1, B2=b2)))
    rho = thermal.gibbs(spectrum, t, QUTRIT_DIMS)
    weights = thermal.boltzmann_weights(spectrum.values, t)
    return rho, spectrum, weights


def _measure_value(name: str, rho, spectrum: Spectrum, weights: np.ndarray) -> float:
    if name == "negativity":
        return entanglement.negativity(rho)
    if name == "chen_lb":
        return entanglement.chen_lower_bound(rho)
    if name == "alb":
        return entanglement.alb(rho, _antisym_basis33())
    if name == "ub":
        return entanglement.ub_mixture(spectrum, weights, QUTRIT_DIMS)
    if name == "purity":
        return thermal.purity(rho)
    if name == "entropy":
        return thermal.vn_entropy(rho)
    if name == "cdc":
        return densecode.cdc(rho)
    if name == "udc_12":
        return densecode.udc(rho, "1to2")
    if name == "udc_21":
        return densecode.udc(rho, "2to1")
    raise ConfigError(f"unknown measure {name!r}")


def _sweep_worker(task: tuple) -> tuple[float, ...]:
    j, k, b1, b2, t, names = task
    rho, spectrum, weights = _point_state(j, k, b1, b2, t)
    return tuple(_measure_value(n, rho, spectrum, weights) for n in names)


def _fmt(x: float) -> str:
    x = float(x)
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(x, ".12g")


def _csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(cell if isinstance(cell, str) else _fmt(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _point_for(cfg: SweepConfig, axes: tuple[str, ...], values: tuple[float, ...]) -> tuple:
    j, k, b1, b2, t = cfg.J, cfg.K, cfg.B1, cfg.B2, cfg.T
    for axis, value in zip(axes, values):
        if axis == "b1":
            b1 = value
        elif axis == "b2":
            b2 = value
        elif axis == "k":
            k = value
        elif axis == "t":
            t = value
    if cfg.mode == "line-b1eqnegb2":
        b2 = -b1
    return j, k, b1, b2, t


def run_sweep(cfg: SweepConfig) -> str:
    """Evaluate the configured grid and return the CSV text."""
    if cfg.mode not in SWEEP_MODES:
        raise ConfigError(f"unknown sweep mode {cfg.mode!r}; choose from {', '.join(SWEEP_MODES)}")
    axes = _MODE_AXES[cfg.mode]
    measures = _check_measures(cfg.measures or _DEFAULT_MEASURES.get(cfg.mode, ("negativity",)))
    grids = [_axis_range(cfg, a).values() for a in axes]

    combos = [()]
    for g in grids:
        combos = [c + (float(v),) for c in combos for v in g]
    tasks = [_point_for(cfg, axes, c) + (measures,) for c in combos]

    if cfg.threads > 1:
        chunk = max(1, len(tasks) // (cfg.threads * 8))
        with Pool(cfg.threads) as pool:
            results = pool.map(_sweep_worker, tasks, chunksize=chunk)
    else:
        results = [_sweep_worker(t) for t in tasks]

    rows = []
    for combo, vals in zip(combos, results):
        if not all(np.isfinite(vals)):
            raise ConsistencyError(f"non-finite measure at axis point {combo}")
        rows.append(list(combo) + list(vals))
    header = [_AXIS_LABEL[a] for a in axes] + list(measures)
    return _csv(header, rows)


_TS_MEASURES = ("negativity", "alb")


def run_threshold(cfg: SweepConfig) -> str:
    """Sweep one axis, emitting measure-vanishing temperatures and tstar."""
    requested = cfg.measures or ("negativity",)
    for name in requested:
        if name not in _TS_MEASURES:
            raise ConfigError(
                f"threshold runs support measures {', '.join(_TS_MEASURES)}, got {name!r}"
            )
    axis_keys = [a for a in ("k", "b1", "b2") if a in cfg.ranges]
    if len(axis_keys) > 1:
        raise ConfigError(f"threshold runs sweep a single axis, got ranges for {axis_keys}")
    axis = axis_keys[0] if axis_keys else "k"
    grid = _axis_range(cfg, axis).values()

    basis = _antisym_basis33()
    measure_fns = {
        "negativity": entanglement.negativity,
        "alb": lambda rho: entanglement.alb(rho, basis),
    }

    rows = []
    for value in grid:
        j, k, b1, b2, _ = _point_for(cfg, (axis,), (float(value),))
        spectrum = sym_eig(hamiltonian_qutrit(QutritChainParams(J=j, K=k, B1=b1, B2=b2)))
        ts_vals = {
            name: thermal.estimate_ts(spectrum, QUTRIT_DIMS, measure_fns[name])
            for name in requested
        }
        t_ball = thermal.tstar(spectrum, QUTRIT_SPLIT)
        for name, ts in ts_vals.items():
            if ts is not None and t_ball is not None and ts > t_ball + 1e-6:
                raise ConsistencyError(
                    f"{name} persists to T={ts:.6f} beyond the separable ball at T*={t_ball:.6f}"
                )
        row = [float(value)]
        row += ["" if ts_vals[name] is None else ts_vals[name] for name in requested]
        row.append("" if t_ball is None else t_ball)
        rows.append(row)
    header = [_AXIS_LABEL[axis]] + [f"ts_{name}" for name in requested] + ["tstar"]
    return _csv(header, rows)


def run_spectrum(cfg: SweepConfig) -> str:
    """Emit closed-form energy labels E1..E9 plus the residual against sym_eig."""
    axis_keys = [a for a in ("b1", "b2", "k") if a in cfg.ranges]
    if len(axis_keys) > 1:
        raise ConfigError(f"spectrum runs sweep at most one axis, got ranges for {axis_keys}")
    if axis_keys:
        axis = axis_keys[0]
        points = [_point_for(cfg, (axis,), (float(v),)) for v in _axis_range(cfg, axis).values()]
    else:
        points = [(cfg.J, cfg.K, cfg.B1, cfg.B2, cfg.T)]

    rows = []
    for j, k, b1, b2, _ in points:
        params = QutritChainParams(J=j, K=k, B1=b1, B2=b2)
        cf = closed_form_energies(params)
        inner = np.sort(np.linalg.eigvalsh(central_block(params)))
        numerical = sym_eig(hamiltonian_qutrit(params)).values
        labeled = np.array([cf.e1, cf.e2, cf.e3, inner[0], inner[1], inner[2], cf.e7, cf.e8, cf.e9])
        residual = float(np.max(np.abs(np.sort(labeled) - numerical)))
        if residual >= SPECTRUM_RESIDUAL_TOL:
            raise ConsistencyError(
                f"closed-form spectrum residual {residual:.3e} at (J={j}, K={k}, B1={b1}, B2={b2})"
            )
        rows.append([j, k, b1, b2] + [float(e) for e in labeled] + [residual])
    header = ["J", "K", "B1", "B2"] + [f"E{i}" for i in range(1, 10)] + ["residual"]
    return _csv(header, rows)


def single_point_report(cfg: SweepConfig) -> str:
    """Full BoundReport at the fixed parameter point, as key=value lines."""
    rho, spectrum, weights = _point_state(cfg.J, cfg.K, cfg.B1, cfg.B2, cfg.T)
    report = entanglement.bound_report(rho, spectrum, weights)
    lines = [f"{name}={_fmt(value)}" for name, value in report.as_dict().items()]
    return "\n".join(lines) + "\n"
