import numpy as np
import pytest

from qutritchain.numkernel import sym_eig
from qutritchain.qstate import BipartiteDims
from qutritchain.spinmodels import QutritChainParams, hamiltonian_qutrit
from qutritchain.thermal import ground_state
from qutritchain.entanglement import negativity
from qutritchain.sweeps import (
    AxisRange, ConfigError, ConsistencyError, SweepConfig, run_spectrum, run_sweep,
    run_threshold, single_point_report,
)

# B2 value where the lowest central-block level meets the aligned product
# level for J=-1, K=-1.7, B1=3, frozen from a separate root-finding check
GROUND_CROSSING_B2 = 0.239826


def parse_csv(text):
    lines = text.strip().split("\n")
    header = lines[0].split(",")
    rows = [[float(x) if x else None for x in line.split(",")] for line in lines[1:]]
    return header, rows


def test_axis_range_validation():
    with pytest.raises(ConfigError):
        AxisRange(0.0, 1.0, 1)
    with pytest.raises(ConfigError):
        AxisRange(2.0, 1.0, 5)
    vals = AxisRange(0.0, 1.0, 3).values()
    assert np.allclose(vals, [0.0, 0.5, 1.0])


def test_unknown_mode_and_measure():
    with pytest.raises(ConfigError):
        run_sweep(SweepConfig(mode="bogus"))
    with pytest.raises(ConfigError):
        run_sweep(SweepConfig(measures=("bogus",)))


def test_sweep_deterministic_and_thread_invariant():
    cfg = dict(mode="grid-b1b2", K=-1.7, T=0.5,
               ranges={"b1": AxisRange(-2.0, 2.0, 5), "b2": AxisRange(-2.0, 2.0, 5)})
    serial_a = run_sweep(SweepConfig(**cfg))
    serial_b = run_sweep(SweepConfig(**cfg))
    threaded = run_sweep(SweepConfig(**cfg, threads=2))
    assert serial_a == serial_b
    assert serial_a == threaded


def test_sweep_rows_lexicographic():
    cfg = SweepConfig(mode="grid-b1b2", K=-1.0, T=1.0,
                      ranges={"b1": AxisRange(-1.0, 1.0, 3), "b2": AxisRange(0.0, 1.0, 2)})
    header, rows = parse_csv(run_sweep(cfg))
    assert header == ["B1", "B2", "negativity"]
    keys = [(r[0], r[1]) for r in rows]
    assert keys == sorted(keys)
    assert len(rows) == 6
    for r in rows:
        assert all(v is not None and np.isfinite(v) for v in r)


def test_sweep_formatting_has_no_negative_zero():
    # a line cut through a separable region produces exact zeros
    cfg = SweepConfig(mode="line-b1eqnegb2", K=-0.2, T=0.5,
                      ranges={"b1": AxisRange(0.0, 1.0, 5)})
    text = run_sweep(cfg)
    assert "-0," not in text and not text.endswith("-0\n")
    assert "\r" not in text


def test_sweep_zero_region_dominates():
    # same-sign fields beyond unit strength: the clear majority of points
    # carry no entanglement at T = 0.2, K = -1.7
    cfg = SweepConfig(mode="grid-b1b2", K=-1.7, T=0.2,
                      ranges={"b1": AxisRange(-6.0, 6.0, 41), "b2": AxisRange(-6.0, 6.0, 41)})
    header, rows = parse_csv(run_sweep(cfg))
    inside = [r for r in rows if r[0] * r[1] > 0 and abs(r[0]) > 1 and abs(r[1]) > 1]
    zero = [r for r in inside if r[2] < 1e-6]
    assert len(zero) / len(inside) > 0.78


def test_line_peak_grows_with_exchange_strength():
    peaks = []
    for k in (-0.01, -1.0, -2.0):
        cfg = SweepConfig(mode="line-b1eqnegb2", K=k, T=1.0,
                          ranges={"b1": AxisRange(0.0, 3.0, 31)})
        header, rows = parse_csv(run_sweep(cfg))
        peaks.append(max(r[1] for r in rows))
    assert peaks[0] < peaks[1] < peaks[2]


def test_b2_scan_jump_sits_at_ground_crossing():
    # the cold-row maximum step of the B2 scan lands at the level crossing
    cfg = SweepConfig(mode="grid-b2t", K=-1.7, B1=3.0,
                      ranges={"b2": AxisRange(0.14, 0.30, 81), "t": AxisRange(0.02, 0.04, 2)})
    header, rows = parse_csv(run_sweep(cfg))
    assert header == ["B2", "T", "negativity"]
    cold = [(r[0], r[2]) for r in rows if abs(r[1] - 0.02) < 1e-12]
    steps = [(abs(b[1] - a[1]), a[0]) for a, b in zip(cold, cold[1:])]
    size, where = max(steps)
    # thermal smearing shifts the steepest step a little below the crossing
    assert abs(where - GROUND_CROSSING_B2) < 0.015


def test_ground_level_jump_magnitude():
    # at zero temperature the negativity drops from about 0.64 to zero
    # across the crossing
    lo, hi = GROUND_CROSSING_B2 - 0.002, GROUND_CROSSING_B2 + 0.002
    dims = BipartiteDims(3, 3)
    vals = []
    for b2 in (lo, hi):
        spec = sym_eig(hamiltonian_qutrit(QutritChainParams(J=-1.0, K=-1.7, B1=3.0, B2=b2)))
        vals.append(negativity(ground_state(spec, dims)))
    assert vals[0] > 0.6
    assert vals[1] < 1e-10


def test_bounds_scan_headers_and_order():
    cfg = SweepConfig(mode="bounds-scan", K=-1.0, B2=-6.0, T=0.3,
                      ranges={"b1": AxisRange(0.5, 1.0, 2)})
    header, rows = parse_csv(run_sweep(cfg))
    assert header == ["B1", "chen_lb", "alb", "ub"]
    for r in rows:
        assert r[1] <= r[3] + 1e-9
        assert r[2] <= r[3] + 1e-9


def test_densecode_scan_headers():
    cfg = SweepConfig(mode="densecode-scan", K=-1.7, B1=3.0, T=1.5,
                      ranges={"k": AxisRange(-2.0, -1.9, 2)})
    header, rows = parse_csv(run_sweep(cfg))
    assert header == ["K", "negativity", "cdc", "udc_12", "udc_21"]
    assert len(rows) == 2


def test_threshold_csv_and_ordering():
    cfg = SweepConfig(B1=1.3, B2=-1.3, T=1.0, ranges={"k": AxisRange(-1.5, -1.0, 2)})
    header, rows = parse_csv(run_threshold(cfg))
    assert header == ["K", "ts_negativity", "tstar"]
    for r in rows:
        assert r[1] is not None and r[2] is not None
        assert r[1] <= r[2] + 1e-6
    assert rows[0][1] > rows[1][1]          # stronger exchange holds out longer


def test_threshold_empty_field_when_never_entangled():
    cfg = SweepConfig(K=-0.5, B2=6.0, T=1.0, ranges={"b1": AxisRange(5.999, 6.0, 2)})
    text = run_threshold(cfg)
    header, rows = parse_csv(text)
    for r in rows:
        assert r[1] is None                 # no threshold to report
        assert r[2] is not None and r[2] > 0


def test_spectrum_csv_matches_closed_forms():
    cfg = SweepConfig(K=-1.7, B1=3.0, B2=0.1)
    header, rows = parse_csv(run_spectrum(cfg))
    assert header[:4] == ["J", "K", "B1", "B2"]
    assert header[4:] == [f"E{i}" for i in range(1, 10)] + ["residual"]
    row = rows[0]
    assert row[-1] < 1e-9
    energies = np.sort(np.array(row[4:13]))
    numeric = sym_eig(hamiltonian_qutrit(QutritChainParams(J=-1.0, K=-1.7, B1=3.0, B2=0.1))).values
    assert np.max(np.abs(energies - numeric)) < 1e-9


def test_spectrum_axis_sweep():
    cfg = SweepConfig(K=-1.7, B2=0.1, ranges={"b1": AxisRange(0.0, 2.0, 3)})
    header, rows = parse_csv(run_spectrum(cfg))
    assert len(rows) == 3
    assert [r[2] for r in rows] == [0.0, 1.0, 2.0]


def test_single_point_report_format():
    cfg = SweepConfig(K=-1.7, B1=1.3, B2=-1.3, T=1.0)
    lines = single_point_report(cfg).strip().split("\n")
    keys = [ln.split("=")[0] for ln in lines]
    assert keys == ["negativity", "chen_lb", "alb", "ub", "purity",
                    "entropy", "cdc", "udc_12", "udc_21"]
    values = {ln.split("=")[0]: float(ln.split("=")[1]) for ln in lines}
    assert abs(values["negativity"] - 0.3852587643) < 1e-9
    assert values["udc_12"] == 0.0


def test_consistency_error_is_exported():
    assert issubclass(ConsistencyError, Exception)
    assert not issubclass(ConsistencyError, ConfigError)
