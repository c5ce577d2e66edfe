"""Test the command-line front end end to end."""

import logging

import pytest
import numpy as np
import pandas as pd

from libreBiortho.cli import RunConfig, main
from libreBiortho.cli.csvio import read_function, write_functions
from libreBiortho.cli.figures import hat_dictionary
from libreBiortho.cli.main import EXIT_OK, EXIT_USAGE
from libreBiortho.core import Grid, SampledFunction, combine
from libreBiortho.dictionaries import MEXICAN_HAT_PEAK
from conftest import random_targets

@pytest.fixture
def out(tmp_path):
    """Output prefix inside a fresh directory."""
    return str(tmp_path / "run_")

@pytest.fixture
def config():
    return RunConfig()

def read(path):
    return pd.read_csv(path, float_precision="round_trip")

def write_target(path, f):
    write_functions(str(path), [f])
    return str(path)

def test_dict_writes_atoms(out, config):
    """Test dict writes t plus one column per atom."""
    assert main(["dict", "--out", out]) == EXIT_OK
    frame = read(out + "dictionary.csv")
    assert list(frame.columns) == ["t", "v1", "v2", "v3", "v4", "v5"]
    assert len(frame) == config.grid_points
    assert frame["t"].iloc[0] == config.grid_start
    assert frame["t"].iloc[-1] == pytest.approx(config.grid_end)

def test_duals_written(out):
    """Test duals writes k dual columns."""
    assert main(["duals", "--out", out, "--atoms", "3"]) == EXIT_OK
    assert list(read(out + "duals.csv").columns) == ["t", "v1", "v2", "v3"]

def test_figures(out, config):
    """Test figure data: hat shape, first dual and its drift across versions."""
    assert main(["figures", "--out", out]) == EXIT_OK
    fig1 = read(out + "fig1.csv")
    fig2 = read(out + "fig2.csv")
    assert len(fig1) == len(fig2) == 1201
    assert list(fig1.columns) == ["t", "value"]
    assert list(fig2.columns) == ["t", "v1", "v2", "v3"]

    alpha = fig1["value"].to_numpy()
    peak_at = int(np.argmax(alpha))
    assert alpha[peak_at] == pytest.approx(MEXICAN_HAT_PEAK, abs=1e-4)
    assert abs(fig1["t"].iloc[peak_at]) <= config.grid.step

    # after one insertion the dual is alpha_1 / ||alpha_1||^2
    alpha_norm_sq = config.grid.step * float(np.dot(alpha, alpha))
    np.testing.assert_allclose(fig2["v1"].to_numpy(), alpha / alpha_norm_sq, rtol=0, atol=1e-10)

    drift = np.sqrt(config.grid.step * np.sum((fig2["v3"] - fig2["v2"]).to_numpy() ** 2))
    assert drift >= 1e-3

def test_figures_deterministic(tmp_path):
    """Test two identical runs produce byte-identical files."""
    first, second = str(tmp_path / "a_"), str(tmp_path / "b_")
    assert main(["figures", "--out", first]) == EXIT_OK
    assert main(["figures", "--out", second]) == EXIT_OK
    for name in ("fig1.csv", "fig2.csv"):
        with open(first + name, "rb") as a, open(second + name, "rb") as b:
            assert a.read() == b.read()

def test_figures_bad_versions(out):
    """Test versions beyond the dictionary size."""
    assert main(["figures", "--out", out, "--atoms", "3", "--versions", "1,3,5"]) == EXIT_USAGE
    assert main(["figures", "--out", out, "--versions", "3,1"]) == EXIT_USAGE
    assert main(["figures", "--out", out, "--dual-index", "2", "--versions", "1,3"]) == EXIT_USAGE

@pytest.mark.parametrize("weights,expected", [
    ([0, 0, 1, 0, 0], [0, 0, 1, 0, 0]),
    ([1, 0, 0, 0, 1], [1, 0, 0, 0, 1]),
])
def test_project_span_targets(tmp_path, out, config, weights, expected):
    """Test targets in the span are recovered exactly."""
    target = write_target(tmp_path / "target.csv", combine(hat_dictionary(config), weights))
    assert main(["project", "--out", out, "--target", target]) == EXIT_OK

    coefficients = read(out + "coefficients.csv")
    assert list(coefficients.columns) == ["index", "coefficient"]
    assert coefficients["index"].tolist() == [1, 2, 3, 4, 5]
    np.testing.assert_allclose(coefficients["coefficient"], expected, atol=1e-10)

    residuals = read(out + "residuals.csv")
    assert residuals["k"].tolist() == [1, 2, 3, 4, 5]
    assert residuals["residual_norm"].iloc[-1] <= 1e-10

def test_project_random_target(tmp_path, out, config):
    """Test the residual curve never increases."""
    target = write_target(tmp_path / "target.csv", random_targets(config.grid, 1, seed=99)[0])
    assert main(["project", "--out", out, "--target", target]) == EXIT_OK
    residuals = read(out + "residuals.csv")["residual_norm"].to_numpy()
    assert np.all(np.diff(residuals) <= 1e-12)
    projection = read(out + "projection.csv")
    assert list(projection.columns) == ["t", "value"]

def test_project_errors(tmp_path, out):
    """Test missing target and grid mismatch."""
    assert main(["project", "--out", out]) == EXIT_USAGE
    other = Grid(start=0.0, end=1.0, points=11)
    target = write_target(tmp_path / "target.csv", SampledFunction.zeros(other))
    assert main(["project", "--out", out, "--target", target]) == EXIT_USAGE
    assert main(["project", "--out", out, "--target", str(tmp_path / "missing.csv")]) == EXIT_USAGE

def test_csv_round_trip_is_exact(tmp_path, figure_grid):
    """Test written samples read back bit for bit."""
    f = random_targets(figure_grid, 1, seed=5)[0]
    path = write_target(tmp_path / "f.csv", f)
    back = read_function(path, figure_grid)
    assert np.array_equal(back.values, f.values)

@pytest.mark.parametrize("argv", [
    ["dict", "--tol", "0"],
    ["dict", "--tol", "1.5"],
    ["dict", "--grid-start", "3", "--grid-end", "1"],
    ["dict", "--grid-points", "1"],
    ["dict", "--atoms", "0"],
    ["dict", "--log-level", "LOUD"],
    ["dict", "--grid-points", "many"],
    ["nonsense"],
    [],
])
def test_usage_errors(out, argv):
    """Test invalid invocations exit with the usage code."""
    assert main(argv + ["--out", out] if argv and argv[0] == "dict" else argv) == EXIT_USAGE

def test_unwritable_output(tmp_path):
    """Test an output prefix below a regular file."""
    blocker = tmp_path / "blocker"
    blocker.write_text("not a directory")
    assert main(["dict", "--out", str(blocker / "sub" / "run_")]) == EXIT_USAGE

def test_verify_unwritable_output(tmp_path):
    """Test verify with an output prefix below a regular file."""
    blocker = tmp_path / "blocker"
    blocker.write_text("not a directory")
    assert main(["verify", "--out", str(blocker / "sub" / "run_")]) == EXIT_USAGE

def test_invalid_config_is_logged(out, caplog):
    """Test a rejected flag value is reported before exiting."""
    caplog.set_level(logging.INFO)
    assert main(["dict", "--tol", "0", "--out", out]) == EXIT_USAGE
    assert "Invalid configuration" in caplog.text

def test_help_exits_ok(capsys):
    """Test --help is a success."""
    assert main(["--help"]) == EXIT_OK
    assert "figures" in capsys.readouterr().out

def test_verify_passes(out, caplog, capsys):
    """Test verify passes and reports the rejection event."""
    caplog.set_level(logging.INFO)
    assert main(["verify", "--out", out]) == EXIT_OK

    report = read(out + "verify.csv")
    assert list(report.columns) == ["check", "measured", "tolerance", "passed"]
    assert report["passed"].all()
    assert "dependence_pruning" in report["check"].tolist()
    assert "rejected_dependent" in caplog.text
    assert "checks passed" in capsys.readouterr().out

def test_run_config_defaults():
    """Test defaults match the documented figure setup."""
    config = RunConfig()
    assert (config.grid_start, config.grid_end, config.grid_points) == (-5.0, 7.0, 1201)
    assert config.atom_count == 5
    assert config.versions == [1, 3, 5]
    assert config.grid.step == pytest.approx(0.01)
    assert config.output_file("fig1.csv") == "fig1.csv"
