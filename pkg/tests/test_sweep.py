import json
import os
import subprocess
import sys
import time

import numpy as np
import pytest

from spinring.cli import main as cli_main
from spinring.scenario import (
    ConfigError,
    ResultTable,
    list_presets,
    load_preset,
    parse_scenario,
    preset_text,
    run_scenario,
    write_results,
)

SMALL_CONFIG = """
model.family = B
model.axis = X
model.jxx = 1
ring.n = 4
ring.s = 0.5
field.direction = z
field.values = 0, 0.1, 0.2
outputs = p, delta
"""


# ------------------------------------------------------------- parsing


def test_parse_round_trip_fields():
    sc = parse_scenario(SMALL_CONFIG)
    assert sc.families == ["B"]
    assert sc.ns == [4]
    assert sc.field_values == [0.0, 0.1, 0.2]
    assert sc.outputs == ["p", "delta"]


@pytest.mark.parametrize(
    "mutation,needle",
    [
        ("ring.n = 14", "ring.n"),
        ("ring.n = 2", "ring.n"),
        ("model.family = Q", "model.family"),
        ("outputs = wibble", "outputs"),
        ("field.direction = y", "field.direction"),
        ("ring.s = 0.75", "ring.s"),
        ("bogus.key = 1", "bogus.key"),
    ],
)
def test_invalid_configs_report_field_path(mutation, needle):
    base = SMALL_CONFIG.replace("ring.n = 4", mutation) if mutation.startswith("ring.n") else SMALL_CONFIG + mutation + "\n"
    if mutation.startswith(("model.family", "outputs", "field.direction", "ring.s")):
        key = mutation.split("=")[0].strip()
        lines = [l for l in SMALL_CONFIG.splitlines() if not l.startswith(key)]
        base = "\n".join(lines + [mutation])
    with pytest.raises(ConfigError) as err:
        parse_scenario(base)
    assert needle in str(err.value)


def test_spin_one_rejects_qubit_quantities():
    text = SMALL_CONFIG.replace("ring.s = 0.5", "ring.s = 1.0").replace(
        "outputs = p, delta", "outputs = tangle"
    )
    with pytest.raises(ConfigError) as err:
        parse_scenario(text)
    assert "ring.s" in str(err.value)


def test_theta_m_rejects_odd_rings():
    text = SMALL_CONFIG.replace("ring.n = 4", "ring.n = 5").replace(
        "outputs = p, delta", "outputs = theta_m"
    )
    with pytest.raises(ConfigError) as err:
        parse_scenario(text)
    assert "theta_m" in str(err.value)


def test_steps_sweep_expands_linspace():
    sc = parse_scenario(
        "model.family = A\nmodel.axis = X\nmodel.jxx = -1\nring.n = 4\n"
        "field.direction = x\nfield.start = 0\nfield.stop = 1\nfield.steps = 5\n"
        "outputs = delta\n"
    )
    assert np.allclose(sc.field_values, [0, 0.25, 0.5, 0.75, 1.0])


def test_presets_are_valid_configs():
    for name in list_presets():
        sc = parse_scenario(preset_text(name))
        assert sc.preset == name


def test_list_presets_contents():
    names = list_presets()
    for expected in ("fig2", "fig3", "fig4a", "fig4b", "fig5", "table1", "table2-modelA", "table2-modelB"):
        assert expected in names


# ------------------------------------------------------------- output files


def test_empty_table_header_only(tmp_path):
    table = ResultTable(["b", "p"])
    path = tmp_path / "empty.csv"
    write_results(table, str(path))
    assert path.read_text() == "b,p\n"


def test_write_round_trip_12_digits(tmp_path):
    table = ResultTable(["x"], [[1 / 3], [np.pi * 1e-7], [123456.789012345]])
    path = tmp_path / "vals.csv"
    write_results(table, str(path))
    lines = path.read_text().splitlines()[1:]
    for line, row in zip(lines, table.rows):
        assert float(line) == float(f"{row[0]:.12g}")


def test_json_mirror_matches_csv(tmp_path):
    sc = parse_scenario(SMALL_CONFIG)
    table = run_scenario(sc)
    csv_path, json_path = tmp_path / "out.csv", tmp_path / "out.json"
    write_results(table, str(csv_path), "csv")
    write_results(table, str(json_path), "json")
    payload = json.loads(json_path.read_text())
    assert payload["columns"] == table.columns
    csv_rows = [line.split(",") for line in csv_path.read_text().splitlines()[1:]]
    for csv_row, json_row in zip(csv_rows, payload["rows"]):
        for a, b in zip(csv_row, json_row):
            assert float(a) == b


def test_fig5_schema_contract(tmp_path):
    sc = load_preset("fig5")
    from spinring.scenario import scenario_columns

    assert scenario_columns(sc) == ["b", "n1", "purity", "tangle", "concurrence_nn"]


# ------------------------------------------------------------- determinism


def test_identical_config_byte_identical_csv(tmp_path):
    sc = parse_scenario(SMALL_CONFIG)
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for path in paths:
        write_results(run_scenario(sc), str(path))
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_parallel_matches_serial(tmp_path, monkeypatch):
    sc = parse_scenario(SMALL_CONFIG)
    monkeypatch.setenv("SPINRING_THREADS", "1")
    serial = run_scenario(sc)
    monkeypatch.setenv("SPINRING_THREADS", "4")
    parallel = run_scenario(sc)
    assert serial.columns == parallel.columns
    for row_a, row_b in zip(serial.rows, parallel.rows):
        assert row_a == row_b


# ------------------------------------------------------------- semantics


def test_small_scenario_values():
    sc = parse_scenario(SMALL_CONFIG)
    table = run_scenario(sc)
    assert table.columns == ["b", "p", "delta"]
    assert len(table.rows) == 3
    b_values = [row[0] for row in table.rows]
    assert b_values == [0.0, 0.1, 0.2]
    for row in table.rows:
        assert 0.0 <= row[1] <= 1.0


def test_fig3_even_rows_match_sign_flipped_coupling():
    # even rings: p and C_nn are independent of the coupling sign
    sc = load_preset("fig3")
    table = run_scenario(sc)
    by_n = {row[0]: row[1:] for row in table.rows}
    flipped = parse_scenario(preset_text("fig3").replace("model.jxx = -1", "model.jxx = 1"))
    flipped.ns = [4, 6, 8, 10]
    table_flipped = run_scenario(flipped)
    for row in table_flipped.rows:
        n, p, c = row[0], row[1], row[2]
        assert abs(p - by_n[n][0]) < 1e-9
        assert abs(c - by_n[n][1]) < 1e-9


def test_odd_rings_present_in_fig3():
    table = run_scenario(load_preset("fig3"))
    ns = [row[0] for row in table.rows]
    assert ns == [4, 5, 6, 7, 8, 9, 10]
    ps = [row[1] for row in table.rows]
    assert all(0 < p <= 1 for p in ps)


# ------------------------------------------------------------- CLI


def test_cli_run_and_exit_codes(tmp_path):
    cfg = tmp_path / "ok.cfg"
    cfg.write_text(SMALL_CONFIG)
    out = tmp_path / "out.csv"
    assert cli_main(["run", "--config", str(cfg), "--out", str(out)]) == 0
    assert out.exists()

    bad = tmp_path / "bad.cfg"
    bad.write_text(SMALL_CONFIG + "ring.n = 99\n")
    assert cli_main(["run", "--config", str(bad), "--out", str(out)]) == 2

    missing = tmp_path / "missing.cfg"
    assert cli_main(["run", "--config", str(missing), "--out", str(out)]) == 2

    assert cli_main(["run", "--preset", "nope", "--out", str(out)]) == 2
    assert cli_main(["list-presets"]) == 0


def test_cli_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "spinring.cli", "list-presets"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "fig2" in proc.stdout


@pytest.mark.slow
def test_all_presets_run_end_to_end(tmp_path):
    start = time.time()
    for name in list_presets():
        table = run_scenario(load_preset(name))
        assert table.rows, name
        write_results(table, str(tmp_path / f"{name}.csv"))
    elapsed = time.time() - start
    assert elapsed < 600, f"presets took {elapsed:.0f}s"
