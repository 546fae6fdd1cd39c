import subprocess
import sys

import pytest

from spinring_plot import EmptyDataError, FigureSpec, SchemaError, render
from spinring_plot.cli import main as cli_main

# synthetic inputs following the documented preset schemas (the CSV files
# are the only interface to the solver package)
SYNTHETIC = {
    "fig2": (
        "family,n,index,energy,delta\n"
        "A,6,0,-1.5,0\nA,6,1,-1.2,0\nB,6,0,-1.16,0.01\nB,6,1,-1.15,0.01\n"
        "A,8,0,-2.0,0\nB,8,0,-1.72,0.0002\n"
    ),
    "fig3": "n,p,concurrence_nn\n4,0.73,0.46\n6,0.95,0.19\n8,0.98,0.08\n",
    "fig4a": (
        "b,n1,purity,tangle,concurrence_d1,concurrence_d2,concurrence_d3\n"
        "0,1,0.5,1.0,0,0,0\n0,2,0.5,1.0,0,0,0\n"
        "0.4,1,0.9,0.1,0.0,0.06,0.0\n0.4,2,0.95,0.1,0.0,0.06,0.0\n"
    ),
    "fig4b": (
        "b,n1,purity,tangle,concurrence_d1,concurrence_d2,concurrence_d3,concurrence_d4\n"
        "0,1,0.5,1.0,0,0,0,0\n0,2,0.5,1.0,0,0,0,0\n"
        "0.3,1,0.9,0.1,0.0,0.09,0.002,0\n0.3,2,0.95,0.1,0.0,0.09,0.002,0\n"
    ),
    "fig5": (
        "b,n1,purity,tangle,concurrence_nn\n"
        "0,1,0.5,0.97,0.08\n0,2,0.5,0.97,0.08\n0,3,0.5,0.97,0.08\n"
        "0.4,1,0.71,0.45,0.27\n0.4,2,0.67,0.45,0.27\n0.4,3,0.65,0.45,0.27\n"
    ),
    "table1": (
        "family,n,axis,j_sign,k,flip_sites,partner_sites,ratio,raw_ratio,expected\n"
        "A,6,X,1,0,,1-2-3-4-5-6,1,-1,-1\n"
        "B,6,X,1,1,1-2,1-2-3-4,-1,1,1\n"
    ),
    "table2-modelA": (
        "b,p,theta_m,theta_m_over_pi,theta_m_half_over_pi,delta\n"
        "0.2,0.9589,1.5707,0.5,0.25,0\n0.25,0.9346,1.5707,0.5,0.25,0\n"
    ),
    "table2-modelB": (
        "b,p,theta_m,theta_m_over_pi,theta_m_half_over_pi,delta\n"
        "0,0.9849,1.5707,0.5,0.25,0.0002\n0.4,0.8622,0.8479,0.27,0.135,0.078\n"
    ),
}


def write_csv(tmp_path, preset, text=None):
    path = tmp_path / f"{preset}.csv"
    path.write_text(text if text is not None else SYNTHETIC[preset])
    return path


@pytest.mark.parametrize("preset", sorted(SYNTHETIC))
def test_every_preset_renders_nonempty_svg(tmp_path, preset):
    csv_path = write_csv(tmp_path, preset)
    out = tmp_path / f"{preset}.svg"
    render(FigureSpec(preset, str(csv_path), str(out)))
    data = out.read_text()
    assert len(data) > 500
    assert "<svg" in data


def test_pdf_output(tmp_path):
    csv_path = write_csv(tmp_path, "fig3")
    out = tmp_path / "fig3.pdf"
    render(FigureSpec("fig3", str(csv_path), str(out)))
    assert out.read_bytes().startswith(b"%PDF")


def test_schema_mismatch_names_missing_columns(tmp_path):
    broken = SYNTHETIC["fig5"].replace("purity", "purr")
    csv_path = write_csv(tmp_path, "fig5", broken)
    out = tmp_path / "fig5.svg"
    with pytest.raises(SchemaError) as err:
        render(FigureSpec("fig5", str(csv_path), str(out)))
    assert "purity" in str(err.value)
    assert not out.exists()


def test_empty_rows_error_and_no_file(tmp_path):
    header_only = SYNTHETIC["fig3"].splitlines()[0] + "\n"
    csv_path = write_csv(tmp_path, "fig3", header_only)
    out = tmp_path / "fig3.svg"
    with pytest.raises(EmptyDataError):
        render(FigureSpec("fig3", str(csv_path), str(out)))
    assert not out.exists()


def test_unknown_preset_rejected(tmp_path):
    csv_path = write_csv(tmp_path, "fig3")
    with pytest.raises(SchemaError):
        render(FigureSpec("fig9", str(csv_path), str(tmp_path / "x.svg")))


def test_sentinel_values_pass_through_verbatim(tmp_path):
    sentinels_b = [0.125, 0.625]
    sentinels_p = [0.31415926535, 0.27182818284]
    text = "b,p,theta_m,theta_m_over_pi,theta_m_half_over_pi,delta\n" + "".join(
        f"{b},{p},1.0,0.318,0.159,0.001\n" for b, p in zip(sentinels_b, sentinels_p)
    )
    csv_path = write_csv(tmp_path, "table2-modelB", text)
    out = tmp_path / "sentinel.svg"
    fig = render(FigureSpec("table2-modelB", str(csv_path), str(out)))
    main_axis = fig.axes[0]
    (line,) = [l for l in main_axis.get_lines() if l.get_label() == "p"]
    assert list(line.get_xdata()) == sentinels_b
    assert list(line.get_ydata()) == sentinels_p


def test_fig5_sentinel_purity_curve(tmp_path):
    text = (
        "b,n1,purity,tangle,concurrence_nn\n"
        "0.25,1,0.111,0.5,0.1\n0.25,2,0.222,0.5,0.1\n0.25,3,0.333,0.5,0.1\n"
    )
    csv_path = write_csv(tmp_path, "fig5", text)
    fig = render(FigureSpec("fig5", str(csv_path), str(tmp_path / "f.svg")))
    curves = {
        line.get_label(): list(line.get_ydata())
        for line in fig.axes[0].get_lines()
    }
    assert curves["b=0.25"] == [0.111, 0.222, 0.333]


def test_rendering_is_deterministic(tmp_path):
    csv_path = write_csv(tmp_path, "fig5")
    outs = [tmp_path / "one.svg", tmp_path / "two.svg"]
    for out in outs:
        render(FigureSpec("fig5", str(csv_path), str(out)))
    assert outs[0].read_bytes() == outs[1].read_bytes()


def test_cli_exit_codes(tmp_path):
    csv_path = write_csv(tmp_path, "fig3")
    out = tmp_path / "fig3.svg"
    assert cli_main(["--preset", "fig3", "--in", str(csv_path), "--out", str(out)]) == 0
    assert out.exists()
    missing = tmp_path / "missing.csv"
    assert cli_main(["--preset", "fig3", "--in", str(missing), "--out", str(out)]) == 2
    broken = write_csv(tmp_path, "fig3", "n,wrong\n1,2\n")
    assert cli_main(["--preset", "fig3", "--in", str(broken), "--out", str(out)]) == 2


def test_cli_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "spinring_plot.cli", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "--preset" in proc.stdout
