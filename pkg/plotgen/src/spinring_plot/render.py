"""Render spinring preset CSVs into vector figures.

The renderers consume only the documented CSV schemas; numeric values are
passed to the plotting primitives untouched (a sentinel CSV shows up in
the figure's artist data verbatim).  Output is deterministic: the SVG hash
salt is pinned and no timestamps are embedded.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "spinring-plot"

import matplotlib.pyplot as plt  # noqa: E402


class SchemaError(ValueError):
    """Input CSV does not match the preset schema; names the missing columns."""


class EmptyDataError(ValueError):
    """Input CSV has a header but no data rows."""


REQUIRED_COLUMNS = {
    "fig2": ["family", "n", "index", "energy", "delta"],
    "fig3": ["n", "p", "concurrence_nn"],
    "fig4a": ["b", "n1", "purity", "tangle",
              "concurrence_d1", "concurrence_d2", "concurrence_d3"],
    "fig4b": ["b", "n1", "purity", "tangle",
              "concurrence_d1", "concurrence_d2", "concurrence_d3", "concurrence_d4"],
    "fig5": ["b", "n1", "purity", "tangle", "concurrence_nn"],
    "table1": ["family", "n", "axis", "j_sign", "k", "ratio", "raw_ratio", "expected"],
    "table2-modelA": ["b", "p", "theta_m_over_pi", "theta_m_half_over_pi"],
    "table2-modelB": ["b", "p", "theta_m_over_pi", "theta_m_half_over_pi"],
}


@dataclass(frozen=True)
class FigureSpec:
    preset: str
    csv_path: str
    out_path: str


def load_columns(path: str, preset: str) -> dict[str, list]:
    """Parse the CSV into per-column lists, checking the preset schema."""
    if preset not in REQUIRED_COLUMNS:
        raise SchemaError(f"unknown preset {preset!r} (have: {', '.join(sorted(REQUIRED_COLUMNS))})")
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, no header") from None
        rows = [row for row in reader if row]
    missing = [col for col in REQUIRED_COLUMNS[preset] if col not in header]
    if missing:
        raise SchemaError(f"{path}: missing columns for preset {preset}: {', '.join(missing)}")
    if not rows:
        raise EmptyDataError(f"{path}: no data rows")
    columns: dict[str, list] = {name: [] for name in header}
    for row in rows:
        for name, value in zip(header, row):
            try:
                columns[name].append(float(value))
            except ValueError:
                columns[name].append(value)
    return columns


def _subset(cols, mask):
    return {k: [v for v, keep in zip(vals, mask) if keep] for k, vals in cols.items()}


def _render_fig2(cols):
    ns = sorted({int(n) for n in cols["n"]})
    fig, axes = plt.subplots(1, len(ns), figsize=(3.2 * len(ns), 3.4), sharey=False)
    axes = [axes] if len(ns) == 1 else list(axes)
    for ax, n in zip(axes, ns):
        for family, color in (("A", "tab:blue"), ("B", "tab:red")):
            mask = [f == family and int(nn) == n for f, nn in zip(cols["family"], cols["n"])]
            sub = _subset(cols, mask)
            ax.scatter(sub["index"], sub["energy"], s=6, color=color, label=f"model {family}")
        ax.set_title(f"n = {n}")
        ax.set_xlabel("index")
    axes[0].set_ylabel("energy")
    axes[0].legend(loc="upper left", fontsize=8)
    return fig


def _render_fig3(cols):
    fig, ax = plt.subplots(figsize=(4.2, 3.4))
    ax.plot(cols["n"], cols["p"], "s-", color="tab:blue", label="p")
    ax.set_xlabel("n")
    ax.set_ylabel("p")
    twin = ax.twinx()
    twin.plot(cols["n"], cols["concurrence_nn"], "o--", color="tab:red", label="concurrence_nn")
    twin.set_ylabel("concurrence_nn")
    return fig


def _render_fig4(cols, distances):
    n1_values = sorted({int(v) for v in cols["n1"]})
    first = [int(v) == n1_values[0] for v in cols["n1"]]
    per_b = _subset(cols, first)  # scalars repeat across n1 rows
    fig, (ax_c, ax_p) = plt.subplots(1, 2, figsize=(8.4, 3.4))
    for dist in distances:
        ax_c.plot(per_b["b"], per_b[f"concurrence_d{dist}"], label=f"concurrence_d{dist}")
    ax_c.set_xlabel("b")
    ax_c.set_ylabel("concurrence")
    ax_c.legend(fontsize=8)
    for n1 in n1_values:
        mask = [int(v) == n1 for v in cols["n1"]]
        sub = _subset(cols, mask)
        ax_p.plot(sub["b"], sub["purity"], label=f"n1={n1}")
    ax_p.set_xlabel("b")
    ax_p.set_ylabel("purity")
    ax_p.legend(fontsize=7)
    inset = ax_p.inset_axes([0.55, 0.12, 0.4, 0.35])
    inset.plot(per_b["b"], per_b["tangle"], color="tab:blue")
    inset.set_title("tangle", fontsize=7)
    return fig


def _render_fig5(cols):
    b_values = sorted({v for v in cols["b"]})
    shown = b_values if len(b_values) <= 6 else [
        b_values[round(i * (len(b_values) - 1) / 5)] for i in range(6)
    ]
    fig, ax = plt.subplots(figsize=(4.6, 3.6))
    for b in shown:
        mask = [v == b for v in cols["b"]]
        sub = _subset(cols, mask)
        ax.plot(sub["n1"], sub["purity"], "o-", label=f"b={b:g}")
    ax.set_xlabel("n1")
    ax.set_ylabel("purity")
    ax.legend(fontsize=7)
    n1_first = sorted({int(v) for v in cols["n1"]})[0]
    per_b = _subset(cols, [int(v) == n1_first for v in cols["n1"]])
    inset = ax.inset_axes([0.58, 0.58, 0.38, 0.34])
    inset.plot(per_b["b"], per_b["tangle"], color="tab:blue")
    inset.plot(per_b["b"], [1 - c for c in per_b["concurrence_nn"]], color="tab:red")
    inset.set_title("tangle, 1-C", fontsize=7)
    return fig


def _render_table1(cols):
    fig, ax = plt.subplots(figsize=(5.4, 3.4))
    idx = list(range(len(cols["raw_ratio"])))
    ax.plot(idx, cols["raw_ratio"], "o", color="tab:blue", label="raw_ratio")
    ax.plot(idx, cols["expected"], "_", color="tab:red", markersize=10, label="expected")
    ax.set_xlabel("pair index")
    ax.set_ylabel("ratio")
    ax.legend(fontsize=8)
    return fig


def _render_table2(cols):
    fig, ax = plt.subplots(figsize=(4.2, 3.4))
    ax.plot(cols["b"], cols["p"], "s-", color="tab:blue", label="p")
    ax.set_xlabel("b")
    ax.set_ylabel("p")
    twin = ax.twinx()
    twin.plot(cols["b"], cols["theta_m_over_pi"], "o--", color="tab:red", label="theta_m/pi")
    twin.plot(cols["b"], cols["theta_m_half_over_pi"], "^:", color="tab:green", label="theta_m/2pi")
    twin.set_ylabel("tilt / pi")
    twin.legend(fontsize=8)
    return fig


def render(spec: FigureSpec):
    """Render the preset figure and write a vector image; returns the Figure.

    Nothing is written when loading or validation fails.
    """
    cols = load_columns(spec.csv_path, spec.preset)
    if spec.preset == "fig2":
        fig = _render_fig2(cols)
    elif spec.preset == "fig3":
        fig = _render_fig3(cols)
    elif spec.preset == "fig4a":
        fig = _render_fig4(cols, (1, 2, 3))
    elif spec.preset == "fig4b":
        fig = _render_fig4(cols, (1, 2, 3, 4))
    elif spec.preset == "fig5":
        fig = _render_fig5(cols)
    elif spec.preset == "table1":
        fig = _render_table1(cols)
    else:
        fig = _render_table2(cols)
    fig.savefig(spec.out_path, metadata={"Date": None})
    plt.close(fig)
    return fig
