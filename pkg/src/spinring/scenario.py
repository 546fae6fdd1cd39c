"""Sweep scenarios: config parsing, execution and CSV/JSON output.

A scenario is described by a flat text file with dotted keys::

    preset = fig5            # optional label
    model.family = B         # A | B | collinear | XY (comma list allowed)
    model.axis = X           # X | Y | none
    model.jxx = 1
    model.jyy = 0
    ring.n = 8               # comma list allowed
    ring.s = 0.5
    field.direction = z      # x | z | none
    field.start = 0
    field.stop = 0.8
    field.steps = 121        # or: field.values = 0, 0.1, 0.2
    outputs = purity, tangle, concurrence_nn

Rows are emitted in deterministic (family, N, b) order regardless of the
worker count; floats are written with 12 significant digits so identical
configs produce byte-identical files.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from .eigensolver import detect_sectors, diagonalize, ground_space
from .entanglement import (
    block_purity_profile,
    concurrence_matrix,
    residual_tangle,
    ring_distance_concurrence,
)
from .ring_models import ModelVariant, RingConfig, build_hamiltonian
from .symmetry_subspace import (
    coefficient_ratios,
    expected_table_ratio,
    reduced_ground_state,
)
from .trial_states import (
    default_trial_params,
    ghz_trial,
    maximize_theta,
    order_vector,
    overlap_p,
    resolve_ground_with_trial,
    sector_ground_overlap,
)
from .tolerances import MAX_SITES


class ConfigError(ValueError):
    """Invalid scenario configuration; the message names the offending key."""


KNOWN_OUTPUTS = (
    "spectrum",
    "delta",
    "p",
    "theta_m",
    "concurrence_nn",
    "concurrence_dist",
    "tangle",
    "purity",
    "order",
    "ratios",
)


@dataclass
class Scenario:
    families: list[str]
    axis: str
    jxx: float
    jyy: float
    ns: list[int]
    s: float
    field_axis: str
    field_values: list[float]
    outputs: list[str]
    preset: str | None = None


@dataclass
class ResultTable:
    columns: list[str]
    rows: list[list] = field(default_factory=list)


def _parse_kv_text(text: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in entries:
            raise ConfigError(f"{key}: duplicate key")
        entries[key] = value
    return entries


def _floats(value: str, key: str) -> list[float]:
    try:
        return [float(tok) for tok in value.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ConfigError(f"{key}: not a number list: {value!r}") from exc


def parse_scenario(text: str) -> Scenario:
    entries = _parse_kv_text(text)
    known_keys = {
        "preset", "model.family", "model.axis", "model.jxx", "model.jyy",
        "ring.n", "ring.s", "field.direction", "field.start", "field.stop",
        "field.steps", "field.values", "outputs",
    }
    for key in entries:
        if key not in known_keys:
            raise ConfigError(f"{key}: unknown key")

    families = [tok.strip() for tok in entries.get("model.family", "").split(",") if tok.strip()]
    if not families:
        raise ConfigError("model.family: required")
    for fam in families:
        if fam not in ("A", "B", "collinear", "XY"):
            raise ConfigError(f"model.family: unknown family {fam!r}")

    axis = entries.get("model.axis", "none")
    if axis not in ("X", "Y", "none"):
        raise ConfigError(f"model.axis: must be X, Y or none, got {axis!r}")
    jxx = _floats(entries.get("model.jxx", "0"), "model.jxx")[0]
    jyy = _floats(entries.get("model.jyy", "0"), "model.jyy")[0]

    try:
        ns = [int(tok) for tok in entries.get("ring.n", "").split(",") if tok.strip()]
    except ValueError as exc:
        raise ConfigError(f"ring.n: not an integer list: {entries.get('ring.n')!r}") from exc
    if not ns:
        raise ConfigError("ring.n: required")
    for n in ns:
        if not 3 <= n <= MAX_SITES:
            raise ConfigError(f"ring.n: {n} outside the supported range 3..{MAX_SITES}")

    s = _floats(entries.get("ring.s", "0.5"), "ring.s")[0]
    if s not in (0.5, 1.0):
        raise ConfigError(f"ring.s: unsupported spin magnitude {s}")

    field_axis = entries.get("field.direction", "none")
    if field_axis not in ("x", "z", "none"):
        raise ConfigError(f"field.direction: must be x, z or none, got {field_axis!r}")
    if field_axis == "none":
        field_values = [0.0]
        for key in ("field.start", "field.stop", "field.steps", "field.values"):
            if key in entries:
                raise ConfigError(f"{key}: set field.direction before sweeping")
    elif "field.values" in entries:
        field_values = _floats(entries["field.values"], "field.values")
        if not field_values:
            raise ConfigError("field.values: empty sweep")
    else:
        for key in ("field.start", "field.stop", "field.steps"):
            if key not in entries:
                raise ConfigError(f"{key}: required for a field sweep")
        start = _floats(entries["field.start"], "field.start")[0]
        stop = _floats(entries["field.stop"], "field.stop")[0]
        try:
            steps = int(entries["field.steps"])
        except ValueError as exc:
            raise ConfigError(f"field.steps: not an integer: {entries['field.steps']!r}") from exc
        if steps < 1:
            raise ConfigError(f"field.steps: must be >= 1, got {steps}")
        field_values = [start] if steps == 1 else list(np.linspace(start, stop, steps))
    if field_axis != "none" and any(b < 0 for b in field_values):
        raise ConfigError("field.values: magnitudes must be >= 0")

    outputs = [tok.strip() for tok in entries.get("outputs", "").split(",") if tok.strip()]
    if not outputs:
        raise ConfigError("outputs: required")
    for out in outputs:
        if out not in KNOWN_OUTPUTS:
            raise ConfigError(f"outputs: unknown quantity {out!r}")
    if "spectrum" in outputs and len(outputs) > 1:
        raise ConfigError("outputs: spectrum is a standalone layout")
    if "ratios" in outputs and len(outputs) > 1:
        raise ConfigError("outputs: ratios is a standalone layout")
    if "concurrence_dist" in outputs and len(ns) > 1:
        raise ConfigError("outputs: concurrence_dist needs a single ring.n")
    if ("theta_m" in outputs or "p" in outputs) and any(f in ("collinear", "XY") for f in families):
        raise ConfigError("outputs: trial-state quantities need model families A or B")
    if s != 0.5 and any(o in outputs for o in ("concurrence_nn", "concurrence_dist", "tangle", "ratios")):
        raise ConfigError("outputs: concurrence, tangle and ratios need ring.s = 0.5")
    if "theta_m" in outputs and any(n % 2 for n in ns):
        raise ConfigError("outputs: theta_m is defined for even rings")

    return Scenario(
        families, axis, jxx, jyy, ns, s, field_axis, [float(b) for b in field_values],
        outputs, entries.get("preset"),
    )


def load_scenario(path: str) -> Scenario:
    with open(path, encoding="utf-8") as handle:
        return parse_scenario(handle.read())


# ------------------------------------------------------------- presets


def list_presets() -> list[str]:
    files = resources.files("spinring").joinpath("presets")
    return sorted(p.name[: -len(".cfg")] for p in files.iterdir() if p.name.endswith(".cfg"))


def preset_text(name: str) -> str:
    path = resources.files("spinring").joinpath("presets", f"{name}.cfg")
    if not path.is_file():
        raise ConfigError(f"preset: unknown preset {name!r} (have: {', '.join(list_presets())})")
    return path.read_text(encoding="utf-8")


def load_preset(name: str) -> Scenario:
    return parse_scenario(preset_text(name))


# ------------------------------------------------------------- execution


def _variant(sc: Scenario, family: str) -> ModelVariant:
    if sc.axis != "none":
        j = sc.jxx if sc.axis == "X" else sc.jyy
        try:
            return ModelVariant.ising(family, sc.axis, j)
        except ValueError as exc:
            raise ConfigError(f"model.jxx/jyy: {exc}") from exc
    try:
        return ModelVariant(family, "none", sc.jxx, sc.jyy)
    except ValueError as exc:
        raise ConfigError(f"model: {exc}") from exc


def _select_ground(res, trial):
    basis, delta = ground_space(res)
    return resolve_ground_with_trial(basis, trial), delta


def _point_rows(sc: Scenario, family: str, n: int, b: float) -> list[list]:
    cfg = RingConfig(
        n, sc.s, _variant(sc, family),
        field=b if sc.field_axis != "none" else 0.0,
        field_axis=sc.field_axis,
    )
    ham = build_hamiltonian(cfg)

    lead = []
    if len(sc.families) > 1:
        lead.append(family)
    if len(sc.ns) > 1:
        lead.append(n)
    if sc.field_axis != "none":
        lead.append(b)

    if sc.outputs == ["spectrum"]:
        res = diagonalize(ham)
        return [
            lead + [idx, float(e), res.delta] for idx, e in enumerate(res.eigenvalues)
        ]

    if sc.outputs == ["ratios"]:
        rows = []
        for axis in ("X", "Y"):
            for sign in (1.0, -1.0):
                variant = ModelVariant.ising(family, axis, sign)
                hamv = build_hamiltonian(RingConfig(n, sc.s, variant))
                red = reduced_ground_state(hamv, n)
                expected = expected_table_ratio(family, axis, sign)
                for entry in coefficient_ratios(red, n):
                    rows.append(
                        lead
                        + [
                            axis,
                            int(sign),
                            entry.v.k,
                            "-".join(map(str, entry.v.sites)),
                            "-".join(map(str, entry.partner.sites)),
                            float(np.real(entry.ratio)) if entry.ratio is not None else "",
                            float(np.real(entry.raw_ratio)) if entry.raw_ratio is not None else "",
                            expected,
                        ]
                    )
        return rows

    needs_state = any(
        out in sc.outputs for out in ("p", "theta_m", "concurrence_nn", "concurrence_dist", "tangle", "purity", "order")
    )
    character, phi = (None, None)
    if family in ("A", "B"):
        character, phi = default_trial_params(cfg)

    odd_sector = n % 2 == 1 and family == "B"
    delta = None
    state = None
    p_value = None
    if odd_sector:
        dec = detect_sectors(ham)
        trial = ghz_trial(character, phi, n, sc.s)
        weights = [float(np.sum(np.abs(trial[idx]) ** 2)) for idx in dec.blocks]
        block = int(np.argmax(weights))
        evals = dec.block_eigenvalues[block]
        delta = float(evals[1] - evals[0])
        state = dec.embedded_vector(block, 0, ham.shape[0])
        p_value = sector_ground_overlap(ham, trial, dec)[block]
    else:
        res = diagonalize(ham)
        delta = res.delta
        if needs_state:
            trial = ghz_trial(character, phi, n, sc.s) if character else None
            if trial is None:
                state = res.eigenvectors[:, 0]
            else:
                state, _ = _select_ground(res, trial)
                if "p" in sc.outputs:
                    basis, _ = ground_space(res)
                    p_value = overlap_p(basis, trial)

    scalars: dict[str, float] = {}
    if "delta" in sc.outputs:
        scalars["delta"] = delta
    if "p" in sc.outputs:
        scalars["p"] = p_value
    if "theta_m" in sc.outputs:
        if odd_sector:
            raise ConfigError("outputs: theta_m is defined for even rings")
        basis, _ = ground_space(diagonalize(ham))
        theta_m, p_max = maximize_theta(basis, character, phi, n, sc.s)
        scalars["p"] = p_max
        scalars["theta_m"] = theta_m
        scalars["theta_m_over_pi"] = theta_m / np.pi
        scalars["theta_m_half_over_pi"] = theta_m / (2 * np.pi)
    cmat = None
    if "concurrence_nn" in sc.outputs or "concurrence_dist" in sc.outputs or "tangle" in sc.outputs:
        if sc.s != 0.5:
            raise ConfigError("outputs: concurrence and tangle need s = 1/2")
        cmat = concurrence_matrix(state, n)
    if "concurrence_nn" in sc.outputs:
        scalars["concurrence_nn"] = float(
            np.mean([cmat[k, (k + 1) % n] for k in range(n)])
        )
    if "concurrence_dist" in sc.outputs:
        for dist, val in enumerate(ring_distance_concurrence(state, n, cmat), start=1):
            scalars[f"concurrence_d{dist}"] = float(val)
    if "tangle" in sc.outputs:
        scalars["tangle"] = float(
            np.mean([residual_tangle(state, k, n, cmat) for k in range(1, n + 1)])
        )
    if "order" in sc.outputs:
        scalars["order_modulus"] = float(
            np.linalg.norm(order_vector(state, character, phi, n, sc.s))
        )

    quantity_cols = [c for c in scenario_columns(sc) if c not in ("family", "n", "b", "n1")]
    if "purity" in sc.outputs:
        profile = block_purity_profile(state, n, sc.s)
        rows = []
        for n1, pur in enumerate(profile, start=1):
            values = {"purity": float(pur), **scalars}
            rows.append(lead + [n1] + [values[c] for c in quantity_cols])
        return rows
    return [lead + [scalars[c] for c in quantity_cols]]


def scenario_columns(sc: Scenario) -> list[str]:
    cols = []
    if len(sc.families) > 1:
        cols.append("family")
    if len(sc.ns) > 1:
        cols.append("n")
    if sc.field_axis != "none":
        cols.append("b")
    if sc.outputs == ["spectrum"]:
        return cols + ["index", "energy", "delta"]
    if sc.outputs == ["ratios"]:
        return cols + ["axis", "j_sign", "k", "flip_sites", "partner_sites", "ratio", "raw_ratio", "expected"]
    if "purity" in sc.outputs:
        cols += ["n1", "purity"]
    ordered = []
    if "p" in sc.outputs or "theta_m" in sc.outputs:
        ordered.append("p")
    if "theta_m" in sc.outputs:
        ordered += ["theta_m", "theta_m_over_pi", "theta_m_half_over_pi"]
    if "tangle" in sc.outputs:
        ordered.append("tangle")
    if "concurrence_nn" in sc.outputs:
        ordered.append("concurrence_nn")
    if "concurrence_dist" in sc.outputs:
        ordered += [f"concurrence_d{d}" for d in range(1, sc.ns[0] // 2 + 1)]
    if "delta" in sc.outputs:
        ordered.append("delta")
    if "order" in sc.outputs:
        ordered.append("order_modulus")
    return cols + ordered


def run_scenario(sc: Scenario) -> ResultTable:
    """Execute the sweep; rows come back in (family, N, b) input order.

    SPINRING_THREADS caps the worker count (default 1, serial); parallel
    runs produce identical tables because assembly follows the task order.
    """
    points = [(family, n, b) for family in sc.families for n in sc.ns for b in sc.field_values]
    workers = int(os.environ.get("SPINRING_THREADS", "1"))
    if workers < 1:
        raise ConfigError("SPINRING_THREADS: must be >= 1")
    table = ResultTable(scenario_columns(sc))
    if workers == 1:
        chunks = [_point_rows(sc, *pt) for pt in points]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda pt: _point_rows(sc, *pt), points))
    for chunk in chunks:
        table.rows.extend(chunk)
    return table


# ------------------------------------------------------------- output


def format_value(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def write_csv(table: ResultTable, path: str) -> None:
    lines = [",".join(table.columns)]
    lines += [",".join(format_value(v) for v in row) for row in table.rows]
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")


def write_json(table: ResultTable, path: str) -> None:
    def mirror(value):
        if isinstance(value, float):
            return float(f"{value:.12g}")
        return value

    payload = {
        "columns": table.columns,
        "rows": [[mirror(v) for v in row] for row in table.rows],
    }
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(payload, handle, indent=1)
        handle.write("\n")


def write_results(table: ResultTable, path: str, fmt: str = "csv") -> None:
    if fmt == "csv":
        write_csv(table, path)
    elif fmt == "json":
        write_json(table, path)
    else:
        raise ConfigError(f"format: unknown output format {fmt!r}")
