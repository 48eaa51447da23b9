"""Render nslgrad sweep CSVs into publication-style figures.

Pure post-processing: nothing here recomputes physics, every curve is a
column of the input CSV.  Vector output (SVG/PDF) is byte-deterministic
for identical inputs: the matplotlib hash salt is pinned and the date
metadata is stripped.
"""

import csv
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "nslgrad-figures"

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

KINDS = ("angular", "power", "oam", "ratio")

SWEEP_COLUMN = {
    "power": ("power_ev_per_s", "averaged power [eV/s]"),
    "oam": ("dLz_dt_hbar_per_s", "|OAM loss rate| [hbar/s]"),
    "ratio": ("ratio", "radiated / transverse energy per period"),
}
ANGULAR_COLUMNS = ("theta_rad", "dpdomega_raw_ev_per_s_sr", "dpdomega_norm_ev_per_s_sr")
DEFAULT_PANEL_BOUNDS_NM = (1.0e2, 1.0e5)


class SchemaError(Exception):
    """Input CSV does not carry the expected sweep schema."""


@dataclass(frozen=True)
class FigureJob:
    kind: str
    inputs: tuple
    output: str
    panel_bounds_nm: tuple = DEFAULT_PANEL_BOUNDS_NM

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SchemaError(f"unknown figure kind '{self.kind}' (choose from {KINDS})")
        if not self.inputs:
            raise SchemaError("at least one input CSV is required")
        if len(self.panel_bounds_nm) != 2 or not np.all(np.diff(self.panel_bounds_nm) > 0):
            raise SchemaError("panel bounds must be two increasing sigma0 values in nm")


def read_csv(path, required):
    """Parse one CSV, skipping '#' comments; enforce the required columns."""
    with open(path, encoding="utf-8") as fh:
        rows = list(csv.reader(ln for ln in fh if not ln.startswith("#")))
    if not rows:
        raise SchemaError(f"{path}: no header row")
    header = rows[0]
    missing = [col for col in required if col not in header]
    if missing:
        raise SchemaError(f"{path}: missing columns: {', '.join(missing)}")
    if len(rows) < 2:
        raise SchemaError(f"{path}: no data rows")
    data = np.array([[float(v) for v in row] for row in rows[1:]])
    return {col: data[:, header.index(col)] for col in required}


def _save(fig, output):
    fmt = output.rsplit(".", 1)[-1].lower() if "." in output else "svg"
    metadata = None
    if fmt == "svg":
        metadata = {"Date": None}
    elif fmt == "pdf":
        metadata = {"CreationDate": None}
    fig.savefig(output, format=fmt, metadata=metadata)
    plt.close(fig)


def render_angular(job):
    fig, ax = plt.subplots(figsize=(5.0, 5.0), subplot_kw={"projection": "polar"})
    for path in job.inputs:
        cols = read_csv(path, ANGULAR_COLUMNS)
        theta = cols["theta_rad"]
        value = cols["dpdomega_raw_ev_per_s_sr"]
        # the distribution is azimuthally symmetric: mirror the polar
        # half-plane to show both lobes
        theta_full = np.concatenate([theta, 2.0 * np.pi - theta[::-1]])
        value_full = np.concatenate([value, value[::-1]])
        ax.plot(theta_full, value_full, lw=1.2)
    ax.set_theta_zero_location("N")
    ax.set_title("angular power distribution [eV/(s sr)]", fontsize=10)
    _save(fig, job.output)


def render_sweep(job):
    column, ylabel = SWEEP_COLUMN[job.kind]
    lo, hi = job.panel_bounds_nm
    fig, axes = plt.subplots(1, 3, figsize=(11.0, 3.6), constrained_layout=True)
    edges = [(None, lo), (lo, hi), (hi, None)]
    titles = [f"(a) up to {lo:g} nm", f"(b) {lo:g} to {hi:g} nm", f"(c) above {hi:g} nm"]
    for path in job.inputs:
        cols = read_csv(path, ("sigma0_nm", column))
        sigma0 = cols["sigma0_nm"]
        value = np.abs(cols[column]) if job.kind == "oam" else cols[column]
        for ax, (left, right) in zip(axes, edges):
            mask = np.ones_like(sigma0, dtype=bool)
            if left is not None:
                mask &= sigma0 >= left
            if right is not None:
                mask &= sigma0 <= right
            if np.any(mask):
                ax.plot(sigma0[mask], value[mask], lw=1.2)
    for ax, title in zip(axes, titles):
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("sigma0 [nm]")
        ax.set_title(title, fontsize=10)
        ax.grid(True, which="both", alpha=0.3)
    axes[0].set_ylabel(ylabel)
    _save(fig, job.output)


def render(job):
    """Render one figure job to its output path."""
    if job.kind == "angular":
        render_angular(job)
    else:
        render_sweep(job)
    return job.output
