"""Flat-file outputs: per-scenario CSVs, the suite summary, optional charts.

The per-trajectory CSV column order is fixed and the float formatting is
shortest-round-trip repr, so identical runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import re
from pathlib import Path

from .simulate import Trajectory

TRAJECTORY_COLUMNS = [
    "t", "year", "I_c", "I_d", "s_c", "s_d", "regime", "G", "A_c", "A_d",
    "lnA_c", "lnA_d", "p_c", "p_d", "L_c", "L_d", "Y_c", "Y_d", "Y",
    "clean_share", "C", "S", "CO2", "Delta", "disaster",
]

SUMMARY_COLUMNS = [
    "label", "ai_impact_10yr", "k", "intervention_years", "avoid_disaster",
    "switch_year", "error",
]


def slugify(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]+", "-", label).strip("-") or "scenario"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return str(value)


def write_trajectory_csv(trajectory: Trajectory, path: Path) -> None:
    try:
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(TRAJECTORY_COLUMNS)
            for r in trajectory.records:
                writer.writerow([_fmt(v) for v in (
                    r.t, r.year, r.i_c, r.i_d, r.s_c, r.s_d, r.regime.value,
                    r.g, r.a_c, r.a_d, r.ln_a_c, r.ln_a_d, r.p_c, r.p_d,
                    r.l_c, r.l_d, r.y_c, r.y_d, r.y, r.clean_share, r.c,
                    r.s, r.co2, r.delta, r.disaster)])
    except OSError as exc:
        raise OSError(f"failed writing trajectory CSV {path}: {exc}") from exc


def write_summary_csv(rows: list[dict], path: Path) -> None:
    try:
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(SUMMARY_COLUMNS)
            for row in rows:
                writer.writerow([_fmt(row.get(col)) for col in SUMMARY_COLUMNS])
    except OSError as exc:
        raise OSError(f"failed writing summary CSV {path}: {exc}") from exc


def emit_outputs(trajectories: list[Trajectory], summary_rows: list[dict],
                 out_dir: str | Path, emit_plots: bool = False) -> list[Path]:
    """Write one CSV per trajectory plus the summary; optionally charts.

    Returns the paths written.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for tr in trajectories:
        path = out / f"{slugify(tr.label)}.csv"
        write_trajectory_csv(tr, path)
        written.append(path)
    summary_path = out / "summary.csv"
    write_summary_csv(summary_rows, summary_path)
    written.append(summary_path)
    if emit_plots:
        written.extend(emit_charts(trajectories, out))
    return written


# One chart per plotted quantity, every scenario overlaid, x axis in years.
CHART_SPECS = [
    ("scientist_share", "Share of scientists in the clean sector", "s_c", False),
    ("dirty_production", "Production of the dirty input", "y_d", True),
    ("clean_output_share", "Clean share of final-good production", "clean_share", False),
    ("consumption", "Total consumption", "c", True),
    ("temperature", "Temperature increase (deg C)", "delta", False),
    ("environment", "Environmental quality (ppm headroom)", "s", False),
]


def emit_charts(trajectories: list[Trajectory], out_dir: Path) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    written = []
    for name, title, attr, log_scale in CHART_SPECS:
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for tr in trajectories:
            years = [r.year for r in tr.records]
            values = [getattr(r, attr) for r in tr.records]
            ax.plot(years, values, label=tr.label)
        ax.set_xlabel("years")
        ax.set_ylabel(title)
        ax.set_title(title)
        if log_scale:
            ax.set_yscale("log")
        ax.legend(fontsize=8)
        fig.tight_layout()
        path = out_dir / f"fig_{name}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written
