"""Artifact emission: trajectory CSV logs, PGM frames, report rows.

All output is byte-deterministic for a given run: fixed headers,
explicit float formatting, no locale involvement.
"""
from __future__ import annotations

import os

import numpy as np

from .manifold import Manifold
from .planner import PlanResult, path_length

CSV_HEADER = "t,bump_x,bump_y,delta_x,delta_y,overlap_size,exc_spikes,wavefront_hit"
REPORT_HEADER = "scenario,outcome,steps,path_length,bfs_length,ratio,wavefronts"


def _fmt(x: float) -> str:
    return format(x, ".9g")


def format_trajectory(result: PlanResult, m: Manifold) -> str:
    """Trajectory CSV: one StepRecord per line plus an outcome footer."""
    lines = [CSV_HEADER]
    for rec in result.trajectory:
        x, y = m.coords(rec.bump_center)
        lines.append(",".join((
            str(rec.t), str(x), str(y),
            _fmt(rec.delta[0]), _fmt(rec.delta[1]),
            str(rec.overlap_size), str(rec.excitatory_spike_count),
            str(int(rec.wavefront_hit)))))
    lines.append(f"# outcome={result.outcome} steps={len(result.trajectory)}"
                 f" wavefronts={result.wavefronts_used}"
                 f" path_length={_fmt(path_length(result) if result.path else 0.0)}")
    return "\n".join(lines) + "\n"


def format_wave_log(spike_counts: list[int]) -> str:
    """Wave-only CSV: same schema, bump columns left empty."""
    lines = [CSV_HEADER]
    for t, count in enumerate(spike_counts):
        lines.append(f"{t},,,,,,{count},0")
    lines.append(f"# outcome=completed steps={len(spike_counts)}")
    return "\n".join(lines) + "\n"


def write_text(path: str, text: str) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def pgm_bytes(spikes_e: np.ndarray | None, activity: np.ndarray | None,
              m: Manifold) -> bytes:
    """8-bit binary PGM: max of normalized spike mask and normalized activity.

    Spiking nodes render 255; activity is scaled to its own maximum;
    blocked nodes render mid-gray (128).
    """
    img = np.zeros(m.n)
    if activity is not None and activity.max() > 0:
        img = np.maximum(img, activity / activity.max())
    if spikes_e is not None:
        img = np.maximum(img, spikes_e.astype(float))
    pix = np.clip(np.rint(img * 255.0), 0, 255).astype(np.uint8)
    pix[m.blocked] = 128
    header = f"P5\n{m.nx} {m.ny}\n255\n".encode("ascii")
    return header + pix.tobytes()


def write_frame(path: str, spikes_e, activity, m: Manifold) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "wb") as fh:
        fh.write(pgm_bytes(spikes_e, activity, m))


def report_row(scenario: str, result: PlanResult, bfs_length: float | None) -> str:
    """One verification row: planner outcome vs the BFS oracle."""
    steps = str(len(result.trajectory))
    if result.path and bfs_length:
        plen = path_length(result)
        return ",".join((scenario, result.outcome, steps, f"{plen:.4f}",
                         f"{bfs_length:.4f}", f"{plen / bfs_length:.4f}",
                         str(result.wavefronts_used)))
    return ",".join((scenario, result.outcome, steps, "", "", "",
                     str(result.wavefronts_used)))
