"""Table serialization shared by the command-line tools."""

from __future__ import annotations

import io
import json
from pathlib import Path

import numpy as np

TRAJECTORY_COLUMNS = ["t", "re_x", "im_x", "re_y", "im_y",
                      "re_vx", "im_vx", "re_vy", "im_vy"]


def trajectory_rows(t, z) -> np.ndarray:
    """Flatten packed complex states into the 9-column trajectory table."""
    z = np.asarray(z, dtype=complex)
    cols = [np.asarray(t, dtype=float)]
    for k in range(4):
        cols += [z[:, k].real, z[:, k].imag]
    return np.column_stack(cols)


def format_table(columns, rows, fmt: str = "csv") -> str:
    rows = np.asarray(rows, dtype=float)
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(",".join(columns) + "\n")
        for row in rows:
            buf.write(",".join(f"{v:.17g}" for v in row) + "\n")
        return buf.getvalue()
    if fmt == "json":
        return json.dumps({"columns": list(columns), "data": rows.tolist()}) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def read_table(path) -> tuple[list[str], np.ndarray]:
    """Read a table written by :func:`format_table` (CSV or JSON)."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        return list(obj["columns"]), np.asarray(obj["data"], dtype=float)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty file")
    columns = lines[0].split(",")
    data = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]], dtype=float)
    return columns, data.reshape(-1, len(columns))


def read_trajectory(path) -> tuple[np.ndarray, np.ndarray]:
    """Times and packed complex states from a trajectory file."""
    columns, data = read_table(path)
    if columns != TRAJECTORY_COLUMNS:
        raise ValueError(f"{path}: not a trajectory file (columns {columns})")
    t = data[:, 0]
    z = data[:, 1::2] + 1j * data[:, 2::2]
    return t, z
