"""CSV and SVG serialization for curves, histograms, matrices, and clouds.

CSV conventions: UTF-8, header row, ``.`` decimal separator, no
thousands separators, rows in ascending x order, trailing newline.
Curves use the columns ``p,value``; histograms use
``bin_lo,bin_hi,count``.  Reals are rendered with 12 significant digits;
in the rare case where that would lose more than 1e-12 (relative to
max(1, |x|)) on a round trip, the shortest exact representation is used
instead, so parsing a written file always recovers the series to 1e-12.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .curves import CurveSeries
from .ensembles import PointCloud, SymmetricMatrix
from .spectra import Histogram
from .svg import bar_chart, line_chart

__all__ = [
    "format_real",
    "write_csv",
    "read_curve_csv",
    "write_svg",
    "write_matrix_csv",
    "read_matrix_csv",
    "write_points_csv",
]


def format_real(value: float) -> str:
    """Render a real for CSV output (12 significant digits, round-trip safe)."""
    value = float(value)
    text = f"{value:.12g}"
    if abs(float(text) - value) <= 1e-12 * max(1.0, abs(value)):
        return text
    return repr(value)


def _csv_text(data) -> str:
    if isinstance(data, CurveSeries):
        lines = ["p,value"]
        lines += [f"{format_real(x)},{format_real(y)}" for x, y in zip(data.xs, data.ys)]
    elif isinstance(data, Histogram):
        if data.counts.size < 1:
            raise ValueError("refusing to write a histogram with no bins")
        lines = ["bin_lo,bin_hi,count"]
        lines += [
            f"{format_real(lo)},{format_real(hi)},{int(c)}"
            for lo, hi, c in zip(data.bin_edges[:-1], data.bin_edges[1:], data.counts)
        ]
    else:
        raise TypeError(f"cannot serialize {type(data).__name__} to CSV")
    return "\n".join(lines) + "\n"


def write_csv(data, path) -> None:
    """Write a CurveSeries or Histogram as CSV."""
    text = _csv_text(data)
    with open(Path(path), "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def read_curve_csv(path) -> tuple[np.ndarray, np.ndarray]:
    """Parse a curve CSV written by :func:`write_csv` back into arrays."""
    xs, ys = [], []
    with open(Path(path), "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "p,value":
            raise ValueError(f"unexpected curve CSV header: {header!r}")
        for line in fh:
            line = line.strip()
            if not line:
                continue
            x_text, y_text = line.split(",")
            xs.append(float(x_text))
            ys.append(float(y_text))
    return np.array(xs), np.array(ys)


def write_svg(data, path, title: str) -> None:
    """Write a CurveSeries or Histogram as a self-contained SVG plot."""
    if isinstance(data, CurveSeries):
        text = line_chart(data.xs, data.ys, title, x_label="p", y_label=data.statistic)
    elif isinstance(data, Histogram):
        if data.counts.size < 1:
            raise ValueError("refusing to plot a histogram with no bins")
        text = bar_chart(data.bin_edges, data.counts, title,
                         x_label="eigenvalue", y_label="count")
    else:
        raise TypeError(f"cannot plot {type(data).__name__}")
    with open(Path(path), "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def write_matrix_csv(matrix: SymmetricMatrix, path) -> None:
    """Write the full dense matrix, one CSV row per matrix row, no header."""
    lines = [",".join(format_real(v) for v in row) for row in matrix.dense]
    with open(Path(path), "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def read_matrix_csv(path) -> SymmetricMatrix:
    """Read a full symmetric matrix from CSV (as written by write_matrix_csv).

    Near-symmetric input (entries matching across the diagonal to 1e-9,
    relative to the largest magnitude) is accepted; the upper triangle
    wins and is mirrored so the stored matrix is exactly symmetric.
    """
    rows = []
    with open(Path(path), "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rows.append([float(cell) for cell in line.split(",")])
    if not rows:
        raise ValueError("matrix file is empty")
    widths = {len(row) for row in rows}
    if len(widths) != 1 or widths.pop() != len(rows):
        raise ValueError("matrix file must be square")
    dense = np.array(rows, dtype=float)
    if not np.isfinite(dense).all():
        raise ValueError("matrix entries must be finite")
    scale = max(1.0, float(np.abs(dense).max()))
    if float(np.abs(dense - dense.T).max()) > 1e-9 * scale:
        raise ValueError("matrix file is not symmetric")
    upper = np.triu(dense)
    exact = upper + np.triu(dense, k=1).T
    return SymmetricMatrix(exact, ensemble="matrix-file")


def write_points_csv(cloud: PointCloud, path) -> None:
    """Write point coordinates with an x,y[,z] header row."""
    header = "x,y" if cloud.dim == 2 else "x,y,z"
    lines = [header]
    lines += [",".join(format_real(v) for v in pt) for pt in cloud.points]
    with open(Path(path), "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")
