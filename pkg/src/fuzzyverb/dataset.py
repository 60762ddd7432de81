"""Tabular datasets, CSV I/O, and the synthetic four-gausses surface."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class CsvFormatError(ValueError):
    """CSV file cannot be parsed into a dataset; message carries line/column."""


@dataclass(frozen=True)
class AttributeStats:
    """Mean and population standard deviation of one column."""

    mean: float
    stddev: float

    def __post_init__(self):
        if self.stddev < 0:
            raise ValueError("stddev must be >= 0")


@dataclass(frozen=True)
class Dataset:
    attribute_names: tuple[str, ...]
    rows: np.ndarray  # (n_rows, n_attributes)
    output_name: str
    outputs: np.ndarray  # (n_rows,)

    def __post_init__(self):
        rows = np.ascontiguousarray(np.asarray(self.rows, dtype=np.float64))
        outputs = np.ascontiguousarray(np.asarray(self.outputs, dtype=np.float64))
        if rows.ndim != 2:
            raise ValueError("rows must be a 2-d matrix")
        if outputs.ndim != 1:
            raise ValueError("outputs must be a vector")
        if rows.shape[0] != outputs.shape[0]:
            raise ValueError("rows and outputs disagree on the number of samples")
        if rows.shape[0] < 1:
            raise ValueError("dataset needs at least one row")
        if rows.shape[1] != len(self.attribute_names):
            raise ValueError("row width does not match the number of attribute names")
        rows.setflags(write=False)
        outputs.setflags(write=False)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "outputs", outputs)

    @property
    def n_rows(self) -> int:
        return self.rows.shape[0]

    @property
    def n_attributes(self) -> int:
        return self.rows.shape[1]


def four_gausses(m: float = 10.0, sigma: float = 2.0, grid_n: int = 21) -> Dataset:
    """Surface z = g1 + g2 - g3 - g4 sampled on a uniform grid over [0, m]^2.

    The four unit-height product Gaussians sit at (m/4, m/4), (3m/4, 3m/4),
    (m/4, 3m/4), and (3m/4, m/4), all with the same spread sigma.
    """
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if grid_n < 2:
        raise ValueError(f"grid_n must be at least 2, got {grid_n}")
    ticks = np.linspace(0.0, m, grid_n)
    gx, gy = np.meshgrid(ticks, ticks, indexing="ij")
    x = gx.ravel()
    y = gy.ravel()

    def bump(cx, cy):
        return np.exp(-((x - cx) ** 2) / (2 * sigma**2)) * np.exp(
            -((y - cy) ** 2) / (2 * sigma**2)
        )

    lo, hi = m / 4.0, 3.0 * m / 4.0
    z = bump(lo, lo) + bump(hi, hi) - bump(lo, hi) - bump(hi, lo)
    return Dataset(("x", "y"), np.column_stack([x, y]), "z", z)


def stats(d: Dataset) -> dict[str, AttributeStats]:
    """Mean and population stddev per input attribute and for the output."""
    out = {}
    for j, name in enumerate(d.attribute_names):
        col = d.rows[:, j]
        out[name] = AttributeStats(float(col.mean()), float(col.std()))
    out[d.output_name] = AttributeStats(float(d.outputs.mean()), float(d.outputs.std()))
    return out


def save_csv(d: Dataset, path) -> None:
    lines = [",".join((*d.attribute_names, d.output_name))]
    for row, out in zip(d.rows, d.outputs):
        lines.append(",".join(repr(float(v)) for v in (*row, out)))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_csv(path) -> Dataset:
    """Load a comma-separated file; header required, last column is the output."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    lines = raw.replace("\r\n", "\n").split("\n")
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CsvFormatError(f"{path}: file is empty")
    header = [h.strip() for h in lines[0].split(",")]
    if len(header) < 2:
        raise CsvFormatError(f"{path}: line 1: header needs at least two columns")
    if any(h == "" for h in header):
        raise CsvFormatError(f"{path}: line 1: empty column name in header")
    width = len(header)
    rows = []
    outputs = []
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != width:
            raise CsvFormatError(
                f"{path}: line {lineno}: expected {width} columns, found {len(cells)}"
            )
        values = []
        for colno, cell in enumerate(cells, start=1):
            try:
                values.append(float(cell))
            except ValueError:
                raise CsvFormatError(
                    f"{path}: line {lineno}, column {colno}: "
                    f"not a number: {cell.strip()!r}"
                ) from None
        rows.append(values[:-1])
        outputs.append(values[-1])
    if not rows:
        raise CsvFormatError(f"{path}: no data rows after the header")
    return Dataset(
        tuple(header[:-1]), np.asarray(rows, dtype=np.float64), header[-1],
        np.asarray(outputs, dtype=np.float64),
    )
