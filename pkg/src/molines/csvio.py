"""Plain CSV writers: comma delimiter, LF endings, 9 significant digits."""

import csv
import io

import numpy as np


def fmt(value):
    value = float(value)
    if value == 0.0:
        value = 0.0  # drop the sign of negative zero
    return format(value, ".9g")


def _write(rows, path=None):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    text = buffer.getvalue()
    if path is not None:
        with open(path, "w", newline="", encoding="ascii") as fh:
            fh.write(text)
    return text


def grid_rows(first_name, first_values, abscissas, values):
    """Header ``first_name, x_1, ..., x_N`` then one row per sample."""
    rows = [[first_name] + [fmt(x) for x in abscissas]]
    for s, row in zip(first_values, np.asarray(values)):
        rows.append([fmt(s)] + [fmt(v) for v in row])
    return rows


def write_grid(path, y_values, x_nodes, values, first_name="y"):
    return _write(grid_rows(first_name, y_values, x_nodes, values), path)


def write_basis(path, basis):
    """One row per eigenpair: ``k, lambda_k, T_1k, ..., T_Nk``."""
    n = basis.n
    rows = [["k", "lambda"] + [f"T_{j}k" for j in range(1, n + 1)]]
    for k in range(n):
        rows.append([str(k + 1), fmt(basis.lambdas[k])] + [fmt(v) for v in basis.t_matrix[:, k]])
    return _write(rows, path)


def write_columns(path, header, columns):
    rows = [list(header)]
    rows.extend([fmt(v) for v in row] for row in zip(*columns))
    return _write(rows, path)
