"""Benchmark table output (CSV or aligned text) for trial reports."""

import csv
import io

COLUMNS = (
    ("input", "input", "s"),
    ("n", "n", "d"),
    ("time_avg", "time_avg[ms]", ".2f"),
    ("time_max", "time_max[ms]", ".2f"),
    ("time_min", "time_min[ms]", ".2f"),
    ("c_avg", "C_avg[n]", ".2f"),
    ("c_max", "C_max[n]", ".2f"),
    ("c_min", "C_min[n]", ".2f"),
    ("gamma_avg", "gamma_avg", ".2f"),
    ("l_avg", "L_avg[n]", ".2f"),
    ("p_avg_ln", "P_avg[ln n]", ".2f"),
    ("n_avg_ln", "N_avg[ln n]", ".2f"),
    ("p_avg", "p_avg", ".2f"),
    ("s_avg", "s_avg[%n]", ".2f"),
)

HEADER = [title for _, title, _ in COLUMNS]


def format_row(row, no_time=False):
    cells = []
    for key, _, fmt in COLUMNS:
        value = row[key]
        if no_time and key.startswith("time_"):
            value = 0.0
        cells.append(format(value, fmt))
    return cells


def emit_table(reports, fmt="csv", no_time=False):
    """Render reports as CSV (LF line ends) or as an aligned text table.

    ``no_time`` zeroes the wall-clock columns so that output is reproducible
    byte for byte.
    """
    rows = [format_row(r.row(), no_time) for r in reports]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(HEADER)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt != "table":
        raise ValueError("unknown format %r" % fmt)
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(HEADER)]
    lines = []
    for cells in [HEADER] + rows:
        parts = [c.ljust(w) if i == 0 else c.rjust(w)
                 for i, (c, w) in enumerate(zip(cells, widths))]
        lines.append("  ".join(parts).rstrip())
    return "\n".join(lines) + "\n"
