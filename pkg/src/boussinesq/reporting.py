"""CSV serialization of sweep results and emission of companion plot scripts.

Floats are written with ``repr``, Python's shortest round-trip decimal
form, so parsing an emitted file recovers every value bit-exactly.
"""

from __future__ import annotations

import sys
import warnings

from .sweeps import SweepResult, SweepRow

__all__ = ["CSV_HEADER", "write_csv", "read_csv", "emit_plot_script"]

CSV_HEADER = "kind,scheme,N,dt,K,T,err_psi_l2,err_u_h2,err_u_l2,mass_drift,diverged,wall_seconds"


def _format_row(row: SweepRow) -> str:
    return ",".join(
        [
            row.kind,
            row.scheme,
            str(row.N),
            repr(row.dt),
            str(row.K),
            repr(row.T),
            repr(row.err_psi_l2),
            repr(row.err_u_h2),
            repr(row.err_u_l2),
            repr(row.mass_drift),
            "true" if row.diverged else "false",
            repr(row.wall_seconds),
        ]
    )


def write_csv(result: SweepResult, path) -> None:
    """Write one sweep to CSV; temporal sweeps get a fitted-order comment."""
    lines = [CSV_HEADER]
    lines.extend(_format_row(row) for row in result.rows)
    if result.fitted_orders is not None:
        lines.append(f"# fitted_order={result.fitted_orders['err_psi_l2']!r}")
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        raise


def read_csv(path) -> list[SweepRow]:
    """Parse a file produced by :func:`write_csv` back into rows."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header: {header!r}")
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            rows.append(
                SweepRow(
                    kind=parts[0],
                    scheme=parts[1],
                    N=int(parts[2]),
                    dt=float(parts[3]),
                    K=int(parts[4]),
                    T=float(parts[5]),
                    err_psi_l2=float(parts[6]),
                    err_u_h2=float(parts[7]),
                    err_u_l2=float(parts[8]),
                    mass_drift=float(parts[9]),
                    diverged=parts[10] == "true",
                    wall_seconds=float(parts[11]),
                )
            )
    return rows


_PLOT_TEMPLATE = '''\
#!/usr/bin/env python
"""Plot the error norms from {csv_name} (auto-generated)."""
import csv

import matplotlib.pyplot as plt

ns, nks, err_psi, err_u = [], [], [], []
with open({csv_name!r}) as fh:
    for row in csv.DictReader(r for r in fh if not r.startswith("#")):
        if row["diverged"] == "true":
            continue
        ns.append(int(row["N"]))
        nks.append(int(row["K"]))
        err_psi.append(float(row["err_psi_l2"]))
        err_u.append(float(row["err_u_h2"]))

fig, ax = plt.subplots()
{body}
ax.legend()
ax.grid(True, which="both", alpha=0.3)
fig.savefig({png_name!r}, dpi=150)
print("wrote", {png_name!r})
'''

_TEMPORAL_BODY = '''\
ax.loglog(nks, err_psi, "o-", label="L2 error of psi")
ax.loglog(nks, err_u, "s-", label="H2 error of u")
guide = [err_u[0] * (nks[0] / nk) ** 2 for nk in nks]
ax.loglog(nks, guide, "k--", label="C * NK^-2 guide")
ax.set_xlabel("number of time steps")
ax.set_ylabel("error at final time")'''

_SPATIAL_BODY = '''\
ax.semilogy(ns, err_psi, "o-", label="L2 error of psi")
ax.semilogy(ns, err_u, "s-", label="H2 error of u")
ax.set_xlabel("N (half mode count)")
ax.set_ylabel("error at final time")'''


def emit_plot_script(result: SweepResult, path, csv_name: str) -> None:
    """Write a standalone matplotlib script next to an already-written CSV.

    The script references the CSV by relative name and is a convenience
    artifact only.
    """
    if not result.rows:
        warnings.warn("empty sweep result; no plot script written", stacklevel=2)
        return
    body = _TEMPORAL_BODY if result.spec.kind == "temporal" else _SPATIAL_BODY
    png_name = csv_name.rsplit(".", 1)[0] + ".png"
    script = _PLOT_TEMPLATE.format(csv_name=csv_name, body=body, png_name=png_name)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(script)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        raise
