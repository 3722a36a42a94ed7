"""Output formatting: exact JSON, LaTeX pmatrix blocks, and plain text."""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .cyclo import CycNum


def render_entry(x):
    if isinstance(x, CycNum):
        return x.render()
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (np.integer, int)):
        return str(int(x))
    return str(x)


def entry_json(x):
    if isinstance(x, CycNum):
        return x.to_json()
    if isinstance(x, Fraction):
        return {"coeffs": [[x.numerator, x.denominator]], "str": render_entry(x)}
    return int(x)


def latex_entry(x):
    s = render_entry(x)
    if "/" in s and not s.startswith("\\"):
        num, den = s.split("/")
        s = f"\\tfrac{{{num}}}{{{den}}}"
    return s.replace("\u221a-3", "\\sqrt{-3}").replace("\u221a", "\\sqrt")


def latex_matrix(rows):
    body = " \\\\\n".join(" & ".join(latex_entry(x) for x in row) for row in rows)
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def text_matrix(rows, pad=1):
    cells = [[render_entry(x) for x in row] for row in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
    return "\n".join(
        " ".join(c.rjust(w + pad - 1) for c, w in zip(row, widths))
        for row in cells)


def scheme_report(scheme, table=None, duals=None):
    """Machine-readable summary of a scheme and (optionally) its character
    table and dual intersection matrices."""
    from . import schemes
    out = {
        "order": scheme.n,
        "d": scheme.d,
        "valencies": scheme.valencies,
        "commutative": scheme.is_commutative(),
        "symmetric": scheme.is_symmetric(),
        "transpose_map": scheme.transpose_map,
        "intersection_matrices": [m.tolist() for m in scheme.intersection_matrices()],
    }
    if getattr(scheme, "class_values", None) is not None:
        out["class_values"] = scheme.class_values[1:]
    if table is not None:
        out["character_table"] = table.to_json()
    if duals is not None:
        if isinstance(duals, schemes.HadamardClosureReport):
            out["dual_intersection_matrices"] = {"report": duals.reason}
        else:
            out["dual_intersection_matrices"] = [
                [[entry_json(x) for x in row] for row in m] for m in duals]
    return out


def scheme_text(scheme, table=None, duals=None):
    from . import schemes
    lines = [f"order {scheme.n}, d = {scheme.d}, "
             f"{'commutative' if scheme.is_commutative() else 'noncommutative'}",
             f"valencies: {scheme.valencies}"]
    if getattr(scheme, "class_values", None) is not None:
        lines.append(f"class values: {scheme.class_values[1:]}")
    for i, m in enumerate(scheme.intersection_matrices()):
        lines.append(f"L_{i}:")
        lines.append(text_matrix(m.tolist()))
    if table is not None:
        lines.append(f"ranks(E_i): {table.ranks}")
        lines.append(f"rep ranks n_i: {table.rep_ranks}")
        lines.append(f"multiplicities m_i: {table.multiplicities}")
        lines.append("P:")
        lines.append(text_matrix(table.P))
        lines.append("Q:")
        lines.append(text_matrix(table.Q))
    if duals is not None:
        if isinstance(duals, schemes.HadamardClosureReport):
            lines.append(f"dual matrices: {duals.reason}")
        else:
            for i, m in enumerate(duals):
                lines.append(f"L*_{i}:")
                lines.append(text_matrix(m))
    return "\n".join(lines)


def scheme_latex(scheme, table=None, duals=None):
    from . import schemes
    parts = []
    for i, m in enumerate(scheme.intersection_matrices()):
        parts.append(f"% L_{i}")
        parts.append(latex_matrix(m.tolist()))
    if table is not None:
        parts.append("% P")
        parts.append(latex_matrix(table.P))
        parts.append("% Q")
        parts.append(latex_matrix(table.Q))
    if duals is not None and not isinstance(duals, schemes.HadamardClosureReport):
        for i, m in enumerate(duals):
            parts.append(f"% L*_{i}")
            parts.append(latex_matrix(m))
    return "\n".join(parts)


def check_report_json(q, command, checks, timings):
    return json.dumps({
        "q": q,
        "command": command,
        "checks": [{"name": c.name, "expected": _plain(c.expected),
                    "actual": _plain(c.actual), "status": c.status}
                   for c in checks],
        "timings": timings,
    }, indent=2)


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (dict, str, int, float, bool)) or x is None:
        return x
    return str(x)
