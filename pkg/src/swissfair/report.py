"""Rendering: regression tables in the journal layout, JSON, and SVG plots.

Tables print one column per model with the coefficient (starred) above its
standard error in parentheses, then the fit statistics block.  The SVG
histogram shows the points distribution split by the extra-white dummy,
one pair of bars per half-point bin.
"""

from __future__ import annotations

from .stats import LinearFit, LogisticFit, significance_stars

_ROW_LABELS = {
    "constant": "Constant",
    "elo_centered": "Elo centered",
    "expected_points": "Expected points",
    "extra_white": "Extra white",
    "elo_x_white": "Elo*white",
}
_ABSENT = "--"


def _format_cell(fit, name):
    if name not in fit.columns:
        return _ABSENT, ""
    coef = fit.coef(name)
    p = fit.p_value(name)
    return f"{coef:.3f}{significance_stars(p)}", f"({fit.std_error(name):.3f})"


def _stat_rows(fit):
    if isinstance(fit, LinearFit):
        return [
            ("R^2", f"{fit.r_squared:.3f}"),
            ("Adjusted R^2", f"{fit.adj_r_squared:.3f}"),
            ("Observations", str(fit.n)),
        ]
    return [
        ("Cox & Snell R^2", f"{fit.cox_snell_r2:.3f}"),
        ("Nagelkerke R^2", f"{fit.nagelkerke_r2:.3f}"),
        ("Classification", f"{100 * fit.classification_rate_at_half:.1f}%"),
        ("Area under ROC", f"{fit.auc:.3f}"),
        ("Observations", str(fit.n)),
    ]


def render_table(fits, headers=None, title=None) -> str:
    """Aligned text table over a list of fits (all linear or all logistic)."""
    fits = list(fits)
    if not fits:
        raise ValueError("nothing to render")
    if headers is None:
        headers = [f"({i + 1})" for i in range(len(fits))]
    predictor_order = [
        name
        for name in _ROW_LABELS
        if any(name in fit.columns for fit in fits)
    ]

    label_width = max(
        [len(_ROW_LABELS[n]) for n in predictor_order]
        + [len(r[0]) for r in _stat_rows(fits[0])]
    )
    cells = {}
    col_widths = []
    for j, fit in enumerate(fits):
        width = len(headers[j])
        for name in predictor_order:
            coef, se = _format_cell(fit, name)
            cells[(name, j)] = (coef, se)
            width = max(width, len(coef), len(se))
        for stat_name, value in _stat_rows(fit):
            cells[(stat_name, j)] = (value, "")
            width = max(width, len(value))
        col_widths.append(width)

    def row(label, key):
        parts = [label.ljust(label_width)]
        for j in range(len(fits)):
            parts.append(cells[(key, j)][0].rjust(col_widths[j]))
        return "  ".join(parts)

    def se_row(key):
        parts = [" " * label_width]
        for j in range(len(fits)):
            parts.append(cells[(key, j)][1].rjust(col_widths[j]))
        return "  ".join(parts).rstrip()

    lines = []
    if title:
        lines.append(title)
    header_line = "  ".join(
        [" " * label_width] + [h.rjust(col_widths[j]) for j, h in enumerate(headers)]
    )
    rule = "-" * len(header_line)
    lines += [header_line, rule]
    for name in predictor_order:
        lines.append(row(_ROW_LABELS[name], name))
        lines.append(se_row(name))
    lines.append(rule)
    for stat_name, _ in _stat_rows(fits[0]):
        lines.append(row(stat_name, stat_name))
    lines.append(rule)
    lines.append("Significance: * p < 5%; ** p < 1%; *** p < 0.1%.")
    return "\n".join(lines)


def fit_to_dict(fit) -> dict:
    """Machine-readable view of a fit."""
    out = {
        "response": fit.response,
        "n": fit.n,
        "terms": {
            name: {
                "coefficient": float(fit.coefficients[i]),
                "std_error": float(fit.std_errors[i]),
                "p_value": float(fit.p_values[i]),
                "stars": significance_stars(float(fit.p_values[i])),
            }
            for i, name in enumerate(fit.columns)
        },
    }
    if isinstance(fit, LinearFit):
        out["r_squared"] = fit.r_squared
        out["adj_r_squared"] = fit.adj_r_squared
    elif isinstance(fit, LogisticFit):
        out.update(
            {
                "log_likelihood": fit.log_likelihood,
                "null_log_likelihood": fit.null_log_likelihood,
                "cox_snell_r2": fit.cox_snell_r2,
                "nagelkerke_r2": fit.nagelkerke_r2,
                "classification_rate_at_half": fit.classification_rate_at_half,
                "auc": fit.auc,
            }
        )
    return out


def _half_point_bins(records):
    top = max(r.points for r in records)
    n_bins = int(round(top * 2)) + 1
    return [i / 2 for i in range(n_bins)]


def points_histogram_svg(records, width=900, height=540) -> str:
    """Grouped bar chart of the points distribution by extra-white group."""
    records = list(records)
    if not records:
        raise ValueError("no records to plot")
    bins = _half_point_bins(records)
    counts = {0: [0] * len(bins), 1: [0] * len(bins)}
    for r in records:
        idx = int(round(r.points * 2))
        counts[1 if r.extra_white else 0][idx] += 1

    margin_left, margin_bottom, margin_top = 60, 50, 30
    plot_w = width - margin_left - 20
    plot_h = height - margin_bottom - margin_top
    peak = max(max(counts[0]), max(counts[1]), 1)
    slot = plot_w / len(bins)
    bar = slot * 0.4

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    # y axis with 5 gridlines
    for i in range(6):
        value = peak * i / 5
        y = margin_top + plot_h * (1 - i / 5)
        parts.append(
            f'<line x1="{margin_left}" y1="{y:.1f}" x2="{width - 20}" '
            f'y2="{y:.1f}" stroke="#ddd"/>'
        )
        parts.append(
            f'<text x="{margin_left - 6}" y="{y + 4:.1f}" text-anchor="end" '
            f'font-size="11">{value:.0f}</text>'
        )
    for group, colour, dx in ((0, "#3264c8", 0.0), (1, "#c83232", bar)):
        for idx, count in enumerate(counts[group]):
            if count == 0:
                continue
            h = plot_h * count / peak
            x = margin_left + idx * slot + (slot - 2 * bar) / 2 + dx
            y = margin_top + plot_h - h
            parts.append(
                f'<rect x="{x:.1f}" y="{y:.1f}" width="{bar:.1f}" '
                f'height="{h:.1f}" fill="{colour}"/>'
            )
    for idx, value in enumerate(bins):
        if (idx % 2) and len(bins) > 14:
            continue
        x = margin_left + idx * slot + slot / 2
        parts.append(
            f'<text x="{x:.1f}" y="{height - margin_bottom + 16}" '
            f'text-anchor="middle" font-size="11">{value:g}</text>'
        )
    parts.append(
        f'<text x="{margin_left + plot_w / 2:.1f}" y="{height - 8}" '
        f'text-anchor="middle" font-size="13">Number of points</text>'
    )
    parts.append(
        f'<text x="16" y="{margin_top + plot_h / 2:.1f}" font-size="13" '
        f'text-anchor="middle" transform="rotate(-90 16 '
        f'{margin_top + plot_h / 2:.1f})">Frequency</text>'
    )
    legend_x = margin_left + 10
    parts += [
        f'<rect x="{legend_x}" y="{margin_top}" width="12" height="12" fill="#3264c8"/>',
        f'<text x="{legend_x + 18}" y="{margin_top + 10}" font-size="12">No extra white</text>',
        f'<rect x="{legend_x + 130}" y="{margin_top}" width="12" height="12" fill="#c83232"/>',
        f'<text x="{legend_x + 148}" y="{margin_top + 10}" font-size="12">Extra white</text>',
        "</svg>",
    ]
    return "\n".join(parts)
