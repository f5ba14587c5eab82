"""Minimal self-contained SVG line plots (polyline, axes, ticks, legend)."""

from pathlib import Path

WIDTH, HEIGHT = 800, 500
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 75, 25, 30, 55
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
N_TICKS = 6


def _fmt(v: float) -> str:
    return format(v, ".6g")


def _numeric_columns(headers, rows):
    cols = []
    for j in range(len(headers)):
        try:
            values = [float(row[j]) for row in rows]
        except (TypeError, ValueError):
            continue
        cols.append((headers[j], values))
    return cols


def _scale(values, lo_px, hi_px):
    vmin, vmax = min(values), max(values)
    if vmax == vmin:
        vmin, vmax = vmin - 1.0, vmax + 1.0
    span = vmax - vmin

    def to_px(v):
        return lo_px + (v - vmin) / span * (hi_px - lo_px)

    return to_px, vmin, vmax


def render_line_plot(headers, rows, title: str = "") -> str:
    cols = _numeric_columns(headers, rows)
    if len(cols) < 2 or not rows:
        raise ValueError("need at least two numeric columns to plot")
    x_name, x = cols[0]
    series = cols[1:]
    x_px, xmin, xmax = _scale(x, MARGIN_L, WIDTH - MARGIN_R)
    all_y = [v for _, ys in series for v in ys]
    y_px, ymin, ymax = _scale(all_y, HEIGHT - MARGIN_B, MARGIN_T)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" '
        f'width="{WIDTH - MARGIN_L - MARGIN_R}" '
        f'height="{HEIGHT - MARGIN_T - MARGIN_B}" fill="none" '
        f'stroke="black"/>',
    ]
    if title:
        parts.append(
            f'<text x="{WIDTH / 2:.1f}" y="{MARGIN_T - 10}" '
            f'text-anchor="middle" font-size="14">{title}</text>')
    for i in range(N_TICKS):
        frac = i / (N_TICKS - 1)
        xv = xmin + frac * (xmax - xmin)
        px = MARGIN_L + frac * (WIDTH - MARGIN_L - MARGIN_R)
        parts.append(f'<line x1="{px:.1f}" y1="{HEIGHT - MARGIN_B}" '
                     f'x2="{px:.1f}" y2="{HEIGHT - MARGIN_B + 5}" '
                     f'stroke="black"/>')
        parts.append(f'<text x="{px:.1f}" y="{HEIGHT - MARGIN_B + 18}" '
                     f'text-anchor="middle" font-size="11">{_fmt(xv)}</text>')
        yv = ymin + frac * (ymax - ymin)
        py = (HEIGHT - MARGIN_B) - frac * (HEIGHT - MARGIN_T - MARGIN_B)
        parts.append(f'<line x1="{MARGIN_L - 5}" y1="{py:.1f}" '
                     f'x2="{MARGIN_L}" y2="{py:.1f}" stroke="black"/>')
        parts.append(f'<text x="{MARGIN_L - 8}" y="{py + 4:.1f}" '
                     f'text-anchor="end" font-size="11">{_fmt(yv)}</text>')
    parts.append(f'<text x="{(MARGIN_L + WIDTH - MARGIN_R) / 2:.1f}" '
                 f'y="{HEIGHT - 12}" text-anchor="middle" '
                 f'font-size="12">{x_name}</text>')
    for idx, (name, ys) in enumerate(series):
        color = PALETTE[idx % len(PALETTE)]
        pts = " ".join(f"{x_px(xv):.2f},{y_px(yv):.2f}"
                       for xv, yv in zip(x, ys))
        parts.append(f'<polyline points="{pts}" fill="none" '
                     f'stroke="{color}" stroke-width="1.5"/>')
        ly = MARGIN_T + 16 + 16 * idx
        lx = WIDTH - MARGIN_R - 150
        parts.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 25}" '
                     f'y2="{ly - 4}" stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{lx + 30}" y="{ly}" '
                     f'font-size="11">{name}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_line_plot(path, headers, rows, title: str = ""):
    Path(path).write_text(render_line_plot(headers, rows, title),
                          encoding="utf-8", newline="")
