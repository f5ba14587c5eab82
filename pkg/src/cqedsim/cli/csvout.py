"""Deterministic CSV output.

Floats are printed with 9 significant digits, '.' decimal separator and
'\\n' line endings; RFC-4180 quoting is applied where needed so identical
tables serialize byte-identically.
"""

from pathlib import Path


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if value == 0.0:
            return "0"
        return format(value, ".9g")
    return str(value)


def _quote(field: str) -> str:
    if any(c in field for c in (',', '"', '\n', '\r')):
        return '"' + field.replace('"', '""') + '"'
    return field


def render_csv(headers, rows) -> str:
    lines = [",".join(_quote(h) for h in headers)]
    for row in rows:
        lines.append(",".join(_quote(format_value(v)) for v in row))
    return "\n".join(lines) + "\n"


def write_csv(path, headers, rows):
    Path(path).write_text(render_csv(headers, rows), encoding="utf-8",
                          newline="")
