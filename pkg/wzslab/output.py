"""
Output generation module
Renders reports as JSON, CSV or text tables and writes them to stdout or a file

A report is a plain dict:
    {"command": str, "header": {bounds and caps}, "body": {...},
     "columns": [...], "rows": [{...}, ...]}   (columns/rows optional)
Nothing time-dependent is ever rendered.
"""
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from wzslab.config import OUTPUT_FORMATS
from wzslab.errors import ConfigError
from wzslab.utils import ensure_dir

def make_report(command, header, body, rows=None, columns=None):
    report = {"command": command, "header": dict(header), "body": body}
    if rows is not None:
        report["columns"] = list(columns) if columns is not None else sorted(rows[0]) if rows else []
        report["rows"] = list(rows)
    return report

def _jsonable(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if hasattr(value, "as_dict"):
        return value.as_dict()
    if hasattr(value, "serialize"):
        return value.serialize()
    return repr(value)

def render_json(report):
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False, default=_jsonable) + "\n"

def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return "{" + ",".join(str(v) for v in value) + "}"
    return str(value)

def _flatten(body, prefix=""):
    """Nested dicts to (dotted key, value) pairs in key order"""
    pairs = []
    for key in sorted(body):
        value = body[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            pairs.extend(_flatten(value, name + "."))
        else:
            pairs.append((name, value))
    return pairs

def render_csv(report):
    """Rows when the report has them, key/value pairs of the body otherwise"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if "rows" in report:
        columns = report["columns"]
        writer.writerow(columns)
        for row in report["rows"]:
            writer.writerow([_cell(row.get(c)) for c in columns])
    else:
        writer.writerow(["key", "value"])
        for key, value in _flatten(report["body"]):
            writer.writerow([key, _cell(value) if not isinstance(value, list) else json.dumps(value, default=_jsonable)])
    return buffer.getvalue()

def _table(columns, rows):
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip(),
             "  ".join("-" * w for w in widths)]
    for r in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    return lines

def render_text(report):
    lines = [f"# {report['command']}"]
    for key in sorted(report["header"]):
        lines.append(f"# {key}: {_cell(report['header'][key])}")
    lines.append("")
    for key, value in _flatten(report["body"]):
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            columns = sorted(value[0])
            lines.extend("  " + line for line in _table(columns, value))
        elif isinstance(value, list):
            lines.append(f"{key}: {json.dumps(value, default=_jsonable, ensure_ascii=False)}")
        else:
            lines.append(f"{key}: {_cell(value)}")
    if "rows" in report:
        lines.append("")
        lines.extend(_table(report["columns"], report["rows"]))
    return "\n".join(lines) + "\n"

_RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}

def render(report, fmt="json"):
    if fmt not in OUTPUT_FORMATS:
        raise ConfigError(f"unknown output format {fmt!r}")
    return _RENDERERS[fmt](report)

def write_report(report, fmt="json", out=None):
    """
    Render and write a report

    Args:
        report: report dict
        fmt: json, csv or text
        out: file path, or None for stdout

    Returns:
        str: the rendered text
    """
    text = render(report, fmt)
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        path = Path(out)
        ensure_dir(path.parent)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    return text
