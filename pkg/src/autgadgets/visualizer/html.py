"""
HTML-based visualizer using Jinja2 templates.

The page holds the run manifest, one table per report section and the
certification status. Matrices render as monospace blocks.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Optional

from jinja2 import Template

from autgadgets.io.formatter import ReportOutput
from autgadgets.io.parser import RunSettings
from autgadgets.visualizer.base import BaseVisualizer
from autgadgets.visualizer.terminal import is_matrix, plain_text

HTML_TEMPLATE = """<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <meta name="viewport" content="width=device-width, initial-scale=1.0">
    <title>{{ heading|e }}</title>
    <style>
        :root {
            --bg-primary: #1a1a2e;
            --bg-secondary: #16213e;
            --bg-tertiary: #0f3460;
            --accent-blue: #4da8da;
            --accent-green: #00d26a;
            --accent-red: #ff6b6b;
            --accent-yellow: #ffd93d;
            --text-primary: #e8e8e8;
            --text-secondary: #a0a0a0;
        }
        body {
            font-family: 'Segoe UI', Tahoma, Geneva, Verdana, sans-serif;
            background: linear-gradient(135deg, var(--bg-primary) 0%, var(--bg-secondary) 100%);
            color: var(--text-primary);
            margin: 0;
            padding: 2rem;
        }
        h1 { color: var(--accent-blue); }
        h2 { color: var(--accent-yellow); margin-top: 2rem; }
        .meta { color: var(--text-secondary); font-size: 0.9rem; }
        table { border-collapse: collapse; min-width: 40rem; background: var(--bg-tertiary); }
        td { border-bottom: 1px solid var(--bg-secondary); padding: 0.4rem 0.8rem; vertical-align: top; }
        td.key { font-weight: bold; white-space: nowrap; }
        pre { margin: 0; font-family: 'Consolas', monospace; color: var(--accent-blue); }
        .yes { color: var(--accent-green); font-weight: bold; }
        .no { color: var(--accent-red); font-weight: bold; }
        .status { margin-top: 2rem; font-size: 1.1rem; }
    </style>
</head>
<body>
    <h1>{{ heading|e }}</h1>
    <div class="meta">
        {% if limits %}<div>{{ limits|e }}</div>{% endif %}
        <div>version {{ manifest.version|e }}, seed {{ manifest.seed }}</div>
        {% for spec, digest in manifest.inputs.items() %}
        <div><code>{{ spec|e }}</code> sha256 {{ digest|e }}</div>
        {% endfor %}
    </div>
    {% for section in sections %}
    <h2>{{ section.name|e }}</h2>
    <table>
        {% for row in section.rows %}
        <tr>
            <td class="key">{{ row.key|e }}</td>
            <td>
                {% if row.kind == "bool" %}<span class="{{ 'yes' if row.value else 'no' }}">{{ 'yes' if row.value else 'no' }}</span>
                {% elif row.kind == "matrix" %}<pre>{{ row.value|join('\\n')|e }}</pre>
                {% else %}{{ row.value|e }}{% endif %}
            </td>
        </tr>
        {% endfor %}
    </table>
    {% endfor %}
    <div class="status {{ 'yes' if certified else 'no' }}">
        {{ 'All reported values certified' if certified else 'Some bounds are uncertified (search budget exhausted)' }}
    </div>
</body>
</html>
"""


def _row(key: str, value: Any) -> Dict[str, Any]:
    if isinstance(value, bool):
        return {"key": key, "kind": "bool", "value": value}
    if is_matrix(value):
        return {"key": key, "kind": "matrix", "value": value}
    return {"key": key, "kind": "text", "value": plain_text(value)}


class HTMLVisualizer(BaseVisualizer):
    """
    HTML visualizer for reports.
    """

    def __init__(self, settings: Optional[RunSettings] = None):
        super().__init__(settings)
        self.template = Template(HTML_TEMPLATE)

    def visualize(self, output: ReportOutput) -> None:
        """Print the HTML to stdout."""
        print(self.render_to_string(output))

    def save(self, output: ReportOutput, output_path: Path) -> None:
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, "w", encoding="utf-8") as f:
            f.write(self.render_to_string(output))

    def render_to_string(self, output: ReportOutput) -> str:
        sections: List[Dict[str, Any]] = [
            {"name": name, "rows": [_row(str(k), v) for k, v in section.items()]}
            for name, section in output.sections.items()
        ]
        return self.template.render(
            heading=self.get_heading(output),
            limits=self.get_limits(),
            manifest=output.manifest.to_dict(),
            sections=sections,
            certified=output.certified,
        )
