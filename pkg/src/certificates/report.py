from pathlib import Path
from typing import Any, Union

from jinja2 import Environment

from .certificate import Certificate


class ReportGenerator:
    """Standalone HTML page summarizing one or more certificates."""

    template_string = """<!DOCTYPE html>
<html>
<head>
    <meta charset="utf-8">
    <title>{{ title }}</title>
    <style>
        body {
            font-family: Georgia, 'Times New Roman', serif;
            font-size: 11pt;
            line-height: 1.5;
            color: #333;
            max-width: 900px;
            margin: 2cm auto;
            padding: 0 1cm;
        }
        h1 {
            font-size: 20pt;
            border-bottom: 2px solid #000;
            padding-bottom: 0.3cm;
        }
        section {
            margin-bottom: 1.5cm;
        }
        .verdict-Free { color: #1a7f37; }
        .verdict-NotCertified { color: #9a6700; }
        .verdict-PreconditionFailed { color: #cf222e; }
        code, pre {
            font-family: Menlo, Consolas, monospace;
            font-size: 9.5pt;
        }
        pre {
            background: #f5f5f5;
            border-left: 3px solid #ccc;
            padding: 0.3cm;
            overflow-x: auto;
        }
        table {
            border-collapse: collapse;
        }
        td {
            padding: 0.1cm 0.4cm 0.1cm 0;
            vertical-align: top;
        }
        .notes {
            font-size: 9pt;
            color: #666;
        }
    </style>
</head>
<body>
    <h1>{{ title }}</h1>
    <p>{{ total }} certificate{{ 's' if total != 1 else '' }}</p>

    {% for name, cert in certificates %}
    <section>
        <h2>{{ name }} <span class="verdict-{{ cert.verdict }}">{{ cert.verdict }}</span></h2>
        <table>
            <tr><td>kind</td><td>{{ cert.kind }}</td></tr>
            <tr><td>field</td><td>{{ cert.field|field_name }}</td></tr>
            <tr><td>variables</td><td><code>{{ cert.variables|join(', ') }}</code></td></tr>
            <tr><td>order</td><td>{{ cert.order }}</td></tr>
        </table>
        <h3>Sequence</h3>
        <pre>{% for f in cert.sequence %}{{ f }}
{% endfor %}</pre>
        {% if cert.kind == 'split' %}
        <table>
            <tr><td>d</td><td>{{ cert.d }}</td></tr>
            <tr><td>printed d</td><td>{{ cert.printed_d }}</td></tr>
            <tr><td>oracle degrees</td><td>{{ cert.oracle_degrees|join(', ') }}</td></tr>
            <tr><td>formula agrees</td><td>{{ cert.formula_agrees }}</td></tr>
        </table>
        <h3>Syzygies</h3>
        <pre>{{ cert.syzygies|matrix }}</pre>
        {% else %}
        <h3>&theta;</h3>
        <pre>{{ cert.theta|matrix }}</pre>
        <table>
            <tr><td>h</td><td><code>{{ cert.h }}</code></td></tr>
            <tr><td>g_theta</td><td><code>{{ cert.g_theta }}</code></td></tr>
            <tr><td>g_alpha</td><td><code>{{ cert.g_alpha }}</code></td></tr>
            <tr><td>g_alphagamma</td><td><code>{{ cert.g_alphagamma }}</code></td></tr>
            <tr><td>splitting degrees</td><td>{{ cert.splitting_degrees|join(', ') }}</td></tr>
            <tr><td>twists</td><td>{{ cert.twists|join(', ') }}</td></tr>
        </table>
        {% endif %}
        {% if cert.notes %}
        <ul class="notes">
            {% for note in cert.notes %}
            <li>{{ note }}</li>
            {% endfor %}
        </ul>
        {% endif %}
    </section>
    {% endfor %}
</body>
</html>
"""

    def __init__(self, title: str = "logfree certificates") -> None:
        self.title = title
        self.certificates: list[tuple[str, dict[str, Any]]] = list()
        self.html = ""

    def add(self, name: str, certificate: Union[Certificate, dict[str, Any]]) -> None:
        payload = certificate.generate() if isinstance(certificate, Certificate) else certificate
        self.certificates.append((name, payload))

    @staticmethod
    def _field_name(field: dict[str, Any]) -> str:
        return f"GF({field['p']})" if field.get("kind") == "prime" else "QQ"

    @staticmethod
    def _matrix(rows: list[list[str]]) -> str:
        return "\n".join("[" + ", ".join(row) + "]" for row in rows)

    def generate(self) -> None:
        env = Environment(autoescape=True)
        env.filters["field_name"] = self._field_name
        env.filters["matrix"] = self._matrix
        template = env.from_string(self.template_string)
        self.html = template.render(
            title=self.title,
            certificates=self.certificates,
            total=len(self.certificates),
        )

    def dump(self, output_path: Union[str, Path]) -> None:
        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.html)
