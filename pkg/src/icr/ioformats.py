"""Matrix file format, report rendering and the simulation table.

Matrix files are whitespace- or comma-separated grids; ``*`` marks a
missing pair and entries may be decimals or fractions.  Values that
match a judgment-scale element are printed back as fractions so files
stay human-auditable; everything else uses 12 significant digits.
"""

from dataclasses import dataclass

from .errors import ParseError
from .matrices import SAATY_SCALE, validate_incomplete

MISSING_TOKEN = "*"


def _parse_token(tok, line, col):
    if tok == MISSING_TOKEN:
        return None
    if "/" in tok:
        num, _, den = tok.partition("/")
        try:
            value = float(num) / float(den)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(line, col, tok, str(exc)) from None
        return value
    try:
        return float(tok)
    except ValueError:
        raise ParseError(line, col, tok, "not a number, fraction or '*'") \
            from None


def parse_matrix(text, max_n=15):
    """Parses a grid into a validated IncompleteMatrix."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        tokens = stripped.replace(",", " ").split()
        row = [_parse_token(tok, lineno, col)
               for col, tok in enumerate(tokens, start=1)]
        rows.append(row)
    if not rows:
        raise ParseError(1, 1, "", "empty matrix")
    width = {len(r) for r in rows}
    if width != {len(rows)}:
        raise ParseError(len(rows), 1, "",
                         f"expected a square grid, got rows of width {sorted(width)}")
    return validate_incomplete(rows, max_n=max_n)


def format_value(value):
    """Fraction for scale elements, else 12 significant digits."""
    for s in SAATY_SCALE:
        if abs(value - s) <= 1e-12 * s:
            if s >= 1.0:
                return str(int(round(s)))
            return f"1/{int(round(1.0 / s))}"
    return f"{value:.12g}"


def render_matrix(matrix):
    """Inverse of parse_matrix up to 12 significant digits."""
    import numpy as np

    lines = []
    for i in range(matrix.n):
        cells = []
        for j in range(matrix.n):
            v = matrix.values[i, j]
            cells.append(MISSING_TOKEN if np.isnan(v) else format_value(v))
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Report:
    """Everything the analyze command tells the user about one matrix."""

    matrix_rows: tuple        # echoed matrix, one rendered string per row
    n: int
    m: int
    connected: bool
    spanning_tree: bool
    method: str
    lambda_max: float
    ci: float
    ri: float
    ri_source: str
    cr: float
    accepted: bool
    threshold: float
    fills: tuple              # of (i, j, value)


def build_report(matrix, result, verdict):
    from .graph import build_graph, is_connected, is_spanning_tree

    graph = build_graph(matrix)
    rows = tuple(render_matrix(matrix).splitlines())
    return Report(
        matrix_rows=rows, n=matrix.n, m=matrix.m,
        connected=is_connected(graph),
        spanning_tree=is_spanning_tree(graph),
        method=result.method.value,
        lambda_max=result.lambda_max, ci=verdict.ci,
        ri=verdict.ri_used, ri_source=verdict.ri_source.value,
        cr=verdict.cr, accepted=verdict.accepted,
        threshold=verdict.threshold,
        fills=tuple((i, j, v) for (i, j), v in result.fills))


def render_report_text(report):
    lines = ["Matrix:"]
    lines += [f"  {row}" for row in report.matrix_rows]
    lines.append(f"Size n = {report.n}, missing pairs m = {report.m}")
    lines.append(f"Graph: connected = {report.connected}, "
                 f"spanning tree = {report.spanning_tree}")
    lines.append(f"Completion method: {report.method}")
    for i, j, v in report.fills:
        lines.append(f"  fill ({i + 1}, {j + 1}) = {format_value(v)}")
    lines.append(f"lambda_max = {report.lambda_max:.6f}")
    lines.append(f"CI = {report.ci:.6f}")
    lines.append(f"RI({report.n}, {report.m}) = {report.ri:.6g} "
                 f"({report.ri_source})")
    lines.append(f"CR = {report.cr:.6f}  (threshold {report.threshold:g})")
    lines.append("Verdict: ACCEPTED" if report.accepted
                 else "Verdict: REJECTED")
    return "\n".join(lines) + "\n"


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def render_report_machine(report):
    """Flat one-datum-per-line form; see parse_report_machine."""
    lines = []
    for key in ("n", "m", "connected", "spanning_tree", "method",
                "lambda_max", "ci", "ri", "ri_source", "cr", "accepted",
                "threshold"):
        lines.append(f"{key}: {_fmt(getattr(report, key))}")
    for k, (i, j, v) in enumerate(report.fills):
        lines.append(f"fill.{k}.i: {i}")
        lines.append(f"fill.{k}.j: {j}")
        lines.append(f"fill.{k}.value: {_fmt(float(v))}")
    for r, row in enumerate(report.matrix_rows):
        lines.append(f"matrix.{r}: {row}")
    return "\n".join(lines) + "\n"


def parse_report_machine(text):
    """Machine report back into a dict of typed values."""
    out = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if value in ("true", "false"):
            out[key] = value == "true"
        elif key.startswith("matrix.") or key in ("method", "ri_source"):
            out[key] = value
        elif key in ("n", "m") or key.endswith((".i", ".j")):
            out[key] = int(value)
        else:
            out[key] = float(value)
    return out


def render_simulation_table(results):
    """Whitespace-separated table of simulation runs."""
    header = "n m samples rejected ri std_error seed"
    lines = [header]
    for r in results:
        lines.append(f"{r.n} {r.m} {r.samples_kept} {r.samples_rejected} "
                     f"{r.ri:.12g} {r.std_error:.12g} {r.seed}")
    return "\n".join(lines) + "\n"
