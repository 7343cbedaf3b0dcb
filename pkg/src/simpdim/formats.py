"""Input parsing and output rendering for complexes, graphs and exact numbers."""

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import mpmath
import networkx as nx

from simpdim.complexes import Complex, EmptySimplexError, Graph, PreComplex, generate
from simpdim.config import DECIMAL_DIGITS, logger
from simpdim.genfun import f_vector

FORMATS = ("json", "edgelist", "graph6")


class InputFormatError(ValueError):
    """Input text could not be parsed; carries the 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _fail(message: str, line: int = 1, column: int = 1) -> InputFormatError:
    error = InputFormatError(message, line, column)
    logger.error(str(error))
    return error


def parse_generators(text: str) -> Complex:
    """Parse a JSON list of generators (vertex lists) into their closure.

    An object with a "generators" or "faces" key is accepted as well; blank
    input is the empty complex.
    """
    if not text.strip():
        return Complex()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise _fail(e.msg, e.lineno, e.colno) from e
    if isinstance(data, dict):
        data = data.get("generators", data.get("faces"))
    if not isinstance(data, list):
        raise _fail("expected a list of generators")
    for k, generator in enumerate(data):
        if not isinstance(generator, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in generator
        ):
            raise _fail(f"generator {k} is not a list of non-negative integers")
    try:
        return generate(data)
    except EmptySimplexError as e:
        raise _fail(str(e)) from e


def parse_edge_list(text: str) -> Graph:
    """Parse "u v" lines into a graph.

    A first line holding a single integer is the vertex count and edges
    must then use labels 0..n-1. Without it the labels that occur are
    renumbered 0..n-1 in increasing order. Text after '#' is ignored.
    """
    declared: Optional[int] = None
    edges: List[tuple] = []
    seen_content = False
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        values = []
        for token in tokens:
            try:
                values.append(int(token))
            except ValueError:
                raise _fail(f"not an integer: {token!r}", line_number, raw.index(token) + 1) from None
            if values[-1] < 0:
                raise _fail(f"negative label {token}", line_number, raw.index(token) + 1)
        if len(values) == 1 and not seen_content:
            declared = values[0]
        elif len(values) == 2:
            if values[0] == values[1]:
                raise _fail(f"self-loop at {values[0]}", line_number, raw.index(tokens[0]) + 1)
            edges.append((values[0], values[1]))
        else:
            raise _fail("expected two labels per edge", line_number, raw.index(tokens[0]) + 1)
        seen_content = True

    if declared is not None:
        for u, v in edges:
            if max(u, v) >= declared:
                raise _fail(f"edge ({u}, {v}) exceeds the declared vertex count {declared}")
        return Graph(declared, frozenset(edges))
    labels = {v: i for i, v in enumerate(sorted({v for edge in edges for v in edge}))}
    return Graph(len(labels), frozenset((labels[u], labels[v]) for u, v in edges))


def parse_graph6(text: str) -> Graph:
    """Parse the first non-empty graph6 line (an optional >>graph6<< header is allowed)."""
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            return Graph.from_networkx(nx.from_graph6_bytes(line.encode("ascii")))
        except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
            raise _fail(f"invalid graph6 data: {e}", line_number) from e
    return Graph(0)


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def detect_format(path: Union[str, Path]) -> str:
    """Guess the format from the file suffix; edge list is the fallback."""
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "json"
    if suffix in (".g6", ".graph6"):
        return "graph6"
    return "edgelist"


def parse_input(text: str, fmt: str) -> Union[Complex, Graph]:
    if fmt == "json":
        return parse_generators(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    msg = f"Unknown input format {fmt!r}; expected one of {', '.join(FORMATS)}"
    logger.error(msg)
    raise ValueError(msg)


def load_input(path: Union[str, Path], fmt: Optional[str] = None) -> Union[Complex, Graph]:
    """Read and parse a complex (json) or graph (edgelist, graph6) file."""
    fmt = fmt or detect_format(path)
    text = Path(path).read_text(encoding="utf-8")
    logger.info(f"Loading {path} as {fmt}")
    return parse_input(text, fmt)


def format_rational(value: Union[Fraction, int]) -> str:
    """Exact rendering "p/q", or "p" for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        msg = f"Not a rational number: {text!r}"
        logger.error(msg)
        raise ValueError(msg) from e


def format_decimal(value: Union[Fraction, int, mpmath.mpf], digits: Optional[int] = None) -> str:
    """Decimal rendering with `digits` significant digits."""
    digits = digits or DECIMAL_DIGITS
    with mpmath.workdps(digits + 10):
        if isinstance(value, (Fraction, int)):
            value = Fraction(value)
            number = mpmath.mpf(value.numerator) / value.denominator
        else:
            number = mpmath.mpf(value)
        return mpmath.nstr(number, digits)


def parse_p_grid(text: str) -> List[Fraction]:
    """Expand "a:b:steps" into the steps+1 equally spaced values a..b (exact)."""
    parts = text.split(":")
    if len(parts) != 3:
        msg = f"Expected a grid a:b:steps, got {text!r}"
        logger.error(msg)
        raise ValueError(msg)
    a, b = parse_rational(parts[0]), parse_rational(parts[1])
    try:
        steps = int(parts[2])
    except ValueError as e:
        msg = f"Grid step count must be an integer, got {parts[2]!r}"
        logger.error(msg)
        raise ValueError(msg) from e
    if steps < 0 or not (0 <= a <= 1 and 0 <= b <= 1):
        msg = f"Grid {text!r} must have steps >= 0 and endpoints in [0, 1]"
        logger.error(msg)
        raise ValueError(msg)
    if steps == 0:
        return [a]
    return [a + (b - a) * k / steps for k in range(steps + 1)]


def complex_to_dict(G: PreComplex) -> Dict[str, Any]:
    """Output form of a complex: faces in canonical order plus its f-vector."""
    return {"faces": [list(x) for x in G.faces], "f_vector": list(f_vector(G).counts)}


def graph_to_dict(g: Graph) -> Dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)], "graph6": to_graph6(g)}


def rows_to_csv(rows: Sequence[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> str:
    """Render dict rows as CSV text with a header line."""
    if not rows and not columns:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns or rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()
