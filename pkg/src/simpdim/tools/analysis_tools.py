"""Analysis tools: the full functional report of a complex and of joins."""

from fractions import Fraction
from typing import Any, Dict, Optional, Union

from simpdim.complexes import (
    Complex,
    Graph,
    dim_inductive,
    dim_inductive_graph,
    dim_max,
    euler_characteristic,
    graph_join,
    join,
    max_plus,
    skeleton_graph,
    whitney_complex,
)
from simpdim.config import logger
from simpdim.formats import complex_to_dict, format_decimal, format_rational
from simpdim.genfun import (
    augmented_cardinality,
    dim_avg,
    dim_avg_plus,
    f_vector,
    genus,
    variance_plus,
)

Source = Union[Complex, Graph]

EXACT_FIELDS = ("dim_inductive", "dim_plus", "Dim_plus", "Dim", "variance_plus", "delta")


def as_complex(source: Source) -> Complex:
    """Complexes pass through; graphs become their Whitney complex."""
    if isinstance(source, Graph):
        return whitney_complex(source)
    return source


def analyze(
    source: Source, graph_dim: bool = False, decimal: Optional[int] = None
) -> Dict[str, Any]:
    """Compute every functional of a complex.

    Args:
        source: A complex, or a graph standing for its Whitney complex
        graph_dim: Take the inductive dimension on the graph (the 1-skeleton
            for complex input) instead of on the face poset
        decimal: If given, add `<field>_decimal` entries with that many digits

    Returns:
        Dict[str, Any]: Report with exact values rendered as "p/q"
    """
    G = as_complex(source)
    fv = f_vector(G)
    if graph_dim:
        g = source if isinstance(source, Graph) else skeleton_graph(G)
        dim = dim_inductive_graph(g)
    else:
        dim = dim_inductive(G)
    dim_plus = dim + 1
    Dim_plus = dim_avg_plus(fv)
    values: Dict[str, Fraction] = {
        "dim_inductive": dim,
        "dim_plus": dim_plus,
        "Dim_plus": Dim_plus,
        "Dim": dim_avg(fv),
        "variance_plus": variance_plus(fv),
        "delta": Dim_plus - dim_plus / 2,
    }

    report: Dict[str, Any] = {
        "f_vector": list(fv.counts),
        "faces": fv.total,
        "f(1)": augmented_cardinality(fv),
        "f(-1)": format_rational(genus(fv)),
        "euler_characteristic": euler_characteristic(G),
        "genus": format_rational(genus(fv)),
        "dim_max": dim_max(G),
        "max_plus": max_plus(G),
        "dim_level": "graph" if graph_dim else "complex",
    }
    for name in EXACT_FIELDS:
        report[name] = format_rational(values[name])
    if decimal:
        for name in EXACT_FIELDS:
            report[f"{name}_decimal"] = format_decimal(values[name], decimal)
    logger.info(f"Analyzed complex with f-vector {list(fv.counts)}")
    return report


def join_sources(
    first: Source, second: Source, graph_dim: bool = False, decimal: Optional[int] = None
) -> Dict[str, Any]:
    """Join two inputs and report the join together with both operands.

    Two graphs are joined as graphs (Zykov join); otherwise the complexes
    are joined.
    """
    joined: Source
    if isinstance(first, Graph) and isinstance(second, Graph):
        joined = graph_join(first, second)
    else:
        joined = join(as_complex(first), as_complex(second))
    return {
        "join": analyze(joined, graph_dim, decimal),
        "left": analyze(first, graph_dim, decimal),
        "right": analyze(second, graph_dim, decimal),
        "complex": complex_to_dict(as_complex(joined)),
    }
