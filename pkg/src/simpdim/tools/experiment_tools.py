"""Experiment tools: G(n, p) surveys, exhaustive enumeration and level-set search."""

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from simpdim.config import DECIMAL_DIGITS, logger
from simpdim.experiments import (
    delta_max,
    er_dim_avg_expectation,
    er_survey,
    inductive_dim_polynomial,
    level_set_search,
)
from simpdim.formats import format_decimal, format_rational, graph_to_dict, to_graph6

SURVEY_COLUMNS = ("p", "mean_delta_exact", "mean_delta_decimal", "samples")

OBJECTIVES = ("delta", "average")


def survey(
    n: int,
    p_grid: Sequence[Fraction],
    samples: int,
    seed: int = 0,
    level: str = "graph",
    threads: Optional[int] = None,
    digits: Optional[int] = None,
) -> List[Dict[str, Any]]:
    """Monte-Carlo survey of the mean margin Dim+ - dim+/2 over G(n, p).

    Args:
        n: Vertex count
        p_grid: Edge probabilities
        samples: Graphs per grid point
        seed: Unsigned 64-bit seed
        level: "graph" or "complex" inductive dimension
        threads: Worker processes; the output does not depend on it
        digits: Digits of the decimal column

    Returns:
        List[Dict[str, Any]]: One row per grid point
    """
    digits = digits or DECIMAL_DIGITS
    return [
        {
            "p": format_rational(row.p),
            "mean_delta_exact": format_rational(row.mean_delta),
            "mean_delta_decimal": format_decimal(row.mean_delta, digits),
            "samples": row.samples,
        }
        for row in er_survey(n, p_grid, samples, seed, level, threads)
    ]


def enumerate_graphs(
    n: int,
    maximize: str = "delta",
    level: str = "graph",
    p: Fraction = Fraction(1, 2),
    threads: Optional[int] = None,
    list_maximizers: bool = False,
) -> Dict[str, Any]:
    """Exhaustive computations over all labeled graphs on n vertices.

    Args:
        n: Vertex count, bounded by SIMPDIM_MAX_ENUMERATION_N
        maximize: "delta" searches the largest margin; "average" returns
            E_p[Dim+] and the expected inductive dimension d_n(p)
        level: Inductive dimension level for the margin
        p: Edge probability for "average"
        threads: Worker processes
        list_maximizers: Include the graph6 codes of every maximizer

    Returns:
        Dict[str, Any]: Result of the requested computation

    Raises:
        ValueError: If the objective is unknown or n is out of range
    """
    if maximize not in OBJECTIVES:
        msg = f"Unknown objective {maximize!r}; expected one of {', '.join(OBJECTIVES)}"
        logger.error(msg)
        raise ValueError(msg)
    if maximize == "average":
        p = Fraction(p)
        polynomial = inductive_dim_polynomial(n)
        return {
            "n": n,
            "p": format_rational(p),
            "graphs": 2 ** (n * (n - 1) // 2),
            "expected_Dim_plus": format_rational(er_dim_avg_expectation(n, p, threads)),
            "expected_dim": format_rational(polynomial(p)),
            "dim_polynomial": str(polynomial.as_expr()),
        }
    best = delta_max(n, level, threads)
    result = {
        "n": n,
        "level": level,
        "max_delta": format_rational(best.value),
        "maximizer": graph_to_dict(best.graph),
        "maximizer_count": best.count,
    }
    if list_maximizers:
        result["maximizers_graph6"] = [to_graph6(g) for g in best.maximizers]
    return result


def level_set(n: int, target: Fraction, variety_dim: int) -> Dict[str, Any]:
    """Graphs on n vertices that are d-varieties with Dim+ = target."""
    graphs = level_set_search(n, target, variety_dim)
    return {
        "n": n,
        "target": format_rational(target),
        "variety_dim": variety_dim,
        "count": len(graphs),
        "graph6": [to_graph6(g) for g in graphs],
    }
