"""MCP server exposing the simpdim tools."""

import signal
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional

from fastmcp import FastMCP

from simpdim.config import logger, MCP_TRANSPORT, MCP_HOST, MCP_PORT
from simpdim.formats import parse_input, parse_p_grid, parse_rational
from simpdim.tools import (
    # Complex analysis
    analyze,
    join_sources,

    # Refinement and limit constants
    refine_complex,
    constants_table,
    profile_table,
    trajectory_table,

    # Graph experiments
    survey,
    enumerate_graphs,
    level_set,

    # Verification suites
    verify,
)
from simpdim.tools.analysis_tools import as_complex


# Set up MCP server
app = FastMCP(name="simpdim")


@app.tool()
def mcp_analyze(
    text: str, format: str = "json", graph_dim: bool = False, decimal: Optional[int] = None
) -> Dict[str, Any]:
    """Report every functional of a complex (f-vector, genus, Dim+, dim, margin).

    Args:
        text: Generators as JSON, an edge list, or a graph6 line
        format: One of json, edgelist, graph6
        graph_dim: Use the graph-level inductive dimension
        decimal: Number of digits for extra decimal fields

    Returns:
        Dict[str, Any]: Exact values as "p/q" strings

    Raises:
        InputFormatError: If the text does not parse
    """
    return analyze(parse_input(text, format), graph_dim, decimal)


@app.tool()
def mcp_join(
    first: str, second: str, format: str = "json", graph_dim: bool = False
) -> Dict[str, Any]:
    """Join two complexes (or graphs) and report the join and both operands.

    Args:
        first: First input text
        second: Second input text
        format: Format of both inputs
        graph_dim: Use the graph-level inductive dimension

    Returns:
        Dict[str, Any]: Reports of the join, its operands and its faces
    """
    return join_sources(parse_input(first, format), parse_input(second, format), graph_dim)


@app.tool()
def mcp_refine(
    text: str, format: str = "json", steps: int = 1, explicit: bool = False
) -> Dict[str, Any]:
    """Iterate the Barycentric refinement through the operator or explicitly.

    Args:
        text: Input text
        format: One of json, edgelist, graph6
        steps: Number of refinements
        explicit: Build the order complexes (limited by SIMPDIM_FACE_CAP)

    Returns:
        Dict[str, Any]: Per-step f-vector and Dim+

    Raises:
        FaceCapExceeded: If explicit refinement would exceed the face cap
    """
    return refine_complex(as_complex(parse_input(text, format)), steps, explicit)


@app.tool()
def mcp_constants(
    max_d: int, min_d: int = 0, exact: bool = True, profile_d: Optional[int] = None
) -> List[Dict[str, Any]]:
    """Limit constants C_d, or the eigenvector profile of A_d when profile_d is given.

    Args:
        max_d: Largest dimension
        min_d: Smallest dimension
        exact: Compute the exact rationals (slow beyond d ~ 200)
        profile_d: Dimension of the eigenvector profile instead

    Returns:
        List[Dict[str, Any]]: Table rows
    """
    if profile_d is not None:
        return profile_table(profile_d)
    return constants_table(max_d, min_d, exact)


@app.tool()
def mcp_survey(
    n: int, p_grid: str, samples: int, seed: int = 0, level: str = "graph"
) -> List[Dict[str, Any]]:
    """Monte-Carlo mean of Dim+ - dim+/2 over Erdős–Rényi graphs.

    Args:
        n: Vertex count
        p_grid: Grid "a:b:steps"
        samples: Samples per grid point
        seed: Unsigned 64-bit seed
        level: "graph" or "complex" inductive dimension

    Returns:
        List[Dict[str, Any]]: One row per grid point
    """
    return survey(n, parse_p_grid(p_grid), samples, seed, level)


@app.tool()
def mcp_enumerate(
    n: int,
    maximize: str = "delta",
    level: str = "graph",
    p: str = "1/2",
    level_set_target: Optional[str] = None,
    variety_dim: int = 1,
) -> Dict[str, Any]:
    """Exhaustive computations over all labeled graphs on n vertices.

    Args:
        n: Vertex count (at most SIMPDIM_MAX_ENUMERATION_N)
        maximize: "delta" for the margin maximizer, "average" for E_p[Dim+] and d_n(p)
        level: Inductive dimension level for the margin
        p: Edge probability for "average"
        level_set_target: If given, list variety graphs with this Dim+ instead
        variety_dim: Dimension of the varieties in the level-set search

    Returns:
        Dict[str, Any]: Result of the computation
    """
    if level_set_target is not None:
        return level_set(n, parse_rational(level_set_target), variety_dim)
    return enumerate_graphs(n, maximize, level, Fraction(parse_rational(p)), list_maximizers=True)


@app.tool()
def mcp_verify(suite: str, seed: int = 0) -> Dict[str, Any]:
    """Run a verification suite: paper-values, invariants or oracle.

    Returns:
        Dict[str, Any]: Check count, pass flag and failures
    """
    return verify(suite, seed)


@app.tool()
def mcp_trajectory(
    text: str, format: str = "json", steps: int = 5, log_gap: bool = True
) -> List[Dict[str, Any]]:
    """Dim+, gap to the limit and cardinality moments along the refinement sequence.

    Args:
        text: Input text
        format: One of json, edgelist, graph6
        steps: Number of refinements
        log_gap: Include log|C_d - Dim+|

    Returns:
        List[Dict[str, Any]]: One row per step
    """
    return trajectory_table(as_complex(parse_input(text, format)), steps, log_gap)


# Collect all registered tools for logging
simpdim_tools = [
    mcp_analyze,
    mcp_join,
    mcp_refine,
    mcp_constants,
    mcp_survey,
    mcp_enumerate,
    mcp_verify,
    mcp_trajectory,
]

logger.info(f"Registered {len(simpdim_tools)} simpdim tools with MCP server")


def signal_handler(sig, frame):
    """Handle termination signals."""
    logger.info("Shutting down MCP server")
    sys.exit(0)


def start_server() -> None:
    """Start the MCP server with configured transport."""
    signal.signal(signal.SIGINT, signal_handler)
    signal.signal(signal.SIGTERM, signal_handler)
    try:
        if MCP_TRANSPORT in ["sse", "streamable-http"]:
            logger.info(f"Starting MCP server with {MCP_TRANSPORT} transport on {MCP_HOST}:{MCP_PORT}")
            app.run(transport=MCP_TRANSPORT, host=MCP_HOST, port=MCP_PORT)
        else:
            logger.info("Starting MCP server with stdio transport")
            app.run(transport="stdio")
    except Exception as e:
        logger.error(f"Failed to start MCP server: {e}")
        sys.exit(1)


if __name__ == "__main__":
    start_server()
