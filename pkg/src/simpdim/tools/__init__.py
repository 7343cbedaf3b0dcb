"""JSON-ready operations shared by the command line and the MCP server."""

from simpdim.tools.analysis_tools import (
    analyze,
    join_sources,
)
from simpdim.tools.refinement_tools import (
    refine_complex,
    constants_table,
    profile_table,
    trajectory_table,
)
from simpdim.tools.experiment_tools import (
    survey,
    enumerate_graphs,
    level_set,
)
from simpdim.tools.verify_tools import (
    verify,
)

__all__ = [
    # Complex analysis
    "analyze",
    "join_sources",

    # Refinement and limit constants
    "refine_complex",
    "constants_table",
    "profile_table",
    "trajectory_table",

    # Graph experiments
    "survey",
    "enumerate_graphs",
    "level_set",

    # Verification suites
    "verify",
]
