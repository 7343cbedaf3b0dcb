"""Refinement tools: iterated refinement, limit constants, eigenvector profiles, trajectories."""

from typing import Any, Dict, List, Optional

import mpmath

from simpdim.barycentric import (
    eigenvector_profile,
    limit_constant,
    limit_constant_decimal,
    refine,
    refine_fvector,
)
from simpdim.complexes import Complex
from simpdim.config import DECIMAL_DIGITS, PRECISION_DIGITS, logger
from simpdim.experiments import refinement_trajectory
from simpdim.formats import complex_to_dict, format_decimal, format_rational
from simpdim.genfun import dim_avg_plus, f_vector

CONSTANT_COLUMNS = ("d", "C_d", "C_d_decimal", "digits_p", "digits_q", "C_d_over_d", "note")

ZERO_DIMENSION_NOTE = "formula value; refinement fixes 0-dimensional complexes (Dim+ stays n/(n+1))"


def refine_complex(
    G: Complex, steps: int = 1, explicit: bool = False, face_cap: Optional[int] = None
) -> Dict[str, Any]:
    """Refine `steps` times, through the operator or by building order complexes.

    Args:
        G: Starting complex
        steps: Number of refinements, >= 0
        explicit: Build the order complexes (subject to the face cap)
        face_cap: Override of SIMPDIM_FACE_CAP for explicit refinement

    Returns:
        Dict[str, Any]: f-vector and Dim+ per step; the final complex when explicit

    Raises:
        ValueError: If steps is negative
        FaceCapExceeded: If an explicit step would exceed the face cap
    """
    if steps < 0:
        msg = f"Step count must be >= 0, got {steps}"
        logger.error(msg)
        raise ValueError(msg)
    fv = f_vector(G)
    current = G
    rows = [{"step": 0, "f_vector": list(fv.counts), "Dim_plus": format_rational(dim_avg_plus(fv))}]
    for step in range(1, steps + 1):
        if explicit:
            current = refine(current, face_cap)
            fv = f_vector(current)
        else:
            fv = refine_fvector(fv)
        rows.append(
            {"step": step, "f_vector": list(fv.counts), "Dim_plus": format_rational(dim_avg_plus(fv))}
        )
    result: Dict[str, Any] = {"mode": "explicit" if explicit else "fvector", "steps": rows}
    if explicit:
        result["complex"] = complex_to_dict(current)
    return result


def constants_table(
    max_d: int,
    min_d: int = 0,
    exact: bool = True,
    digits: Optional[int] = None,
) -> List[Dict[str, Any]]:
    """Rows of the limit constants C_d for min_d <= d <= max_d.

    With exact=False only the high-precision path runs and the exact
    columns stay empty; that is the route for d in the hundreds.
    """
    if min_d < 0 or max_d < min_d:
        msg = f"Need 0 <= min_d <= max_d, got {min_d}, {max_d}"
        logger.error(msg)
        raise ValueError(msg)
    digits = digits or DECIMAL_DIGITS
    rows = []
    for d in range(min_d, max_d + 1):
        row: Dict[str, Any] = {"d": d}
        if exact:
            value = limit_constant(d)
            row["C_d"] = format_rational(value)
            row["C_d_decimal"] = format_decimal(value, digits)
            row["digits_p"] = len(str(value.numerator))
            row["digits_q"] = len(str(value.denominator))
            row["C_d_over_d"] = format_decimal(value / d, digits) if d else ""
        else:
            with mpmath.workdps(max(PRECISION_DIGITS, digits + 10)):
                value = limit_constant_decimal(d, max(PRECISION_DIGITS, digits + 10))
                row["C_d"] = ""
                row["C_d_decimal"] = format_decimal(value, digits)
                row["digits_p"] = ""
                row["digits_q"] = ""
                row["C_d_over_d"] = format_decimal(value / d, digits) if d else ""
        row["note"] = ZERO_DIMENSION_NOTE if d == 0 else ""
        rows.append(row)
    logger.info(f"Computed {len(rows)} limit constants (exact={exact})")
    return rows


def profile_table(d: int, digits: Optional[int] = None) -> List[Dict[str, Any]]:
    """Eigenvector profile rows: cardinality k, probability, forward difference."""
    digits = digits or DECIMAL_DIGITS
    return [
        {
            "k": k,
            "probability": format_decimal(p, digits),
            "difference": format_decimal(diff, digits),
        }
        for k, p, diff in eigenvector_profile(d, max(PRECISION_DIGITS, digits + 10))
    ]


def trajectory_table(
    G: Complex, steps: int, log_gap: bool = False, digits: Optional[int] = None
) -> List[Dict[str, Any]]:
    """Per-step Dim+, gap to C_d and cardinality moments of the refinement sequence."""
    digits = digits or DECIMAL_DIGITS
    rows = []
    for point in refinement_trajectory(G, steps):
        row: Dict[str, Any] = {
            "step": point.step,
            "Dim_plus": format_rational(point.dim_plus),
            "Dim_plus_decimal": format_decimal(point.dim_plus, digits),
            "gap": format_rational(point.gap) if point.gap is not None else "",
            "variance_plus": format_decimal(point.variance, digits),
            "third_moment": format_decimal(point.third_moment, digits),
        }
        if log_gap:
            row["log_gap"] = format_decimal(point.log_gap, digits) if point.log_gap is not None else ""
        rows.append(row)
    return rows

