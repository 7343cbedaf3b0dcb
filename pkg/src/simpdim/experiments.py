"""Random and exhaustive graph experiments around Dim+, dim and the refinement limit.

Sampling uses numpy's counter-based Philox generator keyed by
(sample_index << 64) | seed. Edge k of the lexicographic pair order
(0,1), (0,2), ..., (n-2,n-1) is present iff draw_k * q < a * 2**64 where
p = a/q and draw_k is the k-th raw 64-bit output. The contract only
depends on the key and the raw stream, so results are identical for any
worker count.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple, TypeVar, Union

import mpmath
import numpy as np
import sympy

from simpdim.barycentric import limit_constant, refine_fvector
from simpdim.complexes import (
    Complex,
    Graph,
    dim_inductive,
    dim_inductive_graph,
    generate,
    is_variety_graph,
    whitney_complex,
)
from simpdim.config import DEFAULT_THREADS, MAX_ENUMERATION_N, logger
from simpdim.genfun import FVector, cardinality_moment, dim_avg_plus, f_vector, variance_plus

P = sympy.Symbol("p")

LEVELS = ("graph", "complex")

Item = TypeVar("Item")
Result = TypeVar("Result")


@dataclass(frozen=True)
class ErParams:
    """Parameters of one Erdős–Rényi draw G(n, p)."""

    n: int
    p: Fraction
    seed: int = 0

    def __post_init__(self) -> None:
        p = Fraction(self.p)
        if self.n < 0:
            msg = f"Vertex count must be >= 0, got {self.n}"
            logger.error(msg)
            raise ValueError(msg)
        if not 0 <= p <= 1:
            msg = f"Edge probability must lie in [0, 1], got {p}"
            logger.error(msg)
            raise ValueError(msg)
        if not 0 <= self.seed < 1 << 64:
            msg = f"Seed must be an unsigned 64-bit integer, got {self.seed}"
            logger.error(msg)
            raise ValueError(msg)
        object.__setattr__(self, "p", p)


def _generator(seed: int, sample_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=(sample_index << 64) | seed))


def _pairs(n: int) -> List[Tuple[int, int]]:
    return list(combinations(range(n), 2))


def sample_er(params: ErParams, sample_index: int = 0) -> Graph:
    """Draw one G(n, p) graph; deterministic in (seed, sample_index)."""
    pairs = _pairs(params.n)
    if not pairs:
        return Graph(params.n)
    draws = _generator(params.seed, sample_index).bit_generator.random_raw(len(pairs))
    threshold = params.p.numerator << 64
    q = params.p.denominator
    edges = frozenset(pair for pair, draw in zip(pairs, draws) if int(draw) * q < threshold)
    return Graph(params.n, edges)


def random_complex(n: int, m: int, seed: int = 0, sample_index: int = 0) -> Complex:
    """R[n, m]: closure of m random subsets of {0..n-1}, each of uniform random size 1..n."""
    if n < 1 or m < 0:
        msg = f"Random complexes need n >= 1 and m >= 0, got n={n}, m={m}"
        logger.error(msg)
        raise ValueError(msg)
    rng = _generator(seed, sample_index)
    generators = []
    for _ in range(m):
        size = int(rng.integers(1, n + 1))
        generators.append(tuple(int(v) for v in rng.choice(n, size=size, replace=False)))
    return generate(generators)


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is the bitmask over the pair order (0,1), (0,2), ..."""
    pairs = _pairs(n)
    return Graph(n, frozenset(pair for k, pair in enumerate(pairs) if mask >> k & 1))


def _check_enumeration_size(n: int) -> None:
    if n < 0 or n > MAX_ENUMERATION_N:
        msg = f"Exhaustive enumeration supports 0 <= n <= {MAX_ENUMERATION_N}, got {n}"
        logger.error(msg)
        raise ValueError(msg)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Yield all 2^C(n,2) labeled graphs on n vertices in edge-bitmask order."""
    _check_enumeration_size(n)
    for mask in range(1 << comb(n, 2)):
        yield graph_from_mask(n, mask)


def _parallel_map(
    func: Callable[[Item], Result], items: Sequence[Item], threads: Optional[int] = None
) -> List[Result]:
    workers = DEFAULT_THREADS if threads is None else threads
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]
    chunksize = max(1, len(items) // (4 * workers))
    with Pool(workers) as pool:
        return pool.map(func, items, chunksize=chunksize)


def _whitney_dim_plus(args: Tuple[int, int]) -> Tuple[int, Fraction]:
    n, mask = args
    g = graph_from_mask(n, mask)
    return len(g.edges), dim_avg_plus(f_vector(whitney_complex(g)))


def er_dim_avg_expectation(n: int, p: Union[Fraction, int, str], threads: Optional[int] = None) -> Fraction:
    """Exact E_p[Dim+] of Whitney complexes over G(n, p), by exhaustive enumeration."""
    _check_enumeration_size(n)
    p = Fraction(p)
    total_pairs = comb(n, 2)
    values = _parallel_map(_whitney_dim_plus, [(n, mask) for mask in range(1 << total_pairs)], threads)
    by_edges = [Fraction(0)] * (total_pairs + 1)
    for edges, value in values:
        by_edges[edges] += value
    result = sum(
        (p**e * (1 - p) ** (total_pairs - e) * s for e, s in enumerate(by_edges)), Fraction(0)
    )
    logger.info(f"Averaged Dim+ over {len(values)} labeled graphs on {n} vertices")
    return result


@dataclass(frozen=True)
class DimPolynomial:
    """Expected inductive dimension d_n(p) of G(n, p) as an exact polynomial in p."""

    n: int
    poly: sympy.Poly

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        """Coefficients, constant term first."""
        return tuple(
            Fraction(int(c.p), int(c.q)) for c in reversed(self.poly.all_coeffs())
        )

    @property
    def degree(self) -> int:
        return self.poly.degree()

    def __call__(self, p: Union[Fraction, int]) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * Fraction(p) + c
        return value

    def as_expr(self) -> sympy.Expr:
        return sympy.factor(self.poly.as_expr())


@lru_cache(maxsize=None)
def _dim_poly(n: int) -> sympy.Poly:
    if n == 0:
        return sympy.Poly(-1, P, domain="QQ")
    p = sympy.Poly(P, P, domain="QQ")
    q = sympy.Poly(1 - P, P, domain="QQ")
    total = sympy.Poly(1, P, domain="QQ")
    for k in range(n):
        total += comb(n - 1, k) * p**k * q ** (n - 1 - k) * _dim_poly(k)
    return total


def inductive_dim_polynomial(n: int) -> DimPolynomial:
    """d_n(p) from d_(n+1) = 1 + sum_k C(n,k) p^k (1-p)^(n-k) d_k, d_0 = -1."""
    if n < 0:
        msg = f"Vertex count must be >= 0, got {n}"
        logger.error(msg)
        raise ValueError(msg)
    for k in range(n):
        _dim_poly(k)
    return DimPolynomial(n, _dim_poly(n))


def delta(G: Complex) -> Fraction:
    """Margin Dim+(G) - dim+(G)/2 with the complex-level inductive dimension; never negative."""
    return dim_avg_plus(f_vector(G)) - (dim_inductive(G) + 1) / 2


def delta_graph(g: Graph) -> Fraction:
    """Margin Dim+ - dim+/2 for the Whitney complex of g, dim taken on the graph itself."""
    return dim_avg_plus(f_vector(whitney_complex(g))) - (dim_inductive_graph(g) + 1) / 2


def _check_level(level: str) -> None:
    if level not in LEVELS:
        msg = f"Unknown dimension level {level!r}; expected one of {', '.join(LEVELS)}"
        logger.error(msg)
        raise ValueError(msg)


def _delta_at_level(g: Graph, level: str) -> Fraction:
    if level == "graph":
        return delta_graph(g)
    return delta(whitney_complex(g))


def _mask_delta(args: Tuple[int, int, str]) -> Fraction:
    n, mask, level = args
    return _delta_at_level(graph_from_mask(n, mask), level)


@dataclass(frozen=True)
class DeltaMaximum:
    """Maximal margin over all labeled graphs on n vertices."""

    graph: Graph
    value: Fraction
    maximizers: Tuple[Graph, ...]

    @property
    def count(self) -> int:
        return len(self.maximizers)


def delta_max(n: int, level: str = "graph", threads: Optional[int] = None) -> DeltaMaximum:
    """Exhaustive search for the largest Dim+ - dim+/2 over labeled graphs on n vertices.

    Ties are broken by fewest edges, then by edge-bitmask order; `count` is
    the number of labeled maximizers.
    """
    _check_enumeration_size(n)
    _check_level(level)
    masks = range(1 << comb(n, 2))
    values = _parallel_map(_mask_delta, [(n, mask, level) for mask in masks], threads)
    best_value = max(values)
    tied = [mask for mask, value in zip(masks, values) if value == best_value]
    best_mask = min(tied, key=lambda mask: (bin(mask).count("1"), mask))
    logger.info(f"Maximal delta on {n} vertices is {best_value} ({len(tied)} maximizers)")
    return DeltaMaximum(
        graph_from_mask(n, best_mask),
        best_value,
        tuple(graph_from_mask(n, mask) for mask in tied),
    )


@dataclass(frozen=True)
class TrajectoryPoint:
    """One step of an iterated refinement: Dim+ and the cardinality moments."""

    step: int
    fvector: FVector
    dim_plus: Fraction
    gap: Optional[Fraction]
    log_gap: Optional[mpmath.mpf]
    variance: Fraction
    third_moment: Fraction


def refinement_trajectory(start: Union[Complex, FVector], steps: int) -> List[TrajectoryPoint]:
    """Dim+ and moments of the f-vectors f, A f, A^2 f, ...; gap is C_d - Dim+."""
    if steps < 0:
        msg = f"Step count must be >= 0, got {steps}"
        logger.error(msg)
        raise ValueError(msg)
    fv = start if isinstance(start, FVector) else f_vector(start)
    limit = limit_constant(fv.dimension) if fv.dimension >= 0 else None
    points = []
    for step in range(steps + 1):
        value = dim_avg_plus(fv)
        gap = limit - value if limit is not None else None
        log_gap = mpmath.log(abs(mpmath.mpf(gap.numerator) / gap.denominator)) if gap else None
        points.append(
            TrajectoryPoint(
                step,
                fv,
                value,
                gap,
                log_gap,
                variance_plus(fv),
                cardinality_moment(fv, 3),
            )
        )
        if step < steps:
            fv = refine_fvector(fv)
    return points


@dataclass(frozen=True)
class SurveyRow:
    """Sample mean of the margin for one grid value p."""

    p: Fraction
    mean_delta: Fraction
    samples: int


def _sample_delta(args: Tuple[int, Fraction, int, int, str]) -> Fraction:
    n, p, seed, sample_index, level = args
    g = sample_er(ErParams(n, p, seed), sample_index)
    return _delta_at_level(g, level)


def er_survey(
    n: int,
    p_grid: Iterable[Union[Fraction, int]],
    samples: int,
    seed: int = 0,
    level: str = "graph",
    threads: Optional[int] = None,
) -> List[SurveyRow]:
    """Monte-Carlo mean of Dim+ - dim+/2 over G(n, p) for every p in the grid.

    Sample i of every cell uses the generator key (i, seed); the means are
    exact rationals.
    """
    _check_level(level)
    if samples < 1:
        msg = f"Sample count must be >= 1, got {samples}"
        logger.error(msg)
        raise ValueError(msg)
    rows = []
    for p in p_grid:
        p = ErParams(n, Fraction(p), seed).p
        values = _parallel_map(
            _sample_delta, [(n, p, seed, i, level) for i in range(samples)], threads
        )
        mean = sum(values, Fraction(0)) / samples
        logger.info(f"Survey cell n={n} p={p}: mean delta {mean}")
        rows.append(SurveyRow(p, mean, samples))
    return rows


def level_set_search(n: int, target: Fraction, d: int) -> List[Graph]:
    """Labeled d-variety graphs on n vertices whose Whitney complex has Dim+ = target."""
    target = Fraction(target)
    found = [
        g
        for g in enumerate_labeled_graphs(n)
        if is_variety_graph(g, d) and dim_avg_plus(f_vector(whitney_complex(g))) == target
    ]
    logger.info(f"Level set Dim+={target} among {d}-varieties on {n} vertices: {len(found)} graphs")
    return found
