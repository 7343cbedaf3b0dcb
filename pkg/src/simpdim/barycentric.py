"""Barycentric refinement, the refinement operator A_d and its Perron-Frobenius limit."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd, lcm
from typing import Callable, List, Optional, Sequence, Set, Tuple, TypeVar

import mpmath

from simpdim.complexes import Complex, canonical_key, enumerate_complexes
from simpdim.config import PRECISION_DIGITS, get_face_cap, logger
from simpdim.genfun import FVector, dim_avg_plus, f_vector

Number = TypeVar("Number")


class FaceCapExceeded(ValueError):
    """Explicit refinement would produce more faces than the configured cap."""


# rows 0..n of the Stirling triangle; extended in place, never rebuilt
_STIRLING_ROWS: List[Tuple[int, ...]] = [(1,)]


def _stirling_rows(n: int) -> List[Tuple[int, ...]]:
    while len(_STIRLING_ROWS) <= n:
        j = len(_STIRLING_ROWS)
        previous = _STIRLING_ROWS[-1] + (0,)
        row = [0] * (j + 1)
        for i in range(1, j + 1):
            row[i] = i * previous[i] + previous[i - 1]
        _STIRLING_ROWS.append(tuple(row))
    return _STIRLING_ROWS


def stirling2(j: int, i: int) -> int:
    """Stirling number of the second kind S2(j, i) from S2(j,i) = i S2(j-1,i) + S2(j-1,i-1)."""
    if j < 0 or i < 0:
        msg = f"Stirling numbers need j, i >= 0, got ({j}, {i})"
        logger.error(msg)
        raise ValueError(msg)
    if i > j:
        return 0
    return _stirling_rows(j)[j][i]


@dataclass(frozen=True)
class RefinementOperator:
    """The upper-triangular matrix A_d with A[i][j] = S2(j, i) i! (1-indexed)."""

    d: int
    rows: Tuple[Tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        """1-indexed entry A[i][j]."""
        return self.rows[i - 1][j - 1]

    @property
    def size(self) -> int:
        return self.d + 1

    @property
    def eigenvalue(self) -> int:
        """Maximal eigenvalue (d+1)!, the largest diagonal entry."""
        return factorial(self.d + 1)

    def apply(self, vector: Sequence[Number]) -> List[Number]:
        if len(vector) != self.size:
            msg = f"Vector of length {len(vector)} does not fit A_{self.d}"
            logger.error(msg)
            raise ValueError(msg)
        return [
            sum((a * v for a, v in zip(row[i:], vector[i:])), 0 * vector[i])
            for i, row in enumerate(self.rows)
        ]


def _operator_rows(d: int) -> Tuple[Tuple[int, ...], ...]:
    table = _stirling_rows(d + 1)
    factorials = [factorial(i) for i in range(d + 2)]
    return tuple(
        tuple(table[j][i] * factorials[i] if i <= j else 0 for j in range(1, d + 2))
        for i in range(1, d + 2)
    )


@lru_cache(maxsize=16)
def operator_matrix(d: int) -> RefinementOperator:
    """Return A_d, acting on f-vectors of complexes of maximal dimension d."""
    if d < 0:
        msg = f"Operator dimension must be >= 0, got {d}"
        logger.error(msg)
        raise ValueError(msg)
    return RefinementOperator(d, _operator_rows(d))


def refine_fvector(fv: FVector) -> FVector:
    """f-vector of the Barycentric refinement: A_d f, d the top dimension of f."""
    if not fv.counts:
        return fv
    return FVector(tuple(operator_matrix(fv.dimension).apply(list(fv.counts))))


def refine(G: Complex, face_cap: Optional[int] = None) -> Complex:
    """Return the order complex of G.

    New vertex labels are face indices of G in canonical order; faces are
    chains under strict inclusion, enumerated depth first from their
    smallest element.

    Args:
        G: The complex to refine
        face_cap: Maximal number of faces allowed; defaults to SIMPDIM_FACE_CAP

    Raises:
        FaceCapExceeded: If the predicted face count is above the cap
    """
    cap = get_face_cap() if face_cap is None else face_cap
    predicted = refine_fvector(f_vector(G)).total
    if predicted > cap:
        msg = f"Refinement would produce {predicted} faces, above the cap of {cap}"
        logger.error(msg)
        raise FaceCapExceeded(msg)

    n = len(G.faces)
    adjacency = G.comparability
    # strict supersets come later in canonical order
    up = [[j for j in range(i + 1, n) if adjacency[i] >> j & 1] for i in range(n)]

    chains: List[Tuple[int, ...]] = []

    def extend(chain: List[int]) -> None:
        chains.append(tuple(chain))
        for j in up[chain[-1]]:
            chain.append(j)
            extend(chain)
            chain.pop()

    for i in range(n):
        extend([i])

    logger.info(f"Refined complex with {n} faces into {len(chains)} faces")
    return Complex(tuple(sorted(chains, key=canonical_key)))


@dataclass(frozen=True)
class PFVector:
    """Perron-Frobenius probability eigenvector of A_d."""

    entries: Tuple[Fraction, ...]

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    @property
    def direction(self) -> Tuple[int, ...]:
        """The eigenvector scaled to coprime positive integers."""
        denominator = lcm(*(value.denominator for value in self.entries))
        scaled = [int(value * denominator) for value in self.entries]
        common = gcd(*scaled)
        return tuple(value // common for value in scaled)

    def mean(self) -> Fraction:
        """Expected cardinality sum_k (k+1) v_k."""
        return sum((k * v for k, v in enumerate(self.entries, start=1)), Fraction(0))


def _pf_weights(d: int, convert: Callable[[int], Number]) -> List[Number]:
    """Unnormalized Perron-Frobenius weights z_0..z_d of A_d.

    Back substitution of (A - (d+1)! I) v = 0 with v_d = 1, written over a
    common denominator so that the exact path stays in integers:
    y_i = sum_{j>i} A_ij y_j prod_{i<k<j} m_k with m_k = (d+1)! - (k+1)!, and
    z_i = y_i prod_{k<i} m_k.
    """
    A = _operator_rows(d)
    lam = factorial(d + 1)
    m = [convert(lam - factorial(k + 1)) for k in range(d + 1)]
    y: List[Number] = [convert(0)] * (d + 1)
    y[d] = convert(1)
    for i in range(d - 1, -1, -1):
        s = convert(A[i][d]) * y[d]
        for j in range(d - 1, i, -1):
            s = s * m[j] + convert(A[i][j]) * y[j]
        y[i] = s
    weights: List[Number] = []
    prefix = convert(1)
    for i in range(d + 1):
        weights.append(y[i] * prefix)
        prefix = prefix * m[i]
    return weights


@lru_cache(maxsize=256)
def pf_eigenvector(d: int) -> PFVector:
    """Exact Perron-Frobenius probability eigenvector of A_d; all entries positive."""
    if d < 0:
        msg = f"Operator dimension must be >= 0, got {d}"
        logger.error(msg)
        raise ValueError(msg)
    weights = _pf_weights(d, int)
    total = sum(weights)
    return PFVector(tuple(Fraction(w, total) for w in weights))


@lru_cache(maxsize=256)
def limit_constant(d: int) -> Fraction:
    """Exact Barycentric limit C_d of the average simplex cardinality.

    For d = 0 the formula gives 1 although refinement fixes 0-dimensional
    complexes, whose Dim+ stays n/(n+1).
    """
    if d < 0:
        msg = f"Operator dimension must be >= 0, got {d}"
        logger.error(msg)
        raise ValueError(msg)
    weights = _pf_weights(d, int)
    value = Fraction(sum(k * w for k, w in enumerate(weights, start=1)), sum(weights))
    logger.info(f"Computed C_{d} with {len(str(value.numerator))}-digit numerator")
    return value


def limit_constant_decimal(d: int, digits: Optional[int] = None) -> mpmath.mpf:
    """C_d by the same back substitution in high-precision floating point."""
    if d < 0:
        msg = f"Operator dimension must be >= 0, got {d}"
        logger.error(msg)
        raise ValueError(msg)
    with mpmath.workdps(digits or PRECISION_DIGITS):
        weights = _pf_weights(d, mpmath.mpf)
        return sum(k * w for k, w in enumerate(weights, start=1)) / sum(weights)


def eigenvector_profile(d: int, digits: Optional[int] = None) -> List[Tuple[int, mpmath.mpf, mpmath.mpf]]:
    """Rows (k, probability of cardinality k, forward difference) of the PF eigenvector."""
    if d < 0:
        msg = f"Operator dimension must be >= 0, got {d}"
        logger.error(msg)
        raise ValueError(msg)
    with mpmath.workdps(digits or PRECISION_DIGITS):
        weights = _pf_weights(d, mpmath.mpf)
        total = sum(weights)
        probabilities = [w / total for w in weights]
        rows = []
        for k, p in enumerate(probabilities):
            following = probabilities[k + 1] if k + 1 < len(probabilities) else mpmath.mpf(0)
            rows.append((k + 1, p, following - p))
        return rows


def cascade(m: int, k: int) -> List[Tuple[int, int]]:
    """k-cascade of m: pairs (a_i, i), i = k, k-1, ..., with m = sum C(a_i, i), a_k > a_{k-1} > ... >= i."""
    terms = []
    i = k
    while m > 0 and i > 0:
        a = i
        while comb(a + 1, i) <= m:
            a += 1
        terms.append((a, i))
        m -= comb(a, i)
        i -= 1
    return terms


def kruskal_katona_valid(fv: FVector) -> bool:
    """True iff fv satisfies the Kruskal-Katona bounds, i.e. is the f-vector of some complex."""
    counts = fv.counts
    for k in range(len(counts) - 1):
        bound = sum(comb(a, i + 1) for a, i in cascade(counts[k], k + 1))
        if counts[k + 1] > bound:
            return False
    return True


def realizable_fvectors(n: int) -> Set[FVector]:
    """f-vectors of all complexes on at most n labeled vertices (brute force)."""
    return {f_vector(G) for G in enumerate_complexes(n)}


def conjecture_a_delta(fv: FVector) -> Fraction:
    """Dim+(A f) - Dim+(f); non-negative on every complex seen so far."""
    return dim_avg_plus(refine_fvector(fv)) - dim_avg_plus(fv)
