"""f-vectors, simplex generating polynomials and the average-cardinality functional.

All values are exact: integers for counts, Fraction for everything rational.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Tuple, Union

import sympy

from simpdim.complexes import PreComplex
from simpdim.config import logger

Rational = Union[int, Fraction]

T = sympy.Symbol("t")


class PoleError(ZeroDivisionError):
    """The simplex generating polynomial vanishes at the evaluation point."""


@dataclass(frozen=True)
class FVector:
    """Face counts (v_0, ..., v_d) by dimension; trailing zeros are trimmed."""

    counts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        for value in counts:
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                msg = f"f-vector entries must be non-negative integers, got {value!r}"
                logger.error(msg)
                raise ValueError(msg)
        while counts and counts[-1] == 0:
            counts = counts[:-1]
        object.__setattr__(self, "counts", counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    @property
    def dimension(self) -> int:
        """Top dimension d; -1 for the empty complex."""
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        """Number of faces |G|."""
        return sum(self.counts)


@dataclass(frozen=True)
class GenPoly:
    """f(t) = 1 + v_0 t + ... + v_d t^(d+1) with integer coefficients."""

    poly: sympy.Poly

    @classmethod
    def from_fvector(cls, fv: FVector) -> "GenPoly":
        return cls(sympy.Poly.from_list(list(reversed((1,) + fv.counts)), T, domain="ZZ"))

    @property
    def coefficients(self) -> Tuple[int, ...]:
        """Coefficients, constant term first."""
        return tuple(int(c) for c in reversed(self.poly.all_coeffs()))

    @property
    def degree(self) -> int:
        return self.poly.degree()

    def fvector(self) -> FVector:
        return FVector(self.coefficients[1:])

    def __mul__(self, other: "GenPoly") -> "GenPoly":
        return GenPoly(self.poly * other.poly)

    def derivative(self) -> sympy.Poly:
        return self.poly.diff(T)

    def __call__(self, t: Rational) -> Fraction:
        return evaluate(self.poly, t)


def _to_fraction(value: sympy.Expr) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def evaluate(poly: Union[sympy.Poly, GenPoly], t: Rational) -> Fraction:
    """Evaluate a polynomial exactly at a rational point (Horner scheme)."""
    if isinstance(poly, GenPoly):
        poly = poly.poly
    point = Fraction(t)
    result = Fraction(0)
    for c in poly.all_coeffs():
        result = result * point + _to_fraction(c)
    return result


def f_vector(G: PreComplex) -> FVector:
    """Count faces by dimension."""
    counts = [0] * max((len(x) for x in G.faces), default=0)
    for x in G.faces:
        counts[len(x) - 1] += 1
    return FVector(tuple(counts))


def gen_poly(fv: FVector) -> GenPoly:
    """Return the simplex generating polynomial of an f-vector."""
    return GenPoly.from_fvector(fv)


def augmented_cardinality(fv: FVector) -> int:
    """f(1) = |G| + 1."""
    return fv.total + 1


def dim_avg_plus(fv: FVector) -> Fraction:
    """Average simplex cardinality Dim+ = f'(1)/f(1); the empty complex gives 0."""
    weighted = sum((k + 1) * v for k, v in enumerate(fv.counts))
    return Fraction(weighted, fv.total + 1)


def dim_avg(fv: FVector) -> Fraction:
    """Average dimension Dim = Dim+ - 1."""
    return dim_avg_plus(fv) - 1


def log_derivative(fv: FVector, t: Rational) -> Fraction:
    """Return f'(t)/f(t), additive under joins.

    Raises:
        PoleError: If f(t) = 0, which can only happen for t <= 0
    """
    p = gen_poly(fv)
    value = p(t)
    if value == 0:
        msg = f"f(t) vanishes at t = {Fraction(t)}"
        logger.error(msg)
        raise PoleError(msg)
    return evaluate(p.derivative(), t) / value


def genus(fv: FVector) -> Fraction:
    """Genus f(-1) = 1 - chi(G), multiplicative under joins."""
    return gen_poly(fv)(-1)


def cardinality_moment(fv: FVector, k: int) -> Fraction:
    """k-th central moment sum_x (|x| - m)^k / (|G| + 1) with m = Dim+.

    The sum runs over non-empty faces only while m and the denominator
    count the empty set, so the first moment is not zero.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        msg = f"Moment order must be a positive integer, got {k!r}"
        logger.error(msg)
        raise ValueError(msg)
    m = dim_avg_plus(fv)
    total = sum(v * (k_card - m) ** k for k_card, v in enumerate(fv.counts, start=1))
    return Fraction(total) / (fv.total + 1)


def variance_plus(fv: FVector) -> Fraction:
    """Var+ = second central moment."""
    return cardinality_moment(fv, 2)


def product_fvector(parts: Iterable[FVector]) -> FVector:
    """f-vector of the join of complexes with the given f-vectors."""
    result = GenPoly.from_fvector(FVector())
    for fv in parts:
        result = result * gen_poly(fv)
    return result.fvector()
