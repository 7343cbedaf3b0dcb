"""Verification suites: published values, algebraic invariants, Kruskal–Katona oracle."""

from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Any, Callable, Dict, List

import mpmath
import networkx as nx
import sympy

from simpdim.barycentric import (
    conjecture_a_delta,
    kruskal_katona_valid,
    limit_constant,
    limit_constant_decimal,
    operator_matrix,
    pf_eigenvector,
    realizable_fvectors,
    refine,
    refine_fvector,
)
from simpdim.complexes import (
    Complex,
    Graph,
    dim_inductive,
    dim_inductive_graph,
    dim_max,
    euler_characteristic,
    family,
    generate,
    join,
    max_plus,
    skeleton_graph,
    sphere_genus_sum,
)
from simpdim.config import logger
from simpdim.experiments import (
    P,
    delta,
    delta_graph,
    delta_max,
    er_dim_avg_expectation,
    er_survey,
    inductive_dim_polynomial,
    random_complex,
)
from simpdim.genfun import FVector, dim_avg_plus, f_vector, gen_poly, genus, variance_plus

SUITES = ("paper-values", "invariants", "oracle")
SUITE_ALIASES = {"reference-values": "paper-values"}

RANDOM_COMPLEXES = 500
FAMILY_MAX_N = 20
COMPLETE_GRAPH_MAX_N = 14


class CheckLog:
    """Collects named equality checks and the failures among them."""

    def __init__(self) -> None:
        self.count = 0
        self.failures: List[Dict[str, str]] = []

    def equal(self, name: str, expected: Any, compute: Callable[[], Any]) -> None:
        self.count += 1
        try:
            actual = compute()
        except Exception as e:  # a crashing check is a failed check
            self.failures.append({"check": name, "expected": str(expected), "actual": repr(e)})
            return
        if actual != expected:
            self.failures.append({"check": name, "expected": str(expected), "actual": str(actual)})

    def true(self, name: str, compute: Callable[[], bool]) -> None:
        self.equal(name, True, lambda: bool(compute()))

    def summary(self, suite: str) -> Dict[str, Any]:
        passed = not self.failures
        logger.info(f"Suite {suite}: {self.count} checks, {len(self.failures)} failures")
        return {
            "suite": suite,
            "checks": self.count,
            "passed": passed,
            "failures": self.failures,
        }


def _Dim_plus(G: Complex) -> Fraction:
    return dim_avg_plus(f_vector(G))


def _dim_plus(G: Complex) -> Fraction:
    return dim_inductive(G) + 1


def _complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def _is_complete(G: Complex) -> bool:
    return not G.faces or G.faces == generate([G.vertices]).faces


def _reference_values(log: CheckLog) -> None:
    house, rabbit = family("house"), family("rabbit")
    joined = join(house, rabbit)
    for name, G, Dim, dim, graph_dim, top in (
        ("house", house, Fraction(20, 13), Fraction(61, 24), Fraction(37, 15), 3),
        ("rabbit", rabbit, Fraction(3, 2), Fraction(13, 5), Fraction(5, 2), 3),
        ("house+rabbit", joined, Fraction(79, 26), Fraction(617, 120), Fraction(149, 30), 6),
    ):
        log.equal(f"Dim+({name})", Dim, lambda G=G: _Dim_plus(G))
        log.equal(f"dim+({name})", dim, lambda G=G: _dim_plus(G))
        log.equal(
            f"graph dim+({name})", graph_dim, lambda G=G: dim_inductive_graph(skeleton_graph(G)) + 1
        )
        log.equal(f"max+({name})", top, lambda G=G: max_plus(G))

    for n in range(1, FAMILY_MAX_N + 1):
        log.equal(f"Dim+(E_{n})", Fraction(n, n + 1), lambda n=n: _Dim_plus(family("E", n)))
        log.equal(f"Dim+(K_{n})", Fraction(n, 2), lambda n=n: _Dim_plus(family("K", n)))
        log.equal(f"Dim+(P_{n})", Fraction(3 * n - 2, 2 * n), lambda n=n: _Dim_plus(family("P", n)))
        log.equal(f"Dim+(K_{n},{n})", Fraction(2 * n, n + 1), lambda n=n: _Dim_plus(family("Kmn", n, n)))
        if n >= 3:
            log.equal(f"Dim+(C_{n})", Fraction(3 * n, 2 * n + 1), lambda n=n: _Dim_plus(family("C", n)))
        log.equal(f"dim+(E_{n})", 1, lambda n=n: _dim_plus(family("E", n)))
        log.equal(f"dim+(K_{n},{n})", 2, lambda n=n: _dim_plus(family("Kmn", n, n)))
        if n >= 2:
            log.equal(f"dim+(P_{n})", 2, lambda n=n: _dim_plus(family("P", n)))
        if n >= 3:
            log.equal(f"dim+(C_{n})", 2, lambda n=n: _dim_plus(family("C", n)))
    # every vertex subset of K_n is a memo entry
    for n in range(1, COMPLETE_GRAPH_MAX_N + 1):
        log.equal(f"graph dim+(K_{n})", n, lambda n=n: dim_inductive_graph(_complete_graph(n)) + 1)
    for n in range(1, 6):
        log.equal(f"dim+(K_{n})", n, lambda n=n: _dim_plus(family("K", n)))

    c4k3 = join(family("C", 4), family("K", 3))
    log.equal("f(C4+K3)", (7, 19, 25, 16, 4), lambda: f_vector(c4k3).counts)
    log.equal("Dim+(C4+K3)", Fraction(17, 6), lambda: _Dim_plus(c4k3))
    log.equal("Dim+(K12,2)", Fraction(62, 39), lambda: _Dim_plus(family("Kmn", 12, 2)))

    octahedron, icosahedron = family("octahedron"), family("icosahedron")
    log.equal("Dim+(octahedron)", 2, lambda: _Dim_plus(octahedron))
    log.equal("Dim+(octahedron_1)", Fraction(314, 147), lambda: _Dim_plus(refine(octahedron)))
    log.equal("Dim+(icosahedron)", Fraction(44, 21), lambda: _Dim_plus(icosahedron))
    log.equal("Dim+(icosahedron_1)", Fraction(782, 363), lambda: _Dim_plus(refine(icosahedron)))
    log.equal(
        "Dim+(icosahedron_2)",
        Fraction(4682, 2163),
        lambda: dim_avg_plus(refine_fvector(refine_fvector(f_vector(icosahedron)))),
    )
    fv = FVector((15, 36, 16, 1))
    log.equal("Dim+(15,36,16,1)", Fraction(139, 69), lambda: dim_avg_plus(fv))
    log.equal("Dim+(A(15,36,16,1))", Fraction(84, 37), lambda: dim_avg_plus(refine_fvector(fv)))

    A = operator_matrix(10)
    log.equal("A10(5,8)", 126000, lambda: A.entry(5, 8))
    log.equal("A10(2,3)", 6, lambda: A.entry(2, 3))
    log.equal("A10(3,4)", 36, lambda: A.entry(3, 4))
    log.true("A10 diagonal", lambda: all(A.entry(k, k) == factorial(k) for k in range(1, 12)))
    log.true("A10 first row", lambda: all(A.entry(1, j) == 1 for j in range(1, 12)))
    log.equal("direction d=1", (1, 1), lambda: pf_eigenvector(1).direction)
    log.equal("direction d=2", (1, 3, 2), lambda: pf_eigenvector(2).direction)
    log.equal("C_1", Fraction(3, 2), lambda: limit_constant(1))
    log.equal("C_2", Fraction(13, 6), lambda: limit_constant(2))
    log.true(
        "C_d interval for 1 <= d <= 200",
        lambda: all((d + 1) / 2 < limit_constant_decimal(d) < d + 1 for d in range(1, 201)),
    )
    c100 = limit_constant(100)
    log.true("C_100 ~ 72.828", lambda: abs(float(c100) - 72.828) <= 0.001)
    log.equal("digits of C_100", (4423, 4423), lambda: (len(str(c100.numerator)), len(str(c100.denominator))))
    log.true(
        "C_500/500 ~ 0.722733",
        lambda: abs(limit_constant_decimal(500) / 500 - mpmath.mpf("0.722733")) <= mpmath.mpf("1e-6"),
    )

    expected_deltas = (Fraction(0), Fraction(1, 6), Fraction(5, 13), Fraction(91, 150), Fraction(448, 541))
    for n, value in enumerate(expected_deltas, start=1):
        log.equal(f"A-delta(K_{n})", value, lambda n=n: conjecture_a_delta(f_vector(family("K", n))))
    log.equal("A-delta(K3,3)", 0, lambda: conjecture_a_delta(FVector((6, 9))))
    log.true(
        "A-delta(v0, v0+3) = 0",
        lambda: all(conjecture_a_delta(FVector((v, v + 3))) == 0 for v in range(1, 30)),
    )

    for n, value in enumerate(
        (Fraction(1, 2), Fraction(5, 6), Fraction(35, 32), Fraction(6593, 5040), Fraction(18890551, 12673024)),
        start=1,
    ):
        log.equal(f"E[Dim+] n={n}", value, lambda n=n: er_dim_avg_expectation(n, Fraction(1, 2)))

    for n, expr in (
        (1, sympy.Integer(0)),
        (2, P),
        (3, P * (2 - P + P**2)),
        (4, P * (3 - 3 * P + 4 * P**2 - P**3 - P**4 + P**5)),
    ):
        log.equal(
            f"d_{n}(p)", 0, lambda n=n, expr=expr: sympy.expand(inductive_dim_polynomial(n).poly.as_expr() - expr)
        )
    for n in range(1, 9):
        log.equal(f"d_{n}(1)", n - 1, lambda n=n: inductive_dim_polynomial(n)(1))
        log.equal(f"d_{n}(0)", 0, lambda n=n: inductive_dim_polynomial(n)(0))

    for n, value in enumerate(
        (Fraction(1, 8), Fraction(1, 4), Fraction(15, 32), Fraction(3, 4), Fraction(135, 128)), start=1
    ):
        log.equal(f"Var+(K_{n})", value, lambda n=n: variance_plus(f_vector(family("K", n))))

    best4 = delta_max(4)
    log.equal("max delta n=4", Fraction(1, 3), lambda: best4.value)
    log.true("maximizer n=4 is C_4", lambda: sorted(d for _, d in best4.graph.to_networkx().degree()) == [2] * 4
             and nx.is_connected(best4.graph.to_networkx()))
    best6 = delta_max(6)
    log.equal("max delta n=6", Fraction(1, 2), lambda: best6.value)
    log.true(
        "maximizer n=6 is K_3,3",
        lambda: len(best6.graph.edges) == 9 and nx.is_bipartite(best6.graph.to_networkx())
        and nx.is_connected(best6.graph.to_networkx()),
    )
    for n in range(1, 11):
        log.equal(
            f"delta(K_{n},{n})",
            Fraction(n - 1, n + 1),
            lambda n=n: delta_graph(skeleton_graph(family("Kmn", n, n))),
        )

    log.equal("survey p=0 n=10", Fraction(9, 22), lambda: er_survey(10, [0], 4, seed=1)[0].mean_delta)
    log.equal("survey p=1 n=10", 0, lambda: er_survey(10, [1], 4, seed=1)[0].mean_delta)


def _invariants(log: CheckLog, seed: int) -> None:
    for i in range(RANDOM_COMPLEXES):
        n, m = 1 + i % 7, 1 + (i // 7) % 6
        G = random_complex(n, m, seed, i)
        fv = f_vector(G)
        tag = f"R[{n},{m}]#{i}"
        log.equal(f"f(1) {tag}", len(G) + 1, lambda: gen_poly(fv)(1))
        log.equal(f"genus {tag}", 1 - euler_characteristic(G), lambda: genus(fv))
        if len(G) <= 63:
            margin = delta(G)
            log.true(f"Dim+ >= dim+/2 {tag}", lambda: margin >= 0)
            log.equal(f"equality iff complete {tag}", _is_complete(G), lambda: margin == 0)
        log.equal(f"sphere genus sum {tag}", euler_characteristic(G), lambda: sphere_genus_sum(G)[0])
        log.true(f"Kruskal-Katona {tag}", lambda: kruskal_katona_valid(fv))

        if n <= 5:
            refined = refine(G)
            log.equal(f"refine f-vector {tag}", refine_fvector(fv), lambda: f_vector(refined))
            log.equal(f"refine dim_max {tag}", dim_max(G), lambda: dim_max(refined))
            log.equal(f"refine euler {tag}", euler_characteristic(G), lambda: euler_characteristic(refined))
            if len(G) <= 15:
                log.true(f"refine dim {tag}", lambda: dim_inductive(refined) >= dim_inductive(G))

        H = random_complex(1 + i % 3, 1 + i % 4, seed, i + RANDOM_COMPLEXES)
        K = random_complex(1 + (i // 3) % 3, 1 + i % 2, seed, i + 2 * RANDOM_COMPLEXES)
        HK = join(H, K)
        log.equal(f"join Dim+ {tag}", _Dim_plus(H) + _Dim_plus(K), lambda: _Dim_plus(HK))
        log.equal(f"join dim+ {tag}", _dim_plus(H) + _dim_plus(K), lambda: _dim_plus(HK))
        log.equal(
            f"join genus {tag}", genus(f_vector(H)) * genus(f_vector(K)), lambda: genus(f_vector(HK))
        )

    for name in ("octahedron", "icosahedron"):
        fv = f_vector(family(name))
        log.equal(f"f(-1/2) {name}", 0, lambda fv=fv: gen_poly(fv)(Fraction(-1, 2)))
        log.equal(f"f(-1/2) {name}_1", 0, lambda fv=fv: gen_poly(refine_fvector(fv))(Fraction(-1, 2)))


def _oracle(log: CheckLog, vertices: int = 5, max_total: int = 31) -> None:
    realizable = realizable_fvectors(vertices)
    ranges = [range(comb(vertices, k + 1) + 1) for k in range(vertices)]
    candidates = 0
    for counts in product(*ranges):
        fv = FVector(counts)
        if fv.total > max_total:
            continue
        candidates += 1
        log.equal(f"Kruskal-Katona {fv.counts}", fv in realizable, lambda fv=fv: kruskal_katona_valid(fv))
    logger.info(f"Oracle compared {candidates} f-vectors against {len(realizable)} realizable ones")


def verify(suite: str, seed: int = 0) -> Dict[str, Any]:
    """Run a verification suite.

    Args:
        suite: One of paper-values (alias reference-values), invariants, oracle
        seed: Seed of the random complexes in the invariants suite

    Returns:
        Dict[str, Any]: Check count, pass flag and the list of failures

    Raises:
        ValueError: If the suite is unknown
    """
    suite = SUITE_ALIASES.get(suite, suite)
    if suite not in SUITES:
        msg = f"Unknown suite {suite!r}; expected one of {', '.join(SUITES)}"
        logger.error(msg)
        raise ValueError(msg)
    log = CheckLog()
    if suite == "paper-values":
        _reference_values(log)
    elif suite == "invariants":
        _invariants(log, seed)
    else:
        _oracle(log)
    return log.summary(suite)
