"""Finite abstract simplicial complexes, pre-complexes and graphs.

Faces are stored as sorted tuples of non-negative integer labels and kept in
canonical order (by cardinality, then lexicographically). The empty set is
never stored; every "+1" augmentation is applied arithmetically.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple, overload

import networkx as nx

from simpdim.config import logger

Simplex = Tuple[int, ...]


class EmptySimplexError(ValueError):
    """An empty vertex set was offered as a simplex."""


class NotAFaceError(ValueError):
    """A unit sphere or ball was requested for a set that is not a face."""


def make_simplex(labels: Iterable[int]) -> Simplex:
    """Return the canonical (sorted, duplicate-free) form of a vertex set.

    Args:
        labels: Vertex labels, non-negative integers

    Returns:
        Simplex: Strictly increasing tuple of labels

    Raises:
        EmptySimplexError: If no label is given
        ValueError: If a label is not a non-negative integer
    """
    vertices = set(labels)
    if not vertices:
        msg = "empty simplex"
        logger.error(msg)
        raise EmptySimplexError(msg)
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            msg = f"Vertex labels must be non-negative integers, got {v!r}"
            logger.error(msg)
            raise ValueError(msg)
    return tuple(sorted(vertices))


def canonical_key(x: Simplex) -> Tuple[int, Simplex]:
    """Sort key of the canonical face order."""
    return (len(x), x)


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class PreComplex:
    """A finite set of simplices with no closure requirement."""

    faces: Tuple[Simplex, ...] = ()

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> "PreComplex":
        unique = {make_simplex(face) for face in faces}
        return cls(tuple(sorted(unique, key=canonical_key)))

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.faces)

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, (tuple, list, set, frozenset)) or not x:
            return False
        return tuple(sorted(set(x))) in self.face_set

    @cached_property
    def face_set(self) -> FrozenSet[Simplex]:
        return frozenset(self.faces)

    @cached_property
    def index(self) -> Dict[Simplex, int]:
        """Position of every face in canonical order."""
        return {x: i for i, x in enumerate(self.faces)}

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted({v for x in self.faces for v in x}))

    @property
    def max_label(self) -> int:
        return max((x[-1] for x in self.faces), default=-1)

    def is_closed(self) -> bool:
        """True if every non-empty subset of every face is a face."""
        face_set = self.face_set
        for x in self.faces:
            if len(x) > 1 and any(y not in face_set for y in combinations(x, len(x) - 1)):
                return False
        return True

    @cached_property
    def comparability(self) -> Tuple[int, ...]:
        """Bitmask adjacency of the strict-inclusion comparability graph on face indices."""
        index = self.index
        n = len(self.faces)
        adjacency = [0] * n
        sets = [frozenset(x) for x in self.faces]
        for i, x in enumerate(self.faces):
            k = len(x)
            if (1 << k) <= n:
                for size in range(1, k):
                    for y in combinations(x, size):
                        j = index.get(y)
                        if j is not None:
                            adjacency[i] |= 1 << j
                            adjacency[j] |= 1 << i
            else:
                # few faces, large simplex: compare directly
                for j in range(i):
                    if len(self.faces[j]) < k and sets[j] < sets[i]:
                        adjacency[i] |= 1 << j
                        adjacency[j] |= 1 << i
        return tuple(adjacency)


@dataclass(frozen=True)
class Complex(PreComplex):
    """A pre-complex closed under taking non-empty subsets."""

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> "Complex":
        pre = PreComplex.from_faces(faces)
        if not pre.is_closed():
            msg = "Face set is not closed under taking non-empty subsets"
            logger.error(msg)
            raise ValueError(msg)
        return cls(pre.faces)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on the vertices 0..n-1."""

    n: int
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            msg = f"Vertex count must be a non-negative integer, got {self.n!r}"
            logger.error(msg)
            raise ValueError(msg)
        normalized = set()
        for edge in self.edges:
            u, v = edge
            if u == v:
                msg = f"Self-loop at vertex {u} is not allowed"
                logger.error(msg)
                raise ValueError(msg)
            if not (0 <= u < self.n and 0 <= v < self.n):
                msg = f"Edge ({u}, {v}) has a label outside [0, {self.n})"
                logger.error(msg)
                raise ValueError(msg)
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @cached_property
    def adjacency(self) -> Tuple[int, ...]:
        """Neighbourhood bitmask of every vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        labels = {v: i for i, v in enumerate(sorted(graph.nodes()))}
        return cls(len(labels), frozenset((labels[u], labels[v]) for u, v in graph.edges()))


def generate(generators: Iterable[Iterable[int]]) -> Complex:
    """Return the smallest complex containing every generator.

    Args:
        generators: Non-empty vertex sets

    Returns:
        Complex: Downward closure in canonical order

    Raises:
        EmptySimplexError: If a generator is empty
    """
    faces = set()
    for generator in generators:
        x = make_simplex(generator)
        if x in faces:
            continue
        for size in range(1, len(x) + 1):
            faces.update(combinations(x, size))
    return Complex(tuple(sorted(faces, key=canonical_key)))


def whitney_complex(g: Graph) -> Complex:
    """Return the clique complex of a graph."""
    cliques = (tuple(sorted(c)) for c in nx.enumerate_all_cliques(g.to_networkx()))
    return Complex(tuple(sorted(cliques, key=canonical_key)))


def skeleton_graph(G: PreComplex) -> Graph:
    """Return the 1-skeleton of a complex, vertices relabeled densely in sorted order."""
    labels = {v: i for i, v in enumerate(G.vertices)}
    edges = frozenset((labels[x[0]], labels[x[1]]) for x in G.faces if len(x) == 2)
    return Graph(len(labels), edges)


# 20 triangles of the icosahedron: apex 0, upper ring 1..5, lower ring 6..10, apex 11
def _icosahedron_triangles() -> List[Simplex]:
    triangles = []
    for k in range(5):
        upper, upper_next = 1 + k, 1 + (k + 1) % 5
        lower, lower_next = 6 + k, 6 + (k + 1) % 5
        triangles.append((0, upper, upper_next))
        triangles.append((11, lower, lower_next))
        triangles.append((upper, upper_next, lower))
        triangles.append((upper_next, lower, lower_next))
    return triangles


HOUSE_GENERATORS = ((2, 3, 5), (1, 4), (1, 2), (3, 4))
RABBIT_GENERATORS = ((1, 2, 3), (3, 4), (3, 5))

FAMILY_KINDS = (
    "E", "K", "C", "P", "Kmn", "cross", "octahedron", "icosahedron", "house", "rabbit",
)


def _require(condition: bool, msg: str) -> None:
    if not condition:
        logger.error(msg)
        raise ValueError(msg)


def family(kind: str, *params: int) -> Complex:
    """Build a named complex.

    Args:
        kind: One of E, K, C, P (parameter n), Kmn (m, n), cross (d),
            octahedron, icosahedron, house, rabbit
        params: Integer parameters of the family

    Returns:
        Complex: The canonical complex of the family

    Raises:
        ValueError: If the kind is unknown or a parameter is out of range
    """
    if kind in ("E", "K", "C", "P"):
        _require(len(params) == 1, f"Family {kind} takes exactly one parameter n")
        n = params[0]
        _require(isinstance(n, int) and n >= 1, f"Family {kind} needs n >= 1, got {n!r}")
        if kind == "E":
            return generate([v] for v in range(n))
        if kind == "K":
            return generate([range(n)])
        if kind == "C":
            _require(n >= 3, f"Cycle C_n needs n >= 3, got {n}")
            return generate([(k, (k + 1) % n) for k in range(n)])
        return generate([[0]] + [(k, k + 1) for k in range(n - 1)])
    if kind == "Kmn":
        _require(len(params) == 2, "Family Kmn takes two parameters m, n")
        m, n = params
        _require(
            all(isinstance(k, int) and not isinstance(k, bool) for k in params),
            f"Family Kmn needs integer parameters, got {m!r}, {n!r}",
        )
        _require(m >= 1 and n >= 1, f"Family Kmn needs m, n >= 1, got {m}, {n}")
        return join(family("E", m), family("E", n))
    if kind == "cross":
        _require(len(params) == 1, "Family cross takes exactly one parameter d")
        d = params[0]
        _require(isinstance(d, int) and d >= 0, f"Cross polytope needs d >= 0, got {d!r}")
        result = family("E", 2)
        for _ in range(d):
            result = join(result, family("E", 2))
        return result
    _require(not params, f"Family {kind} takes no parameters")
    if kind == "octahedron":
        return family("cross", 2)
    if kind == "icosahedron":
        return generate(_icosahedron_triangles())
    if kind == "house":
        return generate(HOUSE_GENERATORS)
    if kind == "rabbit":
        return generate(RABBIT_GENERATORS)
    msg = f"Unknown family {kind!r}; expected one of {', '.join(FAMILY_KINDS)}"
    logger.error(msg)
    raise ValueError(msg)


def _checked_face(G: PreComplex, x: Iterable[int]) -> Simplex:
    face = make_simplex(x)
    if face not in G.face_set:
        msg = f"{face} is not a face of the complex"
        logger.error(msg)
        raise NotAFaceError(msg)
    return face


def unit_sphere(G: PreComplex, x: Iterable[int]) -> PreComplex:
    """Return S(x): all faces strictly comparable to x, x itself excluded.

    Raises:
        NotAFaceError: If x is not a face of G
    """
    face = _checked_face(G, x)
    xs = frozenset(face)
    return PreComplex(
        tuple(y for y in G.faces if y != face and (xs < frozenset(y) or frozenset(y) < xs))
    )


def unit_ball(G: PreComplex, x: Iterable[int]) -> PreComplex:
    """Return B(x) = S(x) together with x itself.

    Raises:
        NotAFaceError: If x is not a face of G
    """
    face = _checked_face(G, x)
    xs = frozenset(face)
    return PreComplex(tuple(y for y in G.faces if xs <= frozenset(y) or frozenset(y) < xs))


@overload
def join(G: Complex, H: Complex) -> Complex: ...


@overload
def join(G: PreComplex, H: PreComplex) -> PreComplex: ...


def join(G: PreComplex, H: PreComplex) -> PreComplex:
    """Return G ⊕ H; H is relabeled by the offset max label of G plus one.

    The result is a Complex only when both operands are. The join with the
    empty complex is the identity.
    """
    result = Complex if isinstance(G, Complex) and isinstance(H, Complex) else PreComplex
    if not H.faces:
        return result(G.faces)
    if not G.faces:
        return result(H.faces)
    offset = G.max_label + 1
    shifted = [tuple(v + offset for v in z) for z in H.faces]
    faces = list(G.faces) + shifted + [y + z for y in G.faces for z in shifted]
    return result(tuple(sorted(faces, key=canonical_key)))


def graph_join(g: Graph, h: Graph) -> Graph:
    """Return the Zykov join: disjoint union plus every edge between the two parts."""
    offset = g.n
    edges = set(g.edges)
    edges.update((u + offset, v + offset) for u, v in h.edges)
    edges.update((u, v + offset) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, frozenset(edges))


def unit_ball_join(G: PreComplex, x: Iterable[int]) -> Complex:
    """Return the closure of S(x) joined with a single point."""
    sphere = unit_sphere(G, x)
    return join(generate(sphere.faces), family("E", 1))


def dim_max(G: PreComplex) -> int:
    """Return the maximal dimension; the empty complex has -1."""
    return max((len(x) for x in G.faces), default=0) - 1


def max_plus(G: PreComplex) -> int:
    """Return the maximal cardinality max(G) = dim_max + 1."""
    return dim_max(G) + 1


def _inductive_dimension(adjacency: Sequence[int], universe: int) -> Fraction:
    # memo keys are vertex bitmasks of the root graph
    memo: Dict[int, Fraction] = {0: Fraction(-1)}

    def dim(mask: int) -> Fraction:
        value = memo.get(mask)
        if value is not None:
            return value
        total = Fraction(0)
        count = 0
        for i in _iter_bits(mask):
            total += dim(mask & adjacency[i])
            count += 1
        value = 1 + total / count
        memo[mask] = value
        return value

    result = dim(universe)
    logger.debug(f"Inductive dimension used {len(memo)} memo entries")
    return result


def dim_inductive(P: PreComplex) -> Fraction:
    """Return the inductive dimension of a set of sets.

    dim(empty) = -1, otherwise 1 plus the mean of dim over the unit spheres
    S_P(x), computed inside P. Only comparability matters, so the recursion
    runs on the comparability graph of P.
    """
    if not P.faces:
        return Fraction(-1)
    return _inductive_dimension(P.comparability, (1 << len(P.faces)) - 1)


def dim_inductive_graph(g: Graph) -> Fraction:
    """Return the inductive dimension of a graph (vertex-level unit spheres)."""
    if g.n == 0:
        return Fraction(-1)
    return _inductive_dimension(g.adjacency, (1 << g.n) - 1)


def euler_characteristic(G: PreComplex) -> int:
    """Return the signed face count sum of (-1)^dim(x)."""
    return sum(1 if len(x) % 2 else -1 for x in G.faces)


def _order_complex_euler(G: PreComplex, mask: int) -> int:
    # Signed chain count of the sub-poset on `mask`; canonical order is a linear extension
    adjacency = G.comparability
    weights: Dict[int, int] = {}
    for i in _iter_bits(mask):
        below = adjacency[i] & mask & ((1 << i) - 1)
        weights[i] = 1 - sum(weights[j] for j in _iter_bits(below))
    return sum(weights.values())


def sphere_genus_sum(G: PreComplex) -> Tuple[int, int]:
    """Return both sides of sum_x w(x) (1 - chi(S(x))) = chi(G).

    chi(S(x)) is taken on the order complex of S(x), which is the
    complex the identity is about when S(x) is not closed.
    """
    lhs = 0
    for i, x in enumerate(G.faces):
        omega = 1 if len(x) % 2 else -1
        lhs += omega * (1 - _order_complex_euler(G, G.comparability[i]))
    return lhs, euler_characteristic(G)


def is_variety_graph(g: Graph, d: int) -> bool:
    """True if g is a discrete d-variety: every unit sphere is a (d-1)-variety.

    The empty graph is the only (-1)-variety.
    """
    adjacency = g.adjacency
    memo: Dict[Tuple[int, int], bool] = {}

    def check(mask: int, level: int) -> bool:
        if mask == 0:
            return level == -1
        if level < 0:
            return False
        key = (mask, level)
        if key not in memo:
            memo[key] = all(check(mask & adjacency[i], level - 1) for i in _iter_bits(mask))
        return memo[key]

    return check((1 << g.n) - 1, d)


def enumerate_complexes(n: int) -> Iterator[Complex]:
    """Yield every simplicial complex whose vertices lie in {0..n-1}, the empty one included.

    Args:
        n: Number of available vertices, at most 5

    Raises:
        ValueError: If n is outside [0, 5]
    """
    _require(0 <= n <= 5, f"Complex enumeration supports 0 <= n <= 5, got {n}")
    subsets = sorted(range(1, 1 << n), key=lambda m: (bin(m).count("1"), m))

    def as_complex(chosen: List[int]) -> Complex:
        faces = [tuple(_iter_bits(m)) for m in chosen]
        return Complex(tuple(sorted(faces, key=canonical_key)))

    def extend(position: int, chosen: List[int], present: set) -> Iterator[Complex]:
        if position == len(subsets):
            yield as_complex(chosen)
            return
        mask = subsets[position]
        yield from extend(position + 1, chosen, present)
        facets = [mask ^ (1 << b) for b in _iter_bits(mask)]
        if all(f == 0 or f in present for f in facets):
            chosen.append(mask)
            present.add(mask)
            yield from extend(position + 1, chosen, present)
            present.discard(mask)
            chosen.pop()

    yield from extend(0, [], set())
