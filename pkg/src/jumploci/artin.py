"""Graphs, right-angled and labeled Artin groups.

For the right-angled Artin group of a graph, ``R_1`` and ``V_1`` are unions of
coordinate subspaces (subtori) indexed by the maximal vertex sets spanning a
disconnected induced subgraph.  For general Artin groups the relevant graph
is the odd contraction, obtained by collapsing the connected components of
the odd-labeled edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InputError, ResourceBoundError
from .subspaces import Subspace, SubspaceArrangement
from .words import GroupWord, Presentation

__all__ = [
    "Graph",
    "LabeledGraph",
    "DEFAULT_VERTEX_BOUND",
    "maximal_disconnected_subsets",
    "raag_resonance",
    "raag_charvar_subtori",
    "raag_charvar_member",
    "raag_presentation",
    "odd_contraction",
    "is_complete_multipartite",
    "raag_serre_verdict",
    "artin_malcev_verdict",
    "braid_graph",
]

DEFAULT_VERTEX_BOUND = 16


class Graph:
    """Simple undirected graph on ordered, named vertices."""

    __slots__ = ("vertices", "edges", "_index", "_adj")

    def __init__(self, vertices: Sequence[str], edges: Iterable[Sequence[str]] = ()):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("vertex names must be unique")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        pairs = set()
        for e in edges:
            if len(e) != 2:
                raise InputError(f"edge {e!r} must have exactly two endpoints")
            a, b = e
            if a not in self._index or b not in self._index:
                raise InputError(f"edge {a}-{b} references an unknown vertex")
            i, j = self._index[a], self._index[b]
            if i == j:
                raise InputError(f"loop at vertex {a}")
            pairs.add((min(i, j), max(i, j)))
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(pairs))
        adj = [0] * len(self.vertices)
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self._adj = adj

    @classmethod
    def from_indices(cls, n: int, edges: Iterable[tuple[int, int]], names: Sequence[str] | None = None) -> "Graph":
        names = list(names) if names is not None else [f"v{i + 1}" for i in range(n)]
        return cls(names, [(names[i], names[j]) for i, j in edges])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_indices(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def discrete(cls, n: int) -> "Graph":
        return cls.from_indices(n, [])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_indices(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_indices(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        return self._index[v]

    def edge_indices(self) -> list[tuple[int, int]]:
        return list(self.edges)

    def edge_names(self) -> list[tuple[str, str]]:
        return [(self.vertices[i], self.vertices[j]) for i, j in self.edges]

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self._adj[i] >> j & 1)

    def neighbor_mask(self, i: int) -> int:
        return self._adj[i]

    def is_connected_mask(self, mask: int) -> bool:
        """Whether the subgraph induced on the vertex bitmask is connected."""
        if not mask:
            return True
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            new = self._adj[v] & mask & ~seen
            seen |= new
            frontier |= new
        return seen == mask

    def complement(self) -> "Graph":
        n = self.n
        return Graph.from_indices(
            n,
            [(i, j) for i in range(n) for j in range(i + 1, n) if not self.adjacent(i, j)],
            self.vertices,
        )

    def components(self) -> list[list[int]]:
        left = (1 << self.n) - 1
        comps = []
        while left:
            start = left & -left
            seen = frontier = start
            while frontier:
                v = frontier.bit_length() - 1
                frontier &= ~(1 << v)
                new = self._adj[v] & ~seen
                seen |= new
                frontier |= new
            comps.append([i for i in range(self.n) if seen >> i & 1])
            left &= ~seen
        return sorted(comps)

    def disjoint_union(self, other: "Graph") -> "Graph":
        names = list(self.vertices) + list(other.vertices)
        if len(set(names)) != len(names):
            raise InputError("disjoint union needs distinct vertex names")
        return Graph(names, self.edge_names() + other.edge_names())

    def join(self, other: "Graph") -> "Graph":
        g = self.disjoint_union(other)
        extra = [(a, b) for a in self.vertices for b in other.vertices]
        return Graph(g.vertices, g.edge_names() + extra)

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.vertices, self.edges) == (other.vertices, other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        es = ", ".join(f"{a}-{b}" for a, b in self.edge_names())
        return f"Graph({list(self.vertices)}, [{es}])"


@dataclass(frozen=True)
class LabeledGraph:
    """Graph with a label ``>= 2`` on each edge (missing labels mean 2)."""

    graph: Graph
    labels: Mapping[tuple[int, int], int]

    def __post_init__(self):
        fixed = {}
        edges = set(self.graph.edges)
        for (i, j), lab in dict(self.labels).items():
            key = (min(i, j), max(i, j))
            if key not in edges:
                raise InputError(f"label on a non-edge {key}")
            if int(lab) < 2:
                raise InputError(f"edge labels must be at least 2, got {lab}")
            fixed[key] = int(lab)
        for e in edges:
            fixed.setdefault(e, 2)
        object.__setattr__(self, "labels", dict(sorted(fixed.items())))

    @classmethod
    def unlabeled(cls, g: Graph) -> "LabeledGraph":
        return cls(g, {})

    def label(self, i: int, j: int) -> int:
        return self.labels[(min(i, j), max(i, j))]


def braid_graph(strings: int) -> LabeledGraph:
    """Complete graph on ``strings - 1`` vertices; label 3 on ``|i-j| = 1``, else 2."""
    if strings < 2:
        raise InputError("a braid group needs at least two strings")
    g = Graph.complete(strings - 1)
    g = Graph.from_indices(g.n, g.edges, [f"s{i + 1}" for i in range(g.n)])
    return LabeledGraph(g, {(i, j): 3 if j - i == 1 else 2 for i, j in g.edges})


def maximal_disconnected_subsets(g: Graph, bound: int = DEFAULT_VERTEX_BOUND) -> list[tuple[str, ...]]:
    """Maximal vertex sets whose induced subgraph is disconnected.

    A disconnected set is maximal iff adding any single vertex connects it:
    a vertex adjacent to every component of ``W`` connects ``W`` together
    with any further such vertices.
    """
    n = g.n
    if n > bound:
        raise ResourceBoundError(f"graph has {n} vertices; the subset enumeration bound is {bound}")
    full = (1 << n) - 1
    found = []
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0 or g.is_connected_mask(mask):
            continue
        rest = full & ~mask
        maximal = True
        while rest:
            v = rest & -rest
            rest &= ~v
            if not g.is_connected_mask(mask | v):
                maximal = False
                break
        if maximal:
            found.append(tuple(i for i in range(n) if mask >> i & 1))
    found.sort()
    return [tuple(g.vertices[i] for i in w) for w in found]


def raag_resonance(g: Graph, bound: int = DEFAULT_VERTEX_BOUND) -> SubspaceArrangement:
    """Components of ``R_1``: coordinate subspaces of the maximal disconnected
    sets, or just the origin when there are none."""
    subsets = maximal_disconnected_subsets(g, bound)
    if not subsets:
        return SubspaceArrangement(g.n, [Subspace.zero(g.n)])
    return SubspaceArrangement(
        g.n, [Subspace.coordinate(g.n, [g.index(v) for v in w]) for w in subsets]
    )


def raag_charvar_subtori(g: Graph, bound: int = DEFAULT_VERTEX_BOUND) -> list[tuple[str, ...]]:
    """Vertex sets ``W`` of the subtori ``{t_v = 1 for v not in W}`` making up ``V_1``."""
    return maximal_disconnected_subsets(g, bound)


def raag_charvar_member(g: Graph, rho: Sequence, bound: int = DEFAULT_VERTEX_BOUND) -> bool:
    """Whether the character lies in ``V_1``: trivial, or supported in some subtorus."""
    if len(rho) != g.n:
        raise InputError("character length does not match the vertex count")
    support = {g.vertices[i] for i, t in enumerate(rho) if t != 1}
    if not support:
        return True
    return any(support <= set(w) for w in raag_charvar_subtori(g, bound))


def raag_presentation(g: Graph) -> Presentation:
    rels = tuple(GroupWord.generator(i).commutator(GroupWord.generator(j)) for i, j in g.edges)
    return Presentation(g.vertices, rels)


def odd_contraction(lg: LabeledGraph) -> Graph:
    """Collapse connected components of odd-labeled edges.

    Each component is named after its smallest vertex; two components are
    adjacent when some edge joins them.
    """
    g = lg.graph
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, j), lab in lg.labels.items():
        if lab % 2:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    roots = sorted({find(i) for i in range(g.n)})
    names = [g.vertices[r] for r in roots]
    pos = {r: k for k, r in enumerate(roots)}
    edges = set()
    for i, j in g.edges:
        a, b = pos[find(i)], pos[find(j)]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_indices(len(roots), sorted(edges), names)


def is_complete_multipartite(g: Graph) -> tuple[bool, list[tuple[str, ...]]]:
    """Complete multipartite iff the complement is a disjoint union of cliques.

    Returns ``(True, parts)`` or ``(False, (a, b, c))`` where ``a-b-c`` is an
    induced path in the complement: ``a, c`` adjacent in ``g``, ``b`` adjacent
    to neither.
    """
    comp = g.complement()
    parts = comp.components()
    for part in parts:
        for x in part:
            for y in part:
                if x < y and not comp.adjacent(x, y):
                    path = _shortest_path(comp, x, y)
                    return False, tuple(g.vertices[v] for v in path[:3])
    return True, [tuple(g.vertices[v] for v in p) for p in parts]


def _shortest_path(g: Graph, src: int, dst: int) -> list[int]:
    prev = {src: None}
    queue = [src]
    for v in queue:
        if v == dst:
            break
        for w in range(g.n):
            if g.adjacent(v, w) and w not in prev:
                prev[w] = v
                queue.append(w)
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def raag_serre_verdict(g: Graph) -> dict:
    """Quasi-Kähler iff complete multipartite (a product of free groups);
    Kähler iff complete on an even number of vertices (free abelian of even rank)."""
    ok, witness = is_complete_multipartite(g)
    complete = len(g.edges) == g.n * (g.n - 1) // 2
    out = {"quasi_kahler": ok, "kahler": complete and g.n % 2 == 0}
    if ok:
        out["partition"] = [list(p) for p in witness]
    else:
        out["complement_path"] = list(witness)
    return out


def artin_malcev_verdict(lg: LabeledGraph) -> dict:
    contraction = odd_contraction(lg)
    ok, witness = is_complete_multipartite(contraction)
    return {"verdict": ok, "contraction": contraction, "witness": witness}
