"""Undirected simple graphs, Menger paths and minimum vertex separators."""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

SUBSET_GUARD = 10 ** 7


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class PolytopeGraph:
    """A simple graph on vertices ``0..n-1``.

    ``labels[i]`` maps local vertex ``i`` back to whatever it stands for
    (a polytope vertex index for graphs of polytopes and links).
    """

    n: int
    adjacency: tuple
    labels: tuple = None

    def __post_init__(self):
        adj = tuple(tuple(sorted(set(nb))) for nb in self.adjacency)
        if len(adj) != self.n:
            raise GraphError("adjacency has %d rows for n=%d" % (len(adj), self.n))
        for v, nb in enumerate(adj):
            for u in nb:
                if u == v:
                    raise GraphError("self-loop at %d" % v)
                if not 0 <= u < self.n or v not in adj[u]:
                    raise GraphError("asymmetric edge %d-%d" % (v, u))
        object.__setattr__(self, "adjacency", adj)
        labels = tuple(range(self.n)) if self.labels is None else tuple(self.labels)
        if len(labels) != self.n:
            raise GraphError("labels length mismatch")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, labels=None) -> "PolytopeGraph":
        adj = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(adj), labels)

    @classmethod
    def from_labelled_edges(cls, vertices: Iterable[int], edges: Iterable) -> "PolytopeGraph":
        """Build a graph whose labels are the (sorted) given vertex names."""
        labels = tuple(sorted(set(vertices)))
        index = {lab: i for i, lab in enumerate(labels)}
        return cls.from_edges(len(labels), ((index[a], index[b]) for a, b in edges), labels)

    @property
    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_complete(self) -> bool:
        return all(len(nb) == self.n - 1 for nb in self.adjacency)

    def local(self, label) -> int:
        """Local index of the vertex carrying ``label``."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError("no vertex labelled %r" % (label,)) from None

    def has_label(self, label) -> bool:
        return label in self.labels


@dataclass(frozen=True)
class Separator:
    vertex_set: tuple
    witness_pair: tuple

    def __len__(self):
        return len(self.vertex_set)


@dataclass(frozen=True)
class MengerCertificate:
    """``count`` internally disjoint y-z paths, listed explicitly."""

    count: int
    paths: tuple


def components(g: PolytopeGraph, removed: Iterable[int] = ()) -> list:
    """Connected components of ``g - removed``, each sorted, ordered by minimum."""
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected_after_removal(g: PolytopeGraph, removed: Iterable[int]) -> bool:
    removed = set(removed)
    if not removed <= set(range(g.n)):
        raise GraphError("removed set contains unknown vertices")
    if len(removed) >= g.n:
        raise GraphError("removal empties the graph")
    return len(components(g, removed)) == 1


def induced_subgraph(g: PolytopeGraph, keep: Iterable[int]) -> PolytopeGraph:
    keep = sorted(set(keep))
    if not keep:
        raise GraphError("induced subgraph needs at least one vertex")
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return PolytopeGraph.from_edges(len(keep), edges, tuple(g.labels[v] for v in keep))


class _UnitFlow:
    """Residual network for unit-capacity max-flow with vertex splitting.

    Vertex ``v`` becomes ``2v`` (in) and ``2v+1`` (out) joined by a unit arc;
    each undirected edge ``uv`` becomes arcs ``u_out -> v_in`` and
    ``v_out -> u_in``.
    """

    def __init__(self, g: PolytopeGraph):
        self.heads = []
        self.cap = []
        self.out = [[] for _ in range(2 * g.n)]
        for v in range(g.n):
            self._arc(2 * v, 2 * v + 1)
        for v in range(g.n):
            for u in g.adjacency[v]:
                self._arc(2 * v + 1, 2 * u)

    def _arc(self, a, b):
        self.out[a].append(len(self.heads))
        self.heads.append(b)
        self.cap.append(1)
        self.out[b].append(len(self.heads))
        self.heads.append(a)
        self.cap.append(0)

    def augment(self, s, t) -> bool:
        # BFS in arc-insertion order: lowest-index neighbours first.
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            a = queue.popleft()
            for e in self.out[a]:
                b = self.heads[e]
                if self.cap[e] > 0 and b not in parent:
                    parent[b] = e
                    queue.append(b)
        if t not in parent:
            return False
        b = t
        while parent[b] is not None:
            e = parent[b]
            self.cap[e] -= 1
            self.cap[e ^ 1] += 1
            b = self.heads[e ^ 1]
        return True

    def flow_arcs(self, a):
        """Forward arcs out of ``a`` that carry one unit of flow."""
        return [e for e in self.out[a] if e % 2 == 0 and self.cap[e] == 0]


def local_connectivity(g: PolytopeGraph, y: int, z: int) -> MengerCertificate:
    """Maximum number of internally disjoint y-z paths, with the paths.

    Only defined for distinct nonadjacent ``y`` and ``z``.
    """
    if y == z:
        raise GraphError("endpoints must differ")
    if g.adjacent(y, z):
        raise GraphError("Menger undefined for adjacent pair (%d, %d)" % (y, z))
    net = _UnitFlow(g)
    source, sink = 2 * y + 1, 2 * z
    count = 0
    while net.augment(source, sink):
        count += 1

    used = set()
    paths = []
    for _ in range(count):
        path = [y]
        node = source
        while node != sink:
            e = next(e for e in net.flow_arcs(node) if e not in used)
            used.add(e)
            node = net.heads[e]
            if node % 2 == 0:
                path.append(node // 2)
                if node != sink:
                    inner = next(e for e in net.flow_arcs(node) if e not in used)
                    used.add(inner)
                    node = net.heads[inner]
        paths.append(tuple(path))
    return MengerCertificate(count, tuple(sorted(paths)))


def verify_independent_paths(g: PolytopeGraph, y: int, z: int, paths: Sequence) -> bool:
    """True iff every path is a y-z walk in ``g`` and inner vertices are disjoint."""
    inner_seen = set()
    for path in paths:
        if len(path) < 2 or path[0] != y or path[-1] != z:
            return False
        if any(not g.adjacent(a, b) for a, b in zip(path, path[1:])):
            return False
        inner = path[1:-1]
        if len(set(inner)) != len(inner) or y in inner or z in inner:
            return False
        if inner_seen & set(inner):
            return False
        inner_seen |= set(inner)
    return True


def nonadjacent_pairs(g: PolytopeGraph) -> list:
    return [(u, v) for u, v in combinations(range(g.n), 2) if not g.adjacent(u, v)]


def vertex_connectivity(g: PolytopeGraph) -> int:
    """Vertex connectivity: ``n - 1`` for complete graphs, otherwise the
    smallest local connectivity over nonadjacent pairs (some minimum
    separator always splits a nonadjacent pair)."""
    if g.n < 2:
        raise GraphError("connectivity needs at least 2 vertices")
    if g.is_complete():
        return g.n - 1
    return min(local_connectivity(g, y, z).count for y, z in nonadjacent_pairs(g))


def is_k_connected(g: PolytopeGraph, k: int) -> bool:
    """At least ``k + 1`` vertices and no separator with fewer than ``k``."""
    if k <= 0:
        return True
    if g.n < k + 1:
        return False
    return vertex_connectivity(g) >= k


def _check_guard(n: int, k: int):
    if comb(n, k) > SUBSET_GUARD:
        raise GraphError("C(%d, %d) = %d subsets exceeds the enumeration bound %d"
                         % (n, k, comb(n, k), SUBSET_GUARD))


def separator_witness(g: PolytopeGraph, subset: Iterable[int]) -> Optional[tuple]:
    """Smallest vertex of each of the first two components left by removing
    ``subset``, or ``None`` if the rest stays connected (or is empty)."""
    comps = components(g, subset)
    if len(comps) < 2:
        return None
    return comps[0][0], comps[1][0]


def enumerate_min_separators(g: PolytopeGraph, k: int) -> list:
    """Every ``k``-subset whose removal disconnects the graph, in lexicographic order."""
    _check_guard(g.n, k)
    found = []
    for subset in combinations(range(g.n), k):
        witness = separator_witness(g, subset)
        if witness is not None:
            found.append(Separator(subset, witness))
    return found
