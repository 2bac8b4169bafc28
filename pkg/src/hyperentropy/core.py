"""k-uniform hypergraph data model: validation, degrees, connectivity, classification."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    InvalidParameters,
    IsolatedVertex,
    NonUniformEdge,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """Simple k-uniform hypergraph on vertices 0..n-1 with canonically ordered edges.

    Construct through :func:`validate` (or directly; ``__post_init__`` runs the same checks
    and canonicalizes the edge list, so two hypergraphs with the same edge set compare equal).
    """

    k: int
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", _canonical_edges(self.k, self.n, self.edges))

    @classmethod
    def _trusted(cls, k: int, n: int, edges: tuple[Edge, ...]) -> "Hypergraph":
        """Skip validation; caller guarantees canonical, valid edges."""
        H = object.__new__(cls)
        object.__setattr__(H, "k", k)
        object.__setattr__(H, "n", n)
        object.__setattr__(H, "edges", edges)
        return H

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        """Degree of each vertex, indexed by vertex label."""
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def incident_edges(self, v: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if v in e]

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image under the vertex bijection ``v -> perm[v]``."""
        return Hypergraph(self.k, self.n, tuple(tuple(perm[v] for v in e) for e in self.edges))


def _canonical_edges(k: int, n: int, raw: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
    if k < 2:
        raise InvalidParameters(f"edge size k must be >= 2, got {k}")
    seen: dict[Edge, int] = {}
    for i, e in enumerate(raw):
        verts = tuple(sorted(int(v) for v in e))
        if len(set(verts)) != len(verts):
            raise NonUniformEdge(f"edge {i} repeats a vertex: {list(e)}", edge_index=i)
        if len(verts) != k:
            raise NonUniformEdge(f"edge {i} has {len(verts)} vertices, expected k={k}", edge_index=i)
        for v in verts:
            if v < 0 or v >= n:
                raise VertexOutOfRange(f"edge {i} uses vertex {v} outside 0..{n - 1}", edge_index=i, vertex=v)
        if verts in seen:
            raise DuplicateEdge(f"edge {i} duplicates edge {seen[verts]}: {list(verts)}", edge_index=i)
        seen[verts] = i
    covered = set()
    for e in seen:
        covered.update(e)
    if len(covered) != n:
        v = min(set(range(n)) - covered)
        raise IsolatedVertex(f"vertex {v} lies in no edge", vertex=v)
    return tuple(sorted(seen))


def validate(n: int, edges: Iterable[Iterable[int]], k: int | None = None) -> Hypergraph:
    """Build a canonical Hypergraph from a vertex count and an edge list.

    ``k`` is inferred from the first edge when omitted.
    """
    edges = [tuple(e) for e in edges]
    if k is None:
        if not edges:
            raise InvalidParameters("cannot infer k from an empty edge list")
        k = len(set(edges[0]))
    return Hypergraph(k, n, tuple(edges))


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing degree vector."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < b for a, b in zip(self.degrees, self.degrees[1:])):
            raise ValueError("degree sequence must be non-increasing")

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    @property
    def max(self) -> int:
        return self.degrees[0] if self.degrees else 0


def degree_sequence(H: Hypergraph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(H.degrees(), reverse=True)))


def max_degree(H: Hypergraph) -> int:
    return degree_sequence(H).max


class CycleClass(str, Enum):
    SUPERTREE = "supertree"
    UNICYCLIC = "unicyclic"
    BICYCLIC = "bicyclic"
    OTHER = "other"

    @classmethod
    def from_cyclomatic(cls, c: int) -> "CycleClass":
        return {0: cls.SUPERTREE, 1: cls.UNICYCLIC, 2: cls.BICYCLIC}.get(c, cls.OTHER)

    @property
    def cyclomatic(self) -> int:
        return {"supertree": 0, "unicyclic": 1, "bicyclic": 2}[self.value]


@dataclass(frozen=True)
class StructureClass:
    connected: bool
    components: int
    cyclomatic: int
    tag: CycleClass
    linear: bool

    def describe(self) -> str:
        if self.tag is CycleClass.OTHER:
            return f"other(c={self.cyclomatic})" if self.connected else f"disconnected(l={self.components}, c={self.cyclomatic})"
        return self.tag.value


def components(H: Hypergraph) -> list[list[int]]:
    """Connected components as sorted vertex lists (union-find over edges)."""
    parent = list(range(H.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        r = find(e[0])
        for v in e[1:]:
            s = find(v)
            if s != r:
                parent[s] = r
    groups: dict[int, list[int]] = {}
    for v in range(H.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def is_linear(H: Hypergraph) -> bool:
    sets = [set(e) for e in H.edges]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if len(sets[i] & sets[j]) > 1:
                return False
    return True


def cyclomatic_number(H: Hypergraph) -> int:
    return H.m * (H.k - 1) - H.n + len(components(H))


def classify(H: Hypergraph) -> StructureClass:
    l = len(components(H))
    c = H.m * (H.k - 1) - H.n + l
    connected = l == 1
    tag = CycleClass.from_cyclomatic(c) if connected else CycleClass.OTHER
    return StructureClass(connected, l, c, tag, is_linear(H))


@dataclass(frozen=True)
class Pendency:
    pendent_vertices: frozenset[int]
    pendent_edges: frozenset[int]
    non_pendent_vertex_count: int


def pendency(H: Hypergraph) -> Pendency:
    """Pendent vertices (degree 1) and pendent edges (exactly k-1 pendent vertices).

    A lone edge has k pendent vertices and is therefore not a pendent edge.
    """
    deg = H.degrees()
    pv = frozenset(v for v in range(H.n) if deg[v] == 1)
    pe = frozenset(i for i, e in enumerate(H.edges) if sum(1 for v in e if v in pv) == H.k - 1)
    return Pendency(pv, pe, H.n - len(pv))
