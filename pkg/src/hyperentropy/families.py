"""Named structures: power hypergraphs, hyperstars, loose paths and the extremal families.

T*, H^I and H^III are predicates (maximum degree 2 within the class); the constructors
return one canonical member. H^II, H^IV and H^V are recognised from the degree sequence
and the pairwise edge-intersection pattern around the dominant vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .core import CycleClass, Hypergraph, classify, degree_sequence
from .errors import Disconnected, InvalidParameters
from .iso import find_isomorphism, is_isomorphic  # noqa: F401  (re-exported)


@dataclass(frozen=True)
class Graph:
    """Simple ordinary graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        canon = set()
        for a, b in self.edges:
            if a == b:
                raise InvalidParameters(f"loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InvalidParameters(f"edge ({a}, {b}) outside 0..{self.n - 1}")
            e = (min(a, b), max(a, b))
            if e in canon:
                raise InvalidParameters(f"duplicate edge {e}")
            canon.add(e)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = {v: [] for v in range(self.n)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen, stack = {0}, [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    return Graph(n, tuple((0, i) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def power(G: Graph, k: int) -> Hypergraph:
    """k-th power: pad every graph edge with k-2 fresh vertices (numbered after G's vertices)."""
    if k < 3:
        raise InvalidParameters(f"power needs k >= 3, got {k}")
    edges = []
    nxt = G.n
    for a, b in G.edges:
        edges.append((a, b, *range(nxt, nxt + k - 2)))
        nxt += k - 2
    return Hypergraph(k, nxt, tuple(edges))


def hyperstar(m: int, k: int) -> Hypergraph:
    """m edges meeting only in vertex 0."""
    if m < 1 or k < 2:
        raise InvalidParameters(f"hyperstar needs m >= 1, k >= 2, got m={m}, k={k}")
    return Hypergraph(k, m * (k - 1) + 1, tuple((0, *range(1 + i * (k - 1), 1 + (i + 1) * (k - 1))) for i in range(m)))


def loose_path(m: int, k: int) -> Hypergraph:
    return power(path_graph(m + 1), k)


class FamilyTag(str, Enum):
    HYPERSTAR = "Hyperstar"
    TSTAR = "TStar"
    HI = "HI"
    HII = "HII"
    HIII = "HIII"
    HIV = "HIV"
    HV = "HV"
    NONE = "None"


class _Builder:
    """Hands out fresh vertex labels while assembling edges."""

    def __init__(self, k: int, reserved: int):
        self.k = k
        self.next = reserved
        self.edges: list[tuple[int, ...]] = []

    def fresh(self, count: int) -> list[int]:
        out = list(range(self.next, self.next + count))
        self.next += count
        return out

    def add(self, *fixed: int) -> tuple[int, ...]:
        e = (*fixed, *self.fresh(self.k - len(fixed)))
        self.edges.append(e)
        return e

    def build(self) -> Hypergraph:
        return Hypergraph(self.k, self.next, tuple(self.edges))


def _tail(b: _Builder, start: int, count: int) -> None:
    """Loose path of ``count`` edges hanging from vertex ``start``."""
    v = start
    for _ in range(count):
        v = b.add(v)[-1]


def family_member(tag: FamilyTag | str, m: int, k: int) -> Hypergraph:
    """One canonical member of the family ``tag`` with m edges, k-uniform."""
    tag = FamilyTag(tag)
    if k < 3:
        raise InvalidParameters(f"families are defined for k >= 3, got k={k}")
    if tag is FamilyTag.HYPERSTAR:
        return hyperstar(m, k)
    if tag is FamilyTag.TSTAR:
        if m < 2:
            raise InvalidParameters("TStar needs m >= 2")
        return loose_path(m, k)
    if tag is FamilyTag.HI:
        if m < 2:
            raise InvalidParameters("HI needs m >= 2")
        b = _Builder(k, 2)
        if m == 2:
            b.add(0, 1)
            b.add(0, 1)
            return b.build()
        # loose triangle, with a loose-path tail hanging from a padding vertex
        b = _Builder(k, 3)
        b.add(0, 1)
        b.add(1, 2)
        e3 = b.add(2, 0)
        _tail(b, e3[-1], m - 3)
        return b.build()
    if tag is FamilyTag.HII:
        if m < 2:
            raise InvalidParameters("HII needs m >= 2")
        b = _Builder(k, 2)
        b.add(0, 1)
        b.add(0, 1)
        for _ in range(m - 2):
            b.add(0)
        return b.build()
    if tag is FamilyTag.HIII:
        if m == 2:
            if k < 4:
                raise InvalidParameters("HIII with m=2 needs k >= 4 (two edges sharing 3 vertices)")
            b = _Builder(k, 3)
            b.add(0, 1, 2)
            b.add(0, 1, 2)
            return b.build()
        if m < 2:
            raise InvalidParameters("HIII needs m >= 2")
        # two edges sharing two vertices, a third edge joining their padding, then a tail
        b = _Builder(k, 2)
        e1 = b.add(0, 1)
        e2 = b.add(0, 1)
        e3 = b.add(e1[-1], e2[-1])
        _tail(b, e3[-1], m - 3)
        return b.build()
    if tag is FamilyTag.HIV:
        if m < 3:
            raise InvalidParameters("HIV needs m >= 3")
        b = _Builder(k, 3)  # u=0, w1=1, w2=2
        if m == 3:
            b.add(0, 1)
            b.add(0, 1, 2)
            b.add(0, 2)
        else:
            b.add(0, 1)
            b.add(0, 1)
            b.add(0, 2)
            b.add(0, 2)
            for _ in range(m - 4):
                b.add(0)
        return b.build()
    if tag is FamilyTag.HV:
        if k < 4:
            raise InvalidParameters("HV needs k >= 4: two distinct edges cannot share 3 of 3 vertices")
        if m < 2:
            raise InvalidParameters("HV needs m >= 2")
        b = _Builder(k, 3)
        b.add(0, 1, 2)
        b.add(0, 1, 2)
        for _ in range(m - 2):
            b.add(0)
        return b.build()
    raise InvalidParameters(f"no constructor for tag {tag.value}")


def family_feasible(tag: FamilyTag | str, m: int, k: int) -> bool:
    try:
        family_member(tag, m, k)
    except InvalidParameters:
        return False
    return True


def _dominant_pattern(H: Hypergraph, extra: int) -> tuple[int, list[int]] | None:
    """Centre vertex in every edge plus the ``extra`` other vertices of degree 2.

    Returns None unless the degree sequence is (m, 2 * extra, 1, ..., 1).
    """
    m = H.m
    want = (m,) + (2,) * extra + (1,) * (H.n - 1 - extra)
    if degree_sequence(H).degrees != want:
        return None
    deg = H.degrees()
    for u in range(H.n):
        if deg[u] == m:
            others = [v for v in range(H.n) if v != u and deg[v] >= 2]
            if len(others) == extra:
                return u, others
    return None


def _intersection_pairs(H: Hypergraph, w: int) -> frozenset[int]:
    return frozenset(H.incident_edges(w))


def family_tags(H: Hypergraph) -> frozenset[FamilyTag]:
    """Every family predicate H satisfies. Raises Disconnected for disconnected input."""
    sc = classify(H)
    if not sc.connected:
        raise Disconnected(f"hypergraph has {sc.components} components")
    ds = degree_sequence(H)
    tags = set()
    if sc.tag is CycleClass.SUPERTREE:
        if ds.degrees == (H.m,) + (1,) * (H.n - 1):
            tags.add(FamilyTag.HYPERSTAR)
        if ds.max == 2:
            tags.add(FamilyTag.TSTAR)
    elif sc.tag is CycleClass.UNICYCLIC:
        if ds.max == 2:
            tags.add(FamilyTag.HI)
        if _dominant_pattern(H, 1) is not None:
            tags.add(FamilyTag.HII)
    elif sc.tag is CycleClass.BICYCLIC:
        if ds.max == 2:
            tags.add(FamilyTag.HIII)
        pat = _dominant_pattern(H, 2)
        if pat is not None:
            _, (w1, w2) = pat
            if _intersection_pairs(H, w1) == _intersection_pairs(H, w2):
                tags.add(FamilyTag.HV)
            else:
                tags.add(FamilyTag.HIV)
    return frozenset(tags)


_PRIORITY = (FamilyTag.HYPERSTAR, FamilyTag.HII, FamilyTag.HIV, FamilyTag.HV,
             FamilyTag.TSTAR, FamilyTag.HI, FamilyTag.HIII)


def membership(H: Hypergraph) -> FamilyTag:
    """Single family label. At m=2 some families overlap (a 2-edge hyperstar has maximum
    degree 2); the dominant-vertex families win."""
    tags = family_tags(H)
    for t in _PRIORITY:
        if t in tags:
            return t
    return FamilyTag.NONE


def is_member(H: Hypergraph, tag: FamilyTag | str) -> bool:
    return FamilyTag(tag) in family_tags(H)


def max_pairwise_intersection_counts(H: Hypergraph) -> dict[int, int]:
    """Histogram of |e_i & e_j| over edge pairs."""
    out: dict[int, int] = {}
    for a, b in combinations(H.edges, 2):
        s = len(set(a) & set(b))
        out[s] = out.get(s, 0) + 1
    return out


def hiv_variant(H: Hypergraph) -> str | None:
    """For an H^IV member: 'shared' if the two degree-2 vertices share an edge, else 'disjoint'."""
    pat = _dominant_pattern(H, 2)
    if pat is None or FamilyTag.HIV not in family_tags(H):
        return None
    _, (w1, w2) = pat
    return "shared" if _intersection_pairs(H, w1) & _intersection_pairs(H, w2) else "disjoint"
