"""Edge moving and edge releasing, plus checks for their effect on h and on the cycle class."""

from __future__ import annotations

from dataclasses import dataclass

from .core import CycleClass, Hypergraph, classify, is_linear, pendency
from .entropy import h_value
from .errors import (
    AnchorNotInEdge,
    Disconnected,
    EdgeIsPendent,
    InvalidParameters,
    IsolatedVertexCreated,
    MultipleEdgeCreated,
    NotLinear,
    PreconditionMismatch,
    SourceNotInEdge,
    TargetInsideEdge,
)

STRICT_MARGIN = 1e-12


@dataclass(frozen=True)
class MoveSpec:
    """Move each edge ``moves[i][0]`` (index into ``H.edges``) off vertex ``moves[i][1]`` onto ``target``."""

    target: int
    moves: tuple[tuple[int, int], ...]

    @classmethod
    def single(cls, edge: int, source: int, target: int) -> "MoveSpec":
        return cls(target, ((edge, source),))


def move_edges(H: Hypergraph, spec: MoveSpec) -> Hypergraph:
    u = spec.target
    if not 0 <= u < H.n:
        raise InvalidParameters(f"target vertex {u} outside 0..{H.n - 1}")
    idx = [i for i, _ in spec.moves]
    if len(set(idx)) != len(idx):
        raise InvalidParameters("each edge may be moved at most once")
    new_edges = list(H.edges)
    for i, v in spec.moves:
        if not 0 <= i < H.m:
            raise InvalidParameters(f"edge index {i} outside 0..{H.m - 1}")
        e = H.edges[i]
        if u in e:
            raise TargetInsideEdge(f"target {u} already lies in edge {i} {list(e)}", edge_index=i, vertex=u)
        if v not in e:
            raise SourceNotInEdge(f"source {v} not in edge {i} {list(e)}", edge_index=i, vertex=v)
        new_edges[i] = tuple(sorted((set(e) - {v}) | {u}))
    if len(set(new_edges)) != len(new_edges):
        raise MultipleEdgeCreated("moving these edges would create a repeated edge")
    deg = [0] * H.n
    for e in new_edges:
        for x in e:
            deg[x] += 1
    for _, v in spec.moves:
        if deg[v] == 0:
            raise IsolatedVertexCreated(f"vertex {v} would be left in no edge", vertex=v)
    return Hypergraph(H.k, H.n, tuple(new_edges))


def release_spec(H: Hypergraph, e: int, u: int) -> MoveSpec:
    """The move set of an edge release on edge ``e`` at anchor ``u``; validates preconditions."""
    if not 0 <= e < H.m:
        raise InvalidParameters(f"edge index {e} outside 0..{H.m - 1}")
    edge = H.edges[e]
    if u not in edge:
        raise AnchorNotInEdge(f"anchor {u} not in edge {e} {list(edge)}", edge_index=e, vertex=u)
    if not is_linear(H):
        raise NotLinear("edge releasing is defined on linear hypergraphs only")
    if e in pendency(H).pendent_edges:
        raise EdgeIsPendent(f"edge {e} is pendent; releasing it moves nothing", edge_index=e)
    es = set(edge)
    moves = []
    for j, f in enumerate(H.edges):
        if j == e or u in f:
            continue
        common = es.intersection(f)
        if common:
            (v,) = common  # linear: exactly one shared vertex
            moves.append((j, v))
    if not moves:
        raise EdgeIsPendent(f"no edge adjacent to edge {e} avoids anchor {u}", edge_index=e)
    return MoveSpec(u, tuple(moves))


def edge_release(H: Hypergraph, e: int, u: int) -> Hypergraph:
    """Move every edge meeting edge ``e`` away from ``u`` onto ``u``."""
    return move_edges(H, release_spec(H, e, u))


@dataclass(frozen=True)
class MonotonicityVerdict:
    lemma: str
    h_before: float
    h_after: float
    holds: bool

    @property
    def delta(self) -> float:
        return self.h_after - self.h_before


def check_lemma_monotonicity(before: Hypergraph, after: Hypergraph, which: str,
                             source: int | None = None, target: int | None = None) -> MonotonicityVerdict:
    """Check the strict change of h promised for a move.

    ``which`` is ``"L2.1"`` (source degree >= target degree + 2: h drops),
    ``"L2.2"`` (edge release: h rises) or ``"L2.3"`` (target degree >= source degree: h rises).
    For L2.1/L2.3 the source and target vertices of the single move are required; degrees are
    read from ``before``.
    """
    if which not in ("L2.1", "L2.2", "L2.3"):
        raise InvalidParameters(f"unknown lemma {which!r}")
    if which != "L2.2":
        if source is None or target is None:
            raise InvalidParameters(f"{which} needs the move's source and target")
        deg = before.degrees()
        ds, dt = deg[source], deg[target]
        if which == "L2.1" and not ds >= dt + 2:
            raise PreconditionMismatch(f"L2.1 needs d(source) >= d(target) + 2, got {ds} and {dt}")
        if which == "L2.3" and not dt >= ds:
            raise PreconditionMismatch(f"L2.3 needs d(target) >= d(source), got {dt} and {ds}")
    hb, ha = h_value(before), h_value(after)
    holds = hb - ha > STRICT_MARGIN if which == "L2.1" else ha - hb > STRICT_MARGIN
    return MonotonicityVerdict(which, hb, ha, holds)


@dataclass(frozen=True)
class ClosureVerdict:
    before: CycleClass
    after: CycleClass
    route: str

    @property
    def preserved(self) -> bool:
        return self.before is self.after


def class_closure_check(before: Hypergraph, after: Hypergraph, route: str = "move") -> ClosureVerdict:
    """Compare cycle classes across a move or release; the claim only covers connected results."""
    sa = classify(after)
    if not sa.connected:
        raise Disconnected(f"result has {sa.components} components; closure does not apply")
    return ClosureVerdict(classify(before).tag, sa.tag, route)


def single_moves(H: Hypergraph, lemma: str) -> list[tuple[int, int, int]]:
    """All (edge, source, target) single moves meeting the degree precondition of ``lemma``
    that produce a valid simple hypergraph without isolated vertices."""
    deg = H.degrees()
    edge_set = set(H.edges)
    out = []
    for i, e in enumerate(H.edges):
        for v in e:
            if deg[v] < 2:
                continue
            rest = set(e) - {v}
            for u in range(H.n):
                if u in e:
                    continue
                if lemma == "L2.1" and not deg[v] >= deg[u] + 2:
                    continue
                if lemma == "L2.3" and not deg[u] >= deg[v]:
                    continue
                if tuple(sorted(rest | {u})) in edge_set:
                    continue
                out.append((i, v, u))
    return out
