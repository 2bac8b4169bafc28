"""Exhaustive isomorphism test for small uniform hypergraphs.

Backtracking over vertex bijections. Candidates are restricted to vertices with the same
refined colour, and every partial map must preserve the pairwise co-occurrence counts
(number of edges containing both vertices). Full edge-set equality is checked at the leaf.
"""

from __future__ import annotations

from collections import Counter

from .core import Hypergraph
from .errors import TooLarge

MAX_ISO_VERTICES = 14


def _cooccurrence(H: Hypergraph) -> list[list[int]]:
    A = [[0] * H.n for _ in range(H.n)]
    for e in H.edges:
        for a in e:
            for b in e:
                if a != b:
                    A[a][b] += 1
    return A


def _initial_colour(H: Hypergraph) -> list[tuple]:
    deg = H.degrees()
    edge_profiles = [tuple(sorted(deg[u] for u in e)) for e in H.edges]
    return [(deg[v], tuple(sorted(edge_profiles[i] for i, e in enumerate(H.edges) if v in e)))
            for v in range(H.n)]


def _joint_refine(sides: list[tuple[Hypergraph, list[list[int]]]]) -> list[list[int]]:
    """Colour refinement run on both hypergraphs with a shared palette, so colours compare."""
    raw = [_initial_colour(H) for H, _ in sides]
    palette = {c: i for i, c in enumerate(sorted({c for cols in raw for c in cols}))}
    colours = [[palette[c] for c in cols] for cols in raw]
    while True:
        sigs = []
        for (H, A), col in zip(sides, colours):
            sigs.append([(col[v], tuple(sorted((A[v][u], col[u]) for u in range(H.n) if A[v][u])))
                         for v in range(H.n)])
        palette = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        new = [[palette[s] for s in ss] for ss in sigs]
        if len(palette) == len({c for cols in colours for c in cols}):
            return new
        colours = new


def invariant(H: Hypergraph) -> tuple:
    """Cheap isomorphism invariant: equal for isomorphic inputs."""
    deg = H.degrees()
    profile = sorted(tuple(sorted(deg[v] for v in e)) for e in H.edges)
    sets = [set(e) for e in H.edges]
    inter = sorted(len(sets[i] & sets[j]) for i in range(len(sets)) for j in range(i + 1, len(sets)))
    return (H.k, H.n, H.m, tuple(sorted(deg)), tuple(profile), tuple(inter))


def find_isomorphism(H1: Hypergraph, H2: Hypergraph, max_n: int = MAX_ISO_VERTICES) -> list[int] | None:
    """A vertex map ``perm`` with ``H1.relabel(perm) == H2``, or None."""
    if max(H1.n, H2.n) > max_n:
        raise TooLarge(f"isomorphism search limited to n <= {max_n}, got n={max(H1.n, H2.n)}")
    if invariant(H1) != invariant(H2):
        return None
    A1, A2 = _cooccurrence(H1), _cooccurrence(H2)
    c1, c2 = _joint_refine([(H1, A1), (H2, A2)])
    if sorted(c1) != sorted(c2):
        return None
    n = H1.n
    # rarest colour classes first, then stay inside already-touched edges
    freq = Counter(c1)
    order: list[int] = []
    placed = set()
    for v in sorted(range(n), key=lambda v: (freq[c1[v]], v)):
        if v in placed:
            continue
        stack = [v]
        while stack:
            x = stack.pop()
            if x in placed:
                continue
            placed.add(x)
            order.append(x)
            nbrs = sorted((u for u in range(n) if A1[x][u] and u not in placed),
                          key=lambda u: (-freq[c1[u]], u), reverse=True)
            stack.extend(nbrs)
    target = set(H2.edges)
    perm = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return all(tuple(sorted(perm[v] for v in e)) in target for e in H1.edges)
        v = order[i]
        for w in range(n):
            if used[w] or c2[w] != c1[v]:
                continue
            ok = True
            for u in order[:i]:
                if A1[v][u] != A2[w][perm[u]]:
                    ok = False
                    break
            if not ok:
                continue
            perm[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            used[w] = False
            perm[v] = -1
        return False

    return list(perm) if extend(0) else None


def is_isomorphic(H1: Hypergraph, H2: Hypergraph, max_n: int = MAX_ISO_VERTICES) -> bool:
    return find_isomorphism(H1, H2, max_n) is not None


def dedup_isomorphic(graphs, max_n: int = MAX_ISO_VERTICES) -> list[tuple[Hypergraph, int]]:
    """Representatives of the isomorphism classes among ``graphs`` with multiplicities.

    Representatives keep first-seen order.
    """
    buckets: dict[tuple, list[int]] = {}
    reps: list[list] = []
    for H in graphs:
        key = invariant(H)
        for idx in buckets.get(key, ()):
            if is_isomorphic(reps[idx][0], H, max_n):
                reps[idx][1] += 1
                break
        else:
            buckets.setdefault(key, []).append(len(reps))
            reps.append([H, 1])
    return [(H, c) for H, c in reps]
