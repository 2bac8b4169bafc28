"""Exhaustive labeled enumeration of supertree / unicyclic / bicyclic classes and theorem checks.

A class at fixed (k, m, c) lives on exactly n = m(k-1) + 1 - c vertices, so membership reduces
to: m distinct k-subsets of {0..n-1} that cover every vertex and form one component.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .core import CycleClass, Hypergraph, classify
from .entropy import BoundPair, entropy_of_degrees, h_bounds, h_of_degrees, theorem_bounds
from .errors import InvalidParameters, RetryExhausted, SearchSpaceTooLarge
from .families import FamilyTag, family_feasible, family_tags, hiv_variant
from .iso import MAX_ISO_VERTICES, dedup_isomorphic

DEFAULT_MAX_SPACE = 10**8
BOUND_TOL = 1e-12
TIE_TOL = 1e-9

THEOREMS = {"T3.1": CycleClass.SUPERTREE, "T4.1": CycleClass.UNICYCLIC, "T5.1": CycleClass.BICYCLIC}


def class_vertex_count(k: int, m: int, c: int) -> int:
    return m * (k - 1) + 1 - c


def search_space(k: int, m: int, c: int) -> int:
    """Number of m-subsets of candidate edges, C(C(n,k), m)."""
    n = class_vertex_count(k, m, c)
    if n < k:
        return 0
    return math.comb(math.comb(n, k), m)


def _check_params(k: int, m: int, c: int, max_space: int | None) -> int:
    if k < 3 or m < 2:
        raise InvalidParameters(f"enumeration needs k >= 3 and m >= 2, got k={k}, m={m}")
    if c not in (0, 1, 2):
        raise InvalidParameters(f"cyclomatic number must be 0, 1 or 2, got {c}")
    size = search_space(k, m, c)
    if max_space is not None and size > max_space:
        raise SearchSpaceTooLarge(f"C(C(n,k), m) = {size} exceeds the limit {max_space}", size=size)
    return class_vertex_count(k, m, c)


def _connected(masks: list[int]) -> bool:
    comp = masks[0]
    rest = masks[1:]
    while rest:
        left = [x for x in rest if not x & comp]
        if len(left) == len(rest):
            return False
        for x in rest:
            if x & comp:
                comp |= x
        rest = left
    return True


def enumerate_class(k: int, m: int, c: int, *, shard: int = 0, shards: int = 1,
                    max_space: int | None = DEFAULT_MAX_SPACE) -> Iterator[Hypergraph]:
    """Every labeled connected k-uniform hypergraph with m edges and cyclomatic number c.

    Edges are picked in increasing lexicographic order; a branch dies as soon as its
    smallest uncovered vertex can no longer appear in any later candidate edge. Shard s of
    W takes the subsets whose first edge index is congruent to s mod W.
    """
    n = _check_params(k, m, c, max_space)
    if n < k:
        return
    cands = list(combinations(range(n), k))
    masks = [sum(1 << v for v in e) for e in cands]
    first = [e[0] for e in cands]
    full = (1 << n) - 1
    total = len(cands)
    out: list[tuple[int, ...]] = []
    chosen = [0] * m

    def extend(start: int, depth: int, covered: int) -> None:
        if depth == m:
            if covered == full and _connected([masks[i] for i in chosen]):
                out.append(tuple(chosen))
            return
        need = m - depth
        low = (~covered & full)
        if low.bit_count() > need * k:
            return
        lowest = (low & -low).bit_length() - 1 if low else n
        for i in range(start, total - need + 1):
            if first[i] > lowest:
                break
            chosen[depth] = i
            extend(i + 1, depth + 1, covered | masks[i])

    for i0 in range(shard, total - m + 1, shards):
        if first[i0] > 0:
            break
        chosen[0] = i0
        out.clear()
        extend(i0 + 1, 1, masks[i0])
        for idx in out:
            yield Hypergraph._trusted(k, n, tuple(cands[i] for i in idx))


def enumerate_class_naive(k: int, m: int, c: int, max_space: int | None = DEFAULT_MAX_SPACE) -> Iterator[Hypergraph]:
    """Reference generator: filter every m-subset of candidate edges through classify()."""
    n = _check_params(k, m, c, max_space)
    if n < k:
        return
    cands = list(combinations(range(n), k))
    masks = [sum(1 << v for v in e) for e in cands]
    full = (1 << n) - 1
    for idx in combinations(range(len(cands)), m):
        cover = 0
        for i in idx:
            cover |= masks[i]
        if cover != full:
            continue
        H = Hypergraph(k, n, tuple(cands[i] for i in idx))
        sc = classify(H)
        if sc.connected and sc.cyclomatic == c:
            yield H


def count_class(k: int, m: int, c: int, **kw) -> int:
    return sum(1 for _ in enumerate_class(k, m, c, **kw))


# --- reports -------------------------------------------------------------------------------


@dataclass
class Extremizer:
    representative: Hypergraph
    labeled_count: int
    tags: tuple[str, ...]
    degrees: tuple[int, ...]


@dataclass
class _Partial:
    """Per-shard scan state; merge() is associative and commutative."""

    count: int = 0
    min_I: float = math.inf
    max_I: float = -math.inf
    min_h: float = math.inf
    max_h: float = -math.inf
    # extremes in I, as lists of instances (ties within TIE_TOL)
    lo: list = field(default_factory=list)
    hi: list = field(default_factory=list)
    below_lower: list = field(default_factory=list)
    above_upper: list = field(default_factory=list)
    lower_mismatch: list = field(default_factory=list)
    upper_mismatch: list = field(default_factory=list)
    n_below: int = 0
    n_above: int = 0
    n_lower_mismatch: int = 0
    n_upper_mismatch: int = 0
    at_lower: int = 0
    at_upper: int = 0
    tag_counts: Counter = field(default_factory=Counter)
    degree_counts: Counter = field(default_factory=Counter)
    hiv_variants: Counter = field(default_factory=Counter)
    every: list = field(default_factory=list)

    def merge(self, other: "_Partial") -> "_Partial":
        out = _Partial()
        out.count = self.count + other.count
        out.min_h, out.max_h = min(self.min_h, other.min_h), max(self.max_h, other.max_h)
        out.min_I, out.max_I = min(self.min_I, other.min_I), max(self.max_I, other.max_I)
        out.lo = [x for x in self.lo + other.lo if x[0] <= out.min_I + TIE_TOL]
        out.hi = [x for x in self.hi + other.hi if x[0] >= out.max_I - TIE_TOL]
        for name in ("below_lower", "above_upper", "lower_mismatch", "upper_mismatch"):
            setattr(out, name, _first(getattr(self, name) + getattr(other, name)))
        for name in ("n_below", "n_above", "n_lower_mismatch", "n_upper_mismatch", "at_lower", "at_upper"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        out.tag_counts = self.tag_counts + other.tag_counts
        out.degree_counts = self.degree_counts + other.degree_counts
        out.hiv_variants = self.hiv_variants + other.hiv_variants
        out.every = self.every + other.every
        return out


def _first(items: list) -> list:
    """Keep the canonically smallest counterexample so sharding cannot change the report."""
    return [min(items, key=lambda H: H.edges)] if items else []


def _scan(args) -> _Partial:
    cls, k, m, t, shard, shards, max_space, keep_all = args
    cls = CycleClass(cls)
    c = cls.cyclomatic
    bounds = theorem_bounds(cls, k, m) if t == 1 else None
    p = _Partial()
    cache: dict[tuple[int, ...], tuple[float, float]] = {}
    for H in enumerate_class(k, m, c, shard=shard, shards=shards, max_space=max_space):
        deg = H.degrees()
        ds = tuple(sorted(deg, reverse=True))
        vals = cache.get(ds)
        if vals is None:
            vals = cache[ds] = (entropy_of_degrees(ds, t), h_of_degrees(ds))
        I, h = vals
        p.count += 1
        p.degree_counts[ds] += 1
        tags = family_tags(H)
        p.tag_counts[tuple(sorted(x.value for x in tags))] += 1
        if FamilyTag.HIV in tags:
            p.hiv_variants[hiv_variant(H)] += 1
        if keep_all:
            p.every.append(H)
        p.min_h, p.max_h = min(p.min_h, h), max(p.max_h, h)
        if I < p.min_I - TIE_TOL:
            p.lo = []
        if I <= p.min_I + TIE_TOL:
            p.lo.append((I, ds, H))
        p.min_I = min(p.min_I, I)
        if I > p.max_I + TIE_TOL:
            p.hi = []
        if I >= p.max_I - TIE_TOL:
            p.hi.append((I, ds, H))
        p.max_I = max(p.max_I, I)
        if bounds is None:
            continue
        tagv = {x.value for x in tags}
        if I < bounds.lower - BOUND_TOL:
            p.n_below += 1
            p.below_lower = _first(p.below_lower + [H])
        if I > bounds.upper + BOUND_TOL:
            p.n_above += 1
            p.above_upper = _first(p.above_upper + [H])
        at_lo = abs(I - bounds.lower) <= BOUND_TOL
        at_hi = abs(I - bounds.upper) <= BOUND_TOL
        p.at_lower += at_lo
        p.at_upper += at_hi
        if at_lo != bool(tagv & set(bounds.lower_witness)):
            p.n_lower_mismatch += 1
            p.lower_mismatch = _first(p.lower_mismatch + [H])
        if at_hi != bool(tagv & set(bounds.upper_witness)):
            p.n_upper_mismatch += 1
            p.upper_mismatch = _first(p.upper_mismatch + [H])
    p.lo = [x for x in p.lo if x[0] <= p.min_I + TIE_TOL]
    p.hi = [x for x in p.hi if x[0] >= p.max_I - TIE_TOL]
    return p


@dataclass
class ExtremalReport:
    cls: CycleClass
    k: int
    m: int
    n: int
    t: float
    labeled_count: int
    iso_class_count: int | None
    min_I: float
    max_I: float
    min_h: float
    max_h: float
    minimizers: list[Extremizer]
    maximizers: list[Extremizer]
    bounds: BoundPair | None
    h_range: BoundPair | None
    checks: dict[str, bool]
    counterexamples: dict[str, Hypergraph]
    violation_counts: dict[str, int]
    notes: list[str]
    warnings: list[str]
    tag_counts: dict[str, int]
    degree_counts: dict[tuple[int, ...], int]

    @property
    def empty(self) -> bool:
        return self.labeled_count == 0

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _extremizers(items: list, dedup: bool, warnings: list[str], label: str) -> list[Extremizer]:
    items = sorted(items, key=lambda x: x[2].edges)
    multisets = sorted({x[1] for x in items}, reverse=True)
    if len(multisets) > 1:
        warnings.append(f"{label}: {len(multisets)} distinct degree multisets tie within {TIE_TOL}: {multisets}")
    graphs = [x[2] for x in items]
    degrees = {x[2]: x[1] for x in items}
    if dedup:
        groups = dedup_isomorphic(graphs)
    else:
        groups = [(H, 1) for H in graphs]
    return [Extremizer(H, c, tuple(sorted(x.value for x in family_tags(H))), degrees[H]) for H, c in groups]


def feasibility_notes(cls: CycleClass, k: int, m: int) -> list[str]:
    notes = []
    if cls is CycleClass.BICYCLIC:
        for tag in (FamilyTag.HIV, FamilyTag.HV):
            if not family_feasible(tag, m, k):
                why = "k=3 edges cannot share 3 vertices" if tag is FamilyTag.HV and k < 4 else f"needs more edges than m={m}"
                notes.append(f"{tag.value} infeasible at k={k}, m={m} ({why})")
    return notes


def extremal_report(cls: CycleClass | str, k: int, m: int, t: float = 1.0, *, jobs: int = 1,
                    max_space: int | None = DEFAULT_MAX_SPACE, dedup_iso: bool = False) -> ExtremalReport:
    """Scan the whole class and compare extremes against the closed-form bounds (t = 1 only).

    Minimizers/maximizers are taken in I_d^t; for t = 1 the I-minimizers are the h-maximizers.
    Extremizers are deduplicated up to isomorphism whenever n is within the search bound;
    ``dedup_iso`` additionally counts isomorphism classes of the whole class.
    """
    cls = CycleClass(cls)
    if cls is CycleClass.OTHER:
        raise InvalidParameters("class must be supertree, unicyclic or bicyclic")
    c = cls.cyclomatic
    n = _check_params(k, m, c, max_space)
    shards = max(1, int(jobs))
    iso_ok = n <= MAX_ISO_VERTICES
    args = [(cls.value, k, m, t, s, shards, max_space, dedup_iso and iso_ok) for s in range(shards)]
    if shards == 1:
        parts = [_scan(args[0])]
    else:
        with ProcessPoolExecutor(max_workers=shards) as pool:
            parts = list(pool.map(_scan, args))
    total = parts[0]
    for p in parts[1:]:
        total = total.merge(p)

    notes = feasibility_notes(cls, k, m)
    warnings: list[str] = []
    if total.count == 0:
        notes.append(f"class is empty: no connected {k}-uniform hypergraph with m={m} and c={c} on n={n} vertices")
    minimizers = _extremizers(total.lo, iso_ok, warnings, "minimum")
    maximizers = _extremizers(total.hi, iso_ok, warnings, "maximum")
    iso_count = None
    if dedup_iso and iso_ok:
        iso_count = len(dedup_isomorphic(sorted(total.every, key=lambda H: H.edges)))
    for variant, cnt in sorted(total.hiv_variants.items()):
        notes.append(f"HIV members with {variant} intersecting pairs: {cnt} labeled")

    bounds = hb = None
    checks: dict[str, bool] = {}
    cex: dict[str, Hypergraph] = {}
    counts: dict[str, int] = {}
    if t == 1:
        bounds = theorem_bounds(cls, k, m)
        hb = h_bounds(cls, k, m)
        km = k * m
        checks["lower_bound"] = total.n_below == 0
        checks["upper_bound"] = total.n_above == 0
        checks["lower_equality_family"] = total.n_lower_mismatch == 0
        checks["upper_equality_family"] = total.n_upper_mismatch == 0
        checks["minimizer_tags"] = all(set(e.tags) & set(bounds.lower_witness) for e in minimizers)
        checks["maximizer_tags"] = all(set(e.tags) & set(bounds.upper_witness) for e in maximizers)
        if total.count:
            checks["duality"] = (abs(total.min_I - (math.log2(km) - total.max_h / km)) <= BOUND_TOL
                                 and abs(total.max_I - (math.log2(km) - total.min_h / km)) <= BOUND_TOL)
        for key, items in (("lower_bound", total.below_lower), ("upper_bound", total.above_upper),
                           ("lower_equality_family", total.lower_mismatch),
                           ("upper_equality_family", total.upper_mismatch)):
            if items:
                cex[key] = items[0]
        if not checks["minimizer_tags"] and "minimizer_tags" not in cex:
            cex["minimizer_tags"] = next(e.representative for e in minimizers if not set(e.tags) & set(bounds.lower_witness))
        if not checks["maximizer_tags"] and "maximizer_tags" not in cex:
            cex["maximizer_tags"] = next(e.representative for e in maximizers if not set(e.tags) & set(bounds.upper_witness))
        counts = {"below_lower": total.n_below, "above_upper": total.n_above,
                  "lower_equality_mismatch": total.n_lower_mismatch,
                  "upper_equality_mismatch": total.n_upper_mismatch,
                  "at_lower": total.at_lower, "at_upper": total.at_upper}

    return ExtremalReport(
        cls=cls, k=k, m=m, n=n, t=t, labeled_count=total.count, iso_class_count=iso_count,
        min_I=total.min_I if total.count else math.nan, max_I=total.max_I if total.count else math.nan,
        min_h=total.min_h if total.count else math.nan, max_h=total.max_h if total.count else math.nan,
        minimizers=minimizers, maximizers=maximizers, bounds=bounds, h_range=hb,
        checks=checks, counterexamples=cex, violation_counts=counts, notes=notes, warnings=warnings,
        tag_counts={"+".join(k_) or "None": v for k_, v in sorted(total.tag_counts.items())},
        degree_counts=dict(sorted(total.degree_counts.items(), reverse=True)),
    )


@dataclass
class TheoremVerdict:
    theorem: str
    report: ExtremalReport

    @property
    def passed(self) -> bool:
        return self.report.passed

    @property
    def empty(self) -> bool:
        return self.report.empty

    @property
    def counterexample(self) -> Hypergraph | None:
        for key in ("lower_bound", "upper_bound", "lower_equality_family", "upper_equality_family",
                    "minimizer_tags", "maximizer_tags"):
            if key in self.report.counterexamples:
                return self.report.counterexamples[key]
        return None

    @property
    def failed_checks(self) -> list[str]:
        return [k for k, v in self.report.checks.items() if not v]


def verify_theorem(theorem: str, k: int, m: int, *, jobs: int = 1,
                   max_space: int | None = DEFAULT_MAX_SPACE) -> TheoremVerdict:
    if theorem not in THEOREMS:
        raise InvalidParameters(f"theorem must be one of {sorted(THEOREMS)}, got {theorem!r}")
    return TheoremVerdict(theorem, extremal_report(THEOREMS[theorem], k, m, 1, jobs=jobs, max_space=max_space))


# --- random instances ------------------------------------------------------------------------


def _random_supertree(k: int, m: int, rng: random.Random) -> list[list[int]]:
    edges = [list(range(k))]
    nxt = k
    for _ in range(m - 1):
        v = rng.randrange(nxt)
        edges.append([v, *range(nxt, nxt + k - 1)])
        nxt += k - 1
    return edges


def _fuse(edges: list[list[int]], rng: random.Random, attempts: int = 50) -> list[list[int]] | None:
    """Replace a random degree-1 vertex p in its edge by another vertex x, then drop p."""
    deg = Counter(v for e in edges for v in e)
    pendent = sorted(v for v, d in deg.items() if d == 1)
    nverts = len(deg)
    for _ in range(attempts):
        p = rng.choice(pendent)
        i = next(j for j, e in enumerate(edges) if p in e)
        x = rng.randrange(nverts)
        if x in edges[i]:
            continue
        new_edge = sorted((set(edges[i]) - {p}) | {x})
        if any(sorted(e) == new_edge for j, e in enumerate(edges) if j != i):
            continue
        out = [list(e) for e in edges]
        out[i] = new_edge
        return [[v - (v > p) for v in e] for e in out]
    return None


def random_instance(cls: CycleClass | str, k: int, m: int, seed: int, *, retries: int = 200) -> Hypergraph:
    """Random connected member of a class: a random supertree followed by c vertex fusions,
    then a random relabeling. Deterministic in ``seed``."""
    cls = CycleClass(cls)
    if cls is CycleClass.OTHER:
        raise InvalidParameters("class must be supertree, unicyclic or bicyclic")
    if k < 2 or m < 1:
        raise InvalidParameters(f"need k >= 2 and m >= 1, got k={k}, m={m}")
    c = cls.cyclomatic
    rng = random.Random(seed)
    for _ in range(retries):
        edges = _random_supertree(k, m, rng)
        for _ in range(c):
            edges = _fuse(edges, rng)
            if edges is None:
                break
        if edges is None:
            continue
        n = class_vertex_count(k, m, c)
        perm = list(range(n))
        rng.shuffle(perm)
        H = Hypergraph(k, n, tuple(tuple(perm[v] for v in e) for e in edges))
        sc = classify(H)
        assert sc.connected and sc.tag is cls, (sc, H)
        return H
    raise RetryExhausted(f"could not build a {cls.value} instance with k={k}, m={m} after {retries} tries")
