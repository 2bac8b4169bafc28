import math
import random
from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from hyperentropy.core import CycleClass, Hypergraph, classify, degree_sequence, validate
from hyperentropy.entropy import h_value
from hyperentropy.enumeration import enumerate_class
from hyperentropy.errors import Disconnected, InvalidParameters, TooLarge
from hyperentropy.families import (
    FamilyTag,
    Graph,
    cycle_graph,
    family_member,
    family_tags,
    hiv_variant,
    hyperstar,
    is_isomorphic,
    loose_path,
    max_pairwise_intersection_counts,
    membership,
    path_graph,
    power,
    star_graph,
)

from .conftest import class_instances, relabel_randomly


def brute_iso(H1, H2):
    """Oracle: try every vertex bijection."""
    if (H1.k, H1.n, H1.m) != (H2.k, H2.n, H2.m):
        return False
    target = set(H2.edges)
    return any(all(tuple(sorted(p[v] for v in e)) in target for e in H1.edges) for p in permutations(range(H1.n)))


def nx_iso(H1, H2):
    """Oracle: VF2 on the bipartite vertex/edge incidence graphs."""
    def incidence(H):
        G = nx.Graph()
        G.add_nodes_from((("v", v) for v in range(H.n)), side=0)
        G.add_nodes_from((("e", i) for i in range(H.m)), side=1)
        G.add_edges_from((("v", v), ("e", i)) for i, e in enumerate(H.edges) for v in e)
        return G
    return nx.is_isomorphic(incidence(H1), incidence(H2), node_match=lambda a, b: a["side"] == b["side"])


def random_connected_graph(rng, n_max=10):
    n = rng.randint(2, n_max)
    edges = {(rng.randrange(i), i) for i in range(1, n)}  # random spanning tree
    extra = rng.randint(0, 3)
    pairs = [p for p in combinations(range(n), 2) if p not in edges]
    rng.shuffle(pairs)
    edges.update(pairs[:extra])
    return Graph(n, tuple(edges))


def test_power_examples():
    H = power(star_graph(3), 3)
    assert H.n == 5 and degree_sequence(H).degrees == (2, 1, 1, 1, 1)
    assert is_isomorphic(H, hyperstar(2, 3))
    H = power(path_graph(4), 3)
    assert degree_sequence(H).degrees == (2, 2, 1, 1, 1, 1, 1)
    H = power(cycle_graph(3), 3)
    assert H.n == 6 and classify(H).cyclomatic == 1 and FamilyTag.HI in family_tags(H)


def test_power_preserves_degrees():
    rng = random.Random(3)
    for _ in range(50):
        G = random_connected_graph(rng)
        for k in (3, 4):
            H = power(G, k)
            deg = H.degrees()
            gdeg = [sum(v in e for e in G.edges) for v in range(G.n)]
            assert deg[:G.n] == gdeg and all(d == 1 for d in deg[G.n:])
            assert H.n == G.n + len(G.edges) * (k - 2)


def test_power_cyclomatic_invariance():
    rng = random.Random(11)
    for _ in range(120):
        G = random_connected_graph(rng)
        for k in (3, 4, 5):
            sc = classify(power(G, k))
            assert sc.connected and sc.cyclomatic == len(G.edges) - G.n + 1


def test_hyperstar_examples():
    stars = [H for H in enumerate_class(3, 2, 0)]
    assert len(stars) == 15 and all(is_isomorphic(hyperstar(2, 3), H) for H in stars)
    assert hyperstar(1, 3) == validate(3, [[0, 1, 2]])
    assert h_value(hyperstar(4, 3)) == pytest.approx(8.0, abs=1e-12)


@pytest.mark.parametrize("m", range(1, 9))
@pytest.mark.parametrize("k", [3, 4, 6])
def test_hyperstar_structure(m, k):
    H = hyperstar(m, k)
    assert H.n == m * (k - 1) + 1
    assert degree_sequence(H).degrees == (m,) + (1,) * (H.n - 1)
    sc = classify(H)
    assert sc.tag is CycleClass.SUPERTREE and sc.linear
    assert h_value(H) == pytest.approx(m * math.log2(m) if m > 1 else 0.0, abs=1e-12)


def test_family_member_examples():
    H = family_member("HII", 3, 3)
    assert degree_sequence(H).degrees == (3, 2, 1, 1, 1, 1)
    assert h_value(H) == pytest.approx(3 * math.log2(3) + 2, abs=1e-12)
    H = family_member("HIV", 4, 3)
    assert degree_sequence(H).degrees[:4] == (4, 2, 2, 1)
    assert h_value(H) == pytest.approx(12.0, abs=1e-12)
    H = family_member("HV", 2, 4)
    assert H.n == 5 and h_value(H) == pytest.approx(6.0, abs=1e-12)
    assert degree_sequence(H).degrees == (2, 2, 2, 1, 1)


@pytest.mark.parametrize("tag, m, k", [("HV", 3, 3), ("HIV", 2, 4), ("HII", 1, 3), ("HIII", 2, 3)])
def test_infeasible_members(tag, m, k):
    with pytest.raises(InvalidParameters):
        family_member(tag, m, k)


FAMILY_H = {
    "TStar": lambda m: 2 * (m - 1),
    "HI": lambda m: 2 * m,
    "HIII": lambda m: 2 * (m + 1),
    "Hyperstar": lambda m: m * math.log2(m),
    "HII": lambda m: m * math.log2(m) + 2,
    "HIV": lambda m: m * math.log2(m) + 4,
    "HV": lambda m: m * math.log2(m) + 4,
}
CLASS_OF = {"TStar": "supertree", "Hyperstar": "supertree", "HI": "unicyclic", "HII": "unicyclic",
            "HIII": "bicyclic", "HIV": "bicyclic", "HV": "bicyclic"}


@pytest.mark.parametrize("tag", sorted(FAMILY_H))
@pytest.mark.parametrize("k", [3, 4, 5])
@pytest.mark.parametrize("m", [2, 3, 4, 5, 8])
def test_family_members_hit_their_h_value(tag, k, m):
    try:
        H = family_member(tag, m, k)
    except InvalidParameters:
        pytest.skip("infeasible combination")
    assert classify(H).tag.value == CLASS_OF[tag]
    assert FamilyTag(tag) in family_tags(H)
    assert h_value(H) == pytest.approx(FAMILY_H[tag](m), abs=1e-12)


@given(class_instances())
def test_tag_implies_h_value(H):
    for tag in family_tags(H):
        assert h_value(H) == pytest.approx(FAMILY_H[tag.value](H.m), abs=1e-12)


@given(class_instances(), st.integers(0, 10**6))
def test_membership_is_isomorphism_invariant(H, seed):
    assert membership(relabel_randomly(H, seed)) == membership(H)
    assert family_tags(relabel_randomly(H, seed)) == family_tags(H)


def test_membership_examples():
    assert membership(hyperstar(3, 3)) is FamilyTag.HYPERSTAR
    assert membership(power(path_graph(5), 3)) is FamilyTag.TSTAR
    hiv, hv = family_member("HIV", 4, 3), family_member("HV", 4, 4)
    assert membership(hiv) is FamilyTag.HIV and membership(hv) is FamilyTag.HV
    assert max(max_pairwise_intersection_counts(hiv)) < 3
    assert max_pairwise_intersection_counts(hv).get(3) == 1


def test_hiv_variants():
    assert hiv_variant(family_member("HIV", 3, 3)) == "shared"
    assert hiv_variant(family_member("HIV", 4, 3)) == "disjoint"
    assert hiv_variant(family_member("HV", 4, 4)) is None


def test_membership_rejects_disconnected():
    with pytest.raises(Disconnected):
        membership(validate(6, [[0, 1, 2], [3, 4, 5]]))


def test_structural_recognition_agrees_with_isomorphism():
    """Every member of a class carrying HII/HIV/HV is isomorphic to some canonical witness."""
    for k, m, c, tag in [(3, 3, 1, "HII"), (4, 3, 1, "HII"), (3, 3, 2, "HIV"), (3, 4, 2, "HIV"), (4, 2, 2, "HV")]:
        witnesses = [family_member(tag, m, k)]
        if tag == "HIV" and m >= 4:
            # the alternative reading: the two intersecting pairs share an edge
            witnesses.append(validate(m * (k - 1) - 1, [[0, 1, 3], [0, 1, 2], [0, 2, 4], [0, 5, 6]]))
        for H in enumerate_class(k, m, c):
            tagged = FamilyTag(tag) in family_tags(H)
            assert tagged == any(is_isomorphic(H, W) for W in witnesses)


# --- isomorphism -------------------------------------------------------------------------------


@given(class_instances(m_range=(2, 4), k_range=(3, 4)), st.integers(0, 10**6))
@settings(max_examples=60)
def test_iso_relabel_witness(H, seed):
    assert is_isomorphic(H, relabel_randomly(H, seed))


def test_iso_two_edge_supertrees():
    stars = list(enumerate_class(3, 2, 0))
    assert all(is_isomorphic(stars[0], H) for H in stars)


def test_hiv_vs_hv_not_isomorphic():
    a, b = family_member("HIV", 4, 4), family_member("HV", 4, 4)
    assert degree_sequence(a) == degree_sequence(b)
    assert not is_isomorphic(a, b)
    assert not nx_iso(a, b)


def test_iso_matches_brute_force_small():
    graphs = list(enumerate_class(3, 3, 2)) + list(enumerate_class(4, 2, 1))
    rng = random.Random(5)
    pairs = [(rng.choice(graphs), rng.choice(graphs)) for _ in range(150)]
    for a, b in pairs:
        if a.n == b.n:
            assert is_isomorphic(a, b) == brute_iso(a, b)


def test_iso_matches_networkx():
    graphs = list(enumerate_class(3, 4, 2))
    rng = random.Random(9)
    for _ in range(300):
        a, b = rng.choice(graphs), rng.choice(graphs)
        assert is_isomorphic(a, b) == nx_iso(a, b)


def test_iso_size_guard():
    H = hyperstar(8, 3)  # n = 17
    with pytest.raises(TooLarge):
        is_isomorphic(H, H)
    assert is_isomorphic(H, H, max_n=20)


def test_graph_validation():
    with pytest.raises(InvalidParameters):
        Graph(3, ((0, 0),))
    with pytest.raises(InvalidParameters):
        Graph(3, ((0, 1), (1, 0)))
    assert loose_path(3, 3) == power(path_graph(4), 3)
