import random
from itertools import combinations, permutations

import pytest

from oracles import random_informative_partition, set_partitions, t_coverage
from rcards.core import BudgetExceeded, DealSpec, k_subsets
from rcards.designs import sts_construct
from rcards.search import (
    conflict_graph,
    design_check,
    enumerate_designs,
    greedy_completion,
    max_clique,
    max_disjoint_family,
    min_informative_m,
)
from rcards.verify import PreconditionError, equitability, is_informative, lower_bound_m


def _orbit_size(D):
    seen = set()
    for p in permutations(range(D.v)):
        seen.add(frozenset(tuple(sorted(p[x] for x in b)) for b in D.blocks))
    return len(seen)


def test_enumerate_sts7(sts7_all):
    assert len(sts7_all) == _orbit_size(sts_construct(7)) == 30
    assert len({D.key() for D in sts7_all}) == 30
    for D in sts7_all:
        assert set(t_coverage(D.blocks, 2).values()) == {1}


def test_enumerate_sts9(sts9_all):
    # all STS(9) are isomorphic, so they form one orbit
    assert len(sts9_all) == _orbit_size(sts_construct(9)) == 840
    assert len({D.key() for D in sts9_all}) == 840


def test_enumerate_small_cases():
    matchings = enumerate_designs(1, 4, 2)
    assert sorted(set(D.blocks) for D in matchings) == sorted(
        [{(0, 1), (2, 3)}, {(0, 2), (1, 3)}, {(1, 2), (0, 3)}]
    )
    assert enumerate_designs(2, 8, 3) == []


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_designs(2, 9, 3, node_budget=5)


def test_max_clique_small_graphs():
    # 5-cycle: largest clique is an edge
    adj = [0] * 5
    for x in range(5):
        y = (x + 1) % 5
        adj[x] |= 1 << y
        adj[y] |= 1 << x
    clique, _ = max_clique(adj)
    assert len(clique) == 2
    full = [((1 << 6) - 1) & ~(1 << x) for x in range(6)]
    assert max_clique(full)[0] == list(range(6))
    assert max_clique([])[0] == []


def test_max_clique_matches_brute_force():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 10)
        adj = [0] * n
        edges = set()
        for x, y in combinations(range(n), 2):
            if rng.random() < 0.5:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
                edges.add((x, y))
        best = max(
            (len(S) for r in range(n + 1) for S in combinations(range(n), r)
             if all(p in edges for p in combinations(S, 2))),
        )
        assert len(max_clique(adj)[0]) == best


def test_disjoint_sts7(sts7_all):
    res = max_disjoint_family(sts7_all)
    assert res.size == 2
    sets = [set(D.blocks) for D in sts7_all]
    assert not any(
        not (sets[x] & sets[y]) and not (sets[x] & sets[z]) and not (sets[y] & sets[z])
        for x, y, z in combinations(range(30), 3)
    )
    x, y = res.indices
    assert not sets[x] & sets[y]


def test_disjoint_sts9(sts9_large_set):
    assert len(sts9_large_set) == 7
    blocks = [b for D in sts9_large_set for b in D.blocks]
    assert len(blocks) == len(set(blocks)) == 84


def test_disjoint_rejects_mixed():
    with pytest.raises(ValueError):
        max_disjoint_family([sts_construct(7), sts_construct(9)])
    assert max_disjoint_family([]).size == 0


def _min_partition_classes(deal):
    hands = k_subsets(deal.n, deal.a)
    need = deal.a - deal.c
    best = None
    for part in set_partitions(hands):
        if best is not None and len(part) >= best:
            continue
        if all(len(set(x) & set(y)) < need for cl in part for x, y in combinations(cl, 2)):
            best = len(part)
    return best


def test_min_m_211_matches_partition_oracle():
    deal = DealSpec(2, 1, 1)
    res = min_informative_m(deal, 5)
    assert res.m == _min_partition_classes(deal) == 3
    assert is_informative(res.strategy)
    assert res.exhausted == {}


def test_min_m_331(sts7_all):
    res = min_informative_m(DealSpec(3, 3, 1), 7)
    assert res.m == 6
    assert 5 in res.exhausted and res.lower_bound == 5
    assert is_informative(res.strategy) and res.strategy.m == 6
    # a 5-coloring would split the 35 triples into five disjoint STS(7)
    assert max_disjoint_family(sts7_all).size < 5


def test_min_m_not_found():
    res = min_informative_m(DealSpec(3, 3, 1), 5)
    assert not res.found and res.strategy is None
    with pytest.raises(PreconditionError):
        min_informative_m(DealSpec(1, 2, 1), 3)


def test_conflict_graph():
    hands, adj = conflict_graph(DealSpec(3, 3, 1))
    assert len(hands) == 35
    for x, y in combinations(range(35), 2):
        conflict = len(set(hands[x]) & set(hands[y])) >= 2
        assert bool(adj[x] >> y & 1) == conflict


def test_greedy_completion():
    deal = DealSpec(3, 3, 1)
    first = list(sts_construct(7).blocks)
    S = greedy_completion(deal, [first])
    assert S.announcements[0] == tuple(first)
    assert is_informative(S)
    assert equitability(S) == 1
    assert S.m >= lower_bound_m(deal)
    again = greedy_completion(deal, [first])
    assert again.announcements == S.announcements
    assert design_check(S, 2)[0] != 0


def test_greedy_completion_random_partition_agrees():
    rng = random.Random(11)
    classes = random_informative_partition(rng, 3, 3, 1)
    S = greedy_completion(DealSpec(3, 3, 1), classes)
    assert S.m == len(classes)
    assert is_informative(S)


def test_design_check(fig1, fig2):
    assert design_check(fig2, 2) == []
    expected = [i for i, ann in enumerate(fig1.announcements)
                if set(t_coverage(ann, 2).values()) != {1} or len(t_coverage(ann, 2)) != 21]
    assert design_check(fig1, 2) == expected == [2, 3, 4, 5]


def test_disjoint_single_design():
    res = max_disjoint_family([sts_construct(9)])
    assert res.size == 1 and res.indices == (0,)
