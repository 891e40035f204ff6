"""Exhaustive backtracking searches over subsets, designs and colorings.

All searches are deterministic: branching always picks the lowest-rank open
item and tries candidates in rank order, so repeated runs return identical
results.  Each search counts nodes and raises :class:`BudgetExceeded` rather
than giving up silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import BudgetExceeded, DealSpec, Hand, Strategy, binomial, budget, k_subsets, subset_rank, to_mask
from .designs import Design, design_lambda
from .verify import PreconditionError, lower_bound_m


class _Nodes:
    def __init__(self, limit: int | None):
        self.limit = budget() if limit is None else limit
        self.count = 0

    def tick(self):
        self.count += 1
        if self.count > self.limit:
            raise BudgetExceeded(f"search exceeded its node budget of {self.limit}")


# -- design enumeration ------------------------------------------------------


def _designs_through_first_block(t: int, v: int, k: int, nodes: _Nodes) -> list[tuple[Hand, ...]]:
    tsubs = k_subsets(v, t)
    tindex = {s: r for r, s in enumerate(tsubs)}
    blocks = k_subsets(v, k)
    cover = [sum(1 << tindex[s] for s in combinations(b, t)) for b in blocks]
    by_tsub: list[list[int]] = [[] for _ in tsubs]
    for j, b in enumerate(blocks):
        for s in combinations(b, t):
            by_tsub[tindex[s]].append(j)
    full = (1 << len(tsubs)) - 1

    found = []
    chosen: list[int] = []

    def extend(covered: int):
        nodes.tick()
        if covered == full:
            found.append(tuple(blocks[j] for j in chosen))
            return
        low = (~covered & (covered + 1)).bit_length() - 1
        for j in by_tsub[low]:
            if not cover[j] & covered:
                chosen.append(j)
                extend(covered | cover[j])
                chosen.pop()

    first = tuple(range(k))
    j0 = blocks.index(first)
    chosen.append(j0)
    extend(cover[j0])
    return found


def enumerate_designs(t: int, v: int, k: int, node_budget: int | None = None) -> list[Design]:
    """Every t-(v,k,1) design on ``range(v)``, labeled, in canonical order.

    The search fixes the block through ``{0..t-1}`` to ``{0..k-1}``; each
    other choice of that block is recovered by a relabeling that fixes
    ``0..t-1``, so the output lists every labeled design exactly once.
    """
    if not 1 <= t <= k < v:
        raise ValueError(f"need 1 <= t <= k < v, got t={t}, k={k}, v={v}")
    if binomial(v, k) > budget():
        raise BudgetExceeded(f"C({v},{k}) blocks exceeds budget")
    nodes = _Nodes(node_budget)
    base = _designs_through_first_block(t, v, k, nodes)

    out = []
    head = list(range(t))
    for B in k_subsets(v, k):
        if tuple(B[:t]) != tuple(head):
            continue
        tail = list(B[t:])
        rest_src = list(range(k, v))
        rest_dst = [x for x in range(t, v) if x not in tail]
        perm = list(range(v))
        for src, dst in zip(range(t, k), tail):
            perm[src] = dst
        for src, dst in zip(rest_src, rest_dst):
            perm[src] = dst
        for blocks in base:
            out.append(Design(v, k, tuple(tuple(perm[x] for x in b) for b in blocks)))
    out.sort(key=Design.key)
    return out


# -- maximum disjoint family ------------------------------------------------


@dataclass(frozen=True)
class DisjointFamily:
    size: int
    family: tuple[Design, ...]
    indices: tuple[int, ...]
    upper_bound: int
    nodes: int


def _greedy_color_order(P: int, adj: list[int]) -> tuple[list[int], list[int]]:
    order, bounds = [], []
    color = 0
    Q = P
    while Q:
        color += 1
        avail = Q
        while avail:
            low = avail & -avail
            x = low.bit_length() - 1
            avail &= ~low & ~adj[x]
            Q &= ~low
            order.append(x)
            bounds.append(color)
    return order, bounds


def max_clique(adj: list[int], cap: int | None = None, node_budget: int | None = None) -> tuple[list[int], int]:
    """Maximum clique of the graph given by adjacency bitmasks.

    Branch and bound with greedy-coloring bounds.  ``cap`` is a known upper
    bound; the search stops as soon as a clique of that size is found.
    Returns ``(clique, nodes)``.
    """
    nodes = _Nodes(node_budget)
    n = len(adj)
    best: list[int] = []
    limit = n if cap is None else min(cap, n)

    class _Done(Exception):
        pass

    def expand(R: list[int], P: int):
        nonlocal best
        nodes.tick()
        order, bounds = _greedy_color_order(P, adj)
        for idx in range(len(order) - 1, -1, -1):
            if len(R) + bounds[idx] <= len(best):
                return
            x = order[idx]
            R.append(x)
            NP = P & adj[x]
            if NP:
                expand(R, NP)
            elif len(R) > len(best):
                best = sorted(R)
                if len(best) >= limit:
                    raise _Done
            R.pop()
            P &= ~(1 << x)

    if n:
        try:
            expand([], (1 << n) - 1)
        except _Done:
            pass
    return best, nodes.count


def max_disjoint_family(F: list[Design], node_budget: int | None = None) -> DisjointFamily:
    """A largest subfamily of ``F`` with pairwise disjoint block sets (exact)."""
    if not F:
        return DisjointFamily(0, (), (), 0, 0)
    vk = {(D.v, D.k) for D in F}
    if len(vk) != 1:
        raise ValueError(f"designs disagree on (v, k): {sorted(vk)}")
    v, k = next(iter(vk))
    masks = [sum(1 << subset_rank(b) for b in D.blocks) for D in F]
    adj = [0] * len(F)
    for x in range(len(F)):
        for y in range(x + 1, len(F)):
            if not masks[x] & masks[y]:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
    # disjoint families use at most C(v,k) blocks in total
    room, cap = binomial(v, k), 0
    for size in sorted(len(D) for D in F):
        if size > room:
            break
        room -= size
        cap += 1
    clique, count = max_clique(adj, cap, node_budget)
    return DisjointFamily(len(clique), tuple(F[x] for x in clique), tuple(clique), cap, count)


# -- minimum number of announcements ----------------------------------------


@dataclass
class MinMResult:
    deal: DealSpec
    m: int | None
    strategy: Strategy | None
    lower_bound: int
    exhausted: dict[int, int] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.m is not None


def conflict_graph(deal: DealSpec) -> tuple[list[Hand], list[int]]:
    """a-subsets in colex order; two conflict when they share >= a-c cards."""
    hands = k_subsets(deal.n, deal.a)
    masks = [to_mask(h) for h in hands]
    need = deal.a - deal.c
    adj = [0] * len(hands)
    for x in range(len(hands)):
        for y in range(x + 1, len(hands)):
            if (masks[x] & masks[y]).bit_count() >= need:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
    return hands, adj


def color_with(adj: list[int], k: int, nodes: _Nodes) -> list[int] | None:
    """Exact k-coloring by DSATUR-ordered backtracking, or ``None``."""
    n = len(adj)
    colors = [-1] * n
    classes = [0] * k
    uncolored = (1 << n) - 1

    def pick() -> int:
        best, best_key = -1, None
        rest = uncolored
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            rest ^= low
            sat = sum(1 for c in range(k) if classes[c] & adj[x])
            key = (sat, (adj[x] & uncolored).bit_count(), -x)
            if best_key is None or key > best_key:
                best, best_key = x, key
        return best

    def solve(used: int) -> bool:
        nonlocal uncolored
        nodes.tick()
        if not uncolored:
            return True
        x = pick()
        bit = 1 << x
        for c in range(min(used + 1, k)):
            if classes[c] & adj[x]:
                continue
            colors[x] = c
            classes[c] |= bit
            uncolored &= ~bit
            if solve(max(used, c + 1)):
                return True
            classes[c] &= ~bit
            uncolored |= bit
            colors[x] = -1
        return False

    return list(colors) if solve(0) else None


def min_informative_m(deal: DealSpec, m_max: int, node_budget: int | None = None) -> MinMResult:
    """Fewest announcements of an informative strategy, found by exact coloring.

    Announcements are color classes of the conflict graph; values below the
    returned ``m`` are each refuted by an exhausted search recorded in
    ``exhausted`` (value -> nodes).
    """
    if deal.a <= deal.c:
        raise PreconditionError(f"deal {deal}: a <= c, no informative strategy exists")
    lb = lower_bound_m(deal)
    hands, adj = conflict_graph(deal)
    result = MinMResult(deal, None, None, lb)
    for m in range(lb, m_max + 1):
        nodes = _Nodes(node_budget)
        colors = color_with(adj, m, nodes)
        if colors is None:
            result.exhausted[m] = nodes.count
            continue
        classes = [[hands[x] for x in range(len(hands)) if colors[x] == c] for c in range(m)]
        classes.sort(key=lambda cl: subset_rank(cl[0]))
        result.m = m
        result.strategy = Strategy.build(deal, classes)
        return result
    return result


def greedy_completion(deal: DealSpec, announcements: list[list[Hand]]) -> Strategy:
    """Deterministic strategy keeping ``announcements`` and packing the remaining
    a-subsets first-fit, in colex order, into new conflict-free announcements."""
    taken = {tuple(sorted(h)) for ann in announcements for h in ann}
    need = deal.a - deal.c
    extra: list[tuple[list[Hand], list[int]]] = []
    for h in k_subsets(deal.n, deal.a):
        if h in taken:
            continue
        hm = to_mask(h)
        for hands, masks in extra:
            if all((hm & m).bit_count() < need for m in masks):
                hands.append(h)
                masks.append(hm)
                break
        else:
            extra.append(([h], [hm]))
    return Strategy.build(deal, list(announcements) + [hands for hands, _ in extra])


def design_check(S: Strategy, t: int) -> list[int]:
    """Indices of announcements that are not t-(n,a,1) designs."""
    bad = []
    for i, ann in enumerate(S.announcements):
        if design_lambda(Design(S.deal.n, S.deal.a, ann), t) != 1:
            bad.append(i)
    return bad
