"""Brute-force reference computations, independent of the package's algorithms."""

import random
from collections import Counter
from fractions import Fraction
from itertools import combinations


def pascal(n, k):
    row = [1]
    for _ in range(n):
        row = [1] + [row[j] + row[j + 1] for j in range(len(row) - 1)] + [1]
    return row[k] if 0 <= k <= n else 0


def bayes_subset_prob(announcements, dist, a, b, c, i, cathy, subset):
    """Prob[subset in H_A | i, H_C] by summing over every full deal.

    ``dist[h][i]`` is Alice's probability of announcing i holding h.
    """
    n = a + b + c
    deck = set(range(n))
    num = den = Fraction(0)
    for ha in combinations(range(n), a):
        for hc in combinations(sorted(deck - set(ha)), c):
            if set(hc) != set(cathy):
                continue
            hb = deck - set(ha) - set(hc)
            assert len(hb) == b
            p = dist[ha].get(i, Fraction(0))
            if ha not in announcements[i]:
                assert p == 0
                continue
            den += p
            if set(subset) <= set(ha):
                num += p
    return None if den == 0 else num / den


def bayes_hand_prob(announcements, dist, a, b, c, i, cathy, alice):
    n = a + b + c
    num = den = Fraction(0)
    for ha in combinations(range(n), a):
        if set(ha) & set(cathy) or ha not in announcements[i]:
            continue
        p = dist[ha][i]
        den += p
        if ha == tuple(alice):
            num += p
    return num / den


def t_coverage(blocks, t):
    return Counter(s for b in blocks for s in combinations(sorted(b), t))


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for j in range(len(part)):
            yield part[:j] + [[first] + part[j]] + part[j + 1:]
        yield [[first]] + part


def random_strategy(rng: random.Random, a, b, c, m, gamma=None, biased=False):
    """Announcements (as sorted tuples of hands) plus a probability table.

    With ``gamma`` every hand lands in exactly gamma announcements, otherwise
    in a random nonempty set of them.  Empty announcements are dropped.
    """
    n = a + b + c
    hands = list(combinations(range(n), a))
    anns = [[] for _ in range(m)]
    member = {}
    for h in hands:
        k = gamma if gamma is not None else rng.randint(1, m)
        g = sorted(rng.sample(range(m), k))
        member[h] = g
        for i in g:
            anns[i].append(h)
    keep = [i for i in range(m) if anns[i]]
    remap = {old: new for new, old in enumerate(keep)}
    anns = [anns[i] for i in keep]
    dist = {}
    for h, g in member.items():
        g = [remap[i] for i in g]
        if biased:
            w = [rng.randint(1, 5) for _ in g]
            dist[h] = {i: Fraction(x, sum(w)) for i, x in zip(g, w)}
        else:
            dist[h] = {i: Fraction(1, len(g)) for i in g}
    return anns, dist


def random_informative_partition(rng: random.Random, a, b, c):
    """Shuffle the a-subsets and pack them first-fit into conflict-free classes."""
    n = a + b + c
    hands = list(combinations(range(n), a))
    rng.shuffle(hands)
    classes = []
    for h in hands:
        for cl in classes:
            if all(len(set(h) & set(x)) < a - c for x in cl):
                cl.append(h)
                break
        else:
            classes.append([h])
    return classes
