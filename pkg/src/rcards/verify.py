"""Exact decision procedures for informativeness, equitability and security.

Security is checked over every announcement ``i``, every Cathy hand ``H_C``
with a nonempty set of possible Alice hands, and every subset ``T`` of the
unseen cards with ``1 <= |T| <= delta``.  Counterexamples are reported in the
order (announcement index, colex rank of ``H_C``, ``|T|``, colex rank of
``T``), so the first witness is reproducible.

Two routes decide each security notion:

* ``"definition"`` computes ``Prob[T subset of H_A | i, H_C]`` as an exact
  posterior, weighting each possible hand by ``p_{H_A}(i)``;
* ``"counting"`` applies the block-count criteria that are equivalent for
  equitable strategies.

``"auto"`` picks counting when the strategy is equitable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .core import (
    Announcement,
    BudgetExceeded,
    DealSpec,
    Hand,
    Strategy,
    binomial,
    budget,
    fmt_hand,
    fmt_rational,
    k_subsets,
    make_hand,
    to_mask,
)


class PreconditionError(ValueError):
    """An operation was called on input outside its precondition."""


@dataclass(frozen=True)
class Witness:
    announcement: int
    cathy: Hand
    subset: Hand
    probability: Fraction

    def __str__(self):
        return (
            f"announcement {self.announcement + 1}, Cathy holds {fmt_hand(self.cathy)}, "
            f"Prob[{fmt_hand(self.subset)} held by Alice] = {fmt_rational(self.probability)}"
        )


@dataclass(frozen=True)
class SecurityVerdict:
    holds: bool
    witness: Witness | None = None
    kind: str = ""
    delta: int = 1
    method: str = ""

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("a witness is present exactly when the property fails")

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class InformativeVerdict:
    holds: bool
    announcement: int | None = None
    bob: Hand | None = None
    pair: tuple[Hand, Hand] | None = None
    reason: str = ""

    def __bool__(self):
        return self.holds

    def __str__(self):
        if self.holds:
            return "informative"
        if self.pair is None:
            return f"not informative: {self.reason}"
        h1, h2 = self.pair
        return (
            f"not informative: announcement {self.announcement + 1} contains {fmt_hand(h1)} and "
            f"{fmt_hand(h2)}, both disjoint from Bob hand {fmt_hand(self.bob)}"
        )


def possible_hands(announcement: Sequence[Hand], h: Sequence[int]) -> tuple[Hand, ...]:
    """Hands of the announcement disjoint from ``h``."""
    hm = to_mask(h)
    return tuple(x for x in announcement if not to_mask(x) & hm)


# -- informativeness ---------------------------------------------------------


def _conflict(announcement: Announcement, threshold: int) -> tuple[Hand, Hand] | None:
    masks = [to_mask(h) for h in announcement]
    for x in range(len(masks)):
        mx = masks[x]
        for y in range(x + 1, len(masks)):
            if (mx & masks[y]).bit_count() >= threshold:
                return announcement[x], announcement[y]
    return None


def is_informative(S: Strategy, method: str = "pairwise") -> InformativeVerdict:
    """Whether Bob always learns Alice's hand.

    ``"pairwise"`` looks for two hands of one announcement sharing at least
    ``a - c`` cards; ``"definition"`` enumerates every Bob hand and counts the
    hands disjoint from it.
    """
    deal = S.deal
    a, b, c, n = deal.a, deal.b, deal.c, deal.n
    if a <= c:
        return InformativeVerdict(False, reason="a <= c: no strategy is informative for Bob")
    if method == "pairwise":
        for i, ann in enumerate(S.announcements):
            pair = _conflict(ann, a - c)
            if pair is not None:
                used = to_mask(pair[0]) | to_mask(pair[1])
                bob = tuple(x for x in range(n) if not used >> x & 1)[:b]
                return InformativeVerdict(False, i, bob, pair, "two hands share at least a-c cards")
        return InformativeVerdict(True)
    if method == "definition":
        bobs = k_subsets(n, b)
        if len(bobs) * S.m > budget():
            raise BudgetExceeded(f"{len(bobs)} Bob hands x {S.m} announcements exceeds budget")
        for i, ann in enumerate(S.announcements):
            for hb in bobs:
                p = possible_hands(ann, hb)
                if len(p) >= 2:
                    return InformativeVerdict(False, i, hb, (p[0], p[1]), "|P(H_B,i)| >= 2")
        return InformativeVerdict(True)
    raise ValueError(f"unknown method {method!r}")


def lower_bound_m(deal: DealSpec) -> int:
    """Fewest announcements any informative strategy can use."""
    if deal.a <= deal.c:
        raise PreconditionError(f"deal {deal}: a <= c, no informative strategy exists")
    return binomial(deal.n - deal.a + deal.c, deal.c)


def is_optimal(S: Strategy) -> bool:
    verdict = is_informative(S)
    if not verdict:
        raise PreconditionError(f"optimality is defined for informative strategies only ({verdict})")
    return S.m == lower_bound_m(S.deal)


def equitability(S: Strategy) -> int | None:
    """``gamma`` if every hand lies in exactly gamma announcements and picks uniformly."""
    gammas = {len(d) for d in S.distributions.values()}
    if len(gammas) != 1:
        return None
    (gamma,) = gammas
    p = Fraction(1, gamma)
    if all(q == p for d in S.distributions.values() for _, q in d):
        return gamma
    return None


@dataclass(frozen=True)
class Complexity:
    m: int
    bits: float

    def __str__(self):
        return f"m={self.m}, log2 m ~ {self.bits:.6f} bits (approx.)"


def communication_complexity(S: Strategy) -> Complexity:
    return Complexity(S.m, math.log2(S.m))


# -- posteriors --------------------------------------------------------------


def _possible_weighted(S: Strategy, i: int, hc: Hand) -> list[tuple[Hand, Fraction]]:
    if not 0 <= i < S.m:
        raise PreconditionError(f"announcement index {i} out of range 0..{S.m - 1}")
    hm = to_mask(hc)
    return [(h, w) for h, w in S.weighted(i) if not to_mask(h) & hm]


def posterior_hand_prob(S: Strategy, i: int, cathy: Sequence[int], alice: Sequence[int]) -> Fraction:
    """``Prob[H_A | H_C, i]``, proportional to ``p_{H_A}(i)`` over the possible hands."""
    hc = make_hand(cathy, S.deal.n)
    ha = make_hand(alice, S.deal.n)
    pw = _possible_weighted(S, i, hc)
    if not pw:
        raise PreconditionError(f"no hand of announcement {i} is disjoint from {fmt_hand(hc)}")
    total = sum(w for _, w in pw)
    for h, w in pw:
        if h == ha:
            return w / total
    raise PreconditionError(f"{fmt_hand(ha)} is not a possible hand given announcement {i} and {fmt_hand(hc)}")


def prob_subset_held(S: Strategy, i: int, cathy: Sequence[int], subset: Sequence[int]) -> Fraction:
    """``Prob[T subset of H_A | i, H_C]``."""
    n, a = S.deal.n, S.deal.a
    hc = make_hand(cathy, n)
    t = make_hand(subset, n)
    if not 1 <= len(t) <= a:
        raise PreconditionError(f"subset size {len(t)} outside 1..{a}")
    if to_mask(t) & to_mask(hc):
        raise PreconditionError(f"subset {fmt_hand(t)} overlaps Cathy's hand {fmt_hand(hc)}")
    pw = _possible_weighted(S, i, hc)
    if not pw:
        raise PreconditionError(f"no hand of announcement {i} is disjoint from {fmt_hand(hc)}")
    tm = to_mask(t)
    total = sum(w for _, w in pw)
    held = sum(w for h, w in pw if to_mask(h) & tm == tm)
    return held / total


# -- security ----------------------------------------------------------------


def _check_budget(deal: DealSpec, delta: int) -> None:
    if not 1 <= delta <= deal.a:
        raise PreconditionError(f"delta must lie in 1..{deal.a}, got {delta}")
    work = binomial(deal.n, deal.c) * sum(binomial(deal.a + deal.b, s) for s in range(1, delta + 1))
    if work > budget():
        raise BudgetExceeded(f"security check needs ~{work} evaluations per announcement, budget is {budget()}")


def cathy_views(S: Strategy) -> Iterator[tuple[int, Hand, list[tuple[Hand, Fraction]]]]:
    """Yield ``(i, H_C, possible weighted hands)`` for every compatible pair, canonically ordered."""
    n, c = S.deal.n, S.deal.c
    cathy = [(hc, to_mask(hc)) for hc in k_subsets(n, c)]
    for i in range(S.m):
        members = [(h, to_mask(h), w) for h, w in S.weighted(i)]
        for hc, hm in cathy:
            pw = [(h, w) for h, mask, w in members if not mask & hm]
            if pw:
                yield i, hc, pw


def _tallies(pw, s):
    counts: dict[Hand, int] = {}
    weights: dict[Hand, Fraction] = {}
    for h, w in pw:
        for t in combinations(h, s):
            counts[t] = counts.get(t, 0) + 1
            weights[t] = weights.get(t, 0) + w
    return counts, weights


def _unseen_subsets(n: int, hc: Hand, s: int) -> list[Hand]:
    rest = [x for x in range(n) if x not in hc]
    return sorted(combinations(rest, s), key=lambda t: t[::-1])


def _resolve(S: Strategy, method: str) -> str:
    if method == "auto":
        return "counting" if equitability(S) is not None else "definition"
    if method == "counting" and equitability(S) is None:
        raise PreconditionError("the counting criteria apply to equitable strategies only")
    if method not in ("counting", "definition"):
        raise ValueError(f"unknown method {method!r}")
    return method


def weak_security_check(S: Strategy, delta: int = 1, method: str = "auto") -> SecurityVerdict:
    """Every unseen subset of at most ``delta`` cards has probability strictly in (0, 1)."""
    _check_budget(S.deal, delta)
    method = _resolve(S, method)
    n = S.deal.n
    for i, hc, pw in cathy_views(S):
        size = len(pw)
        total = sum(w for _, w in pw)
        for s in range(1, delta + 1):
            counts, weights = _tallies(pw, s)
            for t in _unseen_subsets(n, hc, s):
                if method == "counting":
                    r = counts.get(t, 0)
                    if not 1 <= r <= size - 1:
                        return SecurityVerdict(False, Witness(i, hc, t, Fraction(r, size)), "weak", delta, method)
                else:
                    p = weights.get(t, Fraction(0)) / total
                    if not 0 < p < 1:
                        return SecurityVerdict(False, Witness(i, hc, t, p), "weak", delta, method)
    return SecurityVerdict(True, None, "weak", delta, method)


def perfect_target(deal: DealSpec, s: int) -> Fraction:
    return Fraction(binomial(deal.a, s), binomial(deal.a + deal.b, s))


def perfect_security_check(S: Strategy, delta: int = 1, method: str = "auto") -> SecurityVerdict:
    """Every unseen subset of size ``s <= delta`` has probability ``C(a,s)/C(a+b,s)``.

    The counting route checks size ``delta`` only; a constant count at that
    size forces constant counts at every smaller size.
    """
    _check_budget(S.deal, delta)
    method = _resolve(S, method)
    deal = S.deal
    n = deal.n
    levels = [delta] if method == "counting" else range(1, delta + 1)
    for i, hc, pw in cathy_views(S):
        size = len(pw)
        total = sum(w for _, w in pw)
        for s in levels:
            counts, weights = _tallies(pw, s)
            target = perfect_target(deal, s)
            for t in _unseen_subsets(n, hc, s):
                if method == "counting":
                    r = counts.get(t, 0)
                    if r * binomial(deal.a + deal.b, s) != binomial(deal.a, s) * size:
                        return SecurityVerdict(False, Witness(i, hc, t, Fraction(r, size)), "perfect", delta, method)
                else:
                    p = weights.get(t, Fraction(0)) / total
                    if p != target:
                        return SecurityVerdict(False, Witness(i, hc, t, p), "perfect", delta, method)
    return SecurityVerdict(True, None, "perfect", delta, method)
