"""Deck, hand and strategy types plus canonical subset enumeration.

Cards are the integers ``0..n-1``.  A hand is a sorted tuple of distinct
cards.  Every ordering of subsets in this package is colexicographic: the
combinatorial number system gives each k-subset ``{c_1 < ... < c_k}`` the
rank ``sum(C(c_i, i))``, and ``k_subsets`` lists subsets by that rank.

All probabilities are :class:`fractions.Fraction`; nothing in the package
falls back to floating point when deciding a property.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Rational = Fraction
Hand = tuple[int, ...]

DEFAULT_BUDGET = 10**8


class StrategyError(ValueError):
    """Raised when a strategy violates one of its structural invariants."""


class BudgetExceeded(RuntimeError):
    """Raised when an operation would exceed its enumeration budget."""


def budget() -> int:
    """Node/enumeration budget, overridable through ``RCARDS_BUDGET``."""
    raw = os.environ.get("RCARDS_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"RCARDS_BUDGET must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError("RCARDS_BUDGET must be positive")
    return value


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def k_subsets(n: int, k: int) -> list[Hand]:
    """All k-subsets of ``range(n)`` in colex order."""
    if k < 0 or k > n:
        return []
    return sorted(combinations(range(n), k), key=lambda h: h[::-1])


def subset_rank(h: Sequence[int], n: int | None = None) -> int:
    """Colex rank of ``h`` among subsets of the same size."""
    cards = sorted(h)
    if n is not None and cards and (cards[0] < 0 or cards[-1] >= n):
        raise ValueError(f"hand {tuple(cards)} not within [0, {n})")
    return sum(math.comb(c, i + 1) for i, c in enumerate(cards))


def subset_unrank(r: int, n: int, k: int) -> Hand:
    """Inverse of :func:`subset_rank` for k-subsets of ``range(n)``."""
    total = binomial(n, k)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range for {k}-subsets of {n} (total {total})")
    out = []
    x = n
    for i in range(k, 0, -1):
        x -= 1
        while math.comb(x, i) > r:
            x -= 1
        out.append(x)
        r -= math.comb(x, i)
    return tuple(reversed(out))


def make_hand(cards: Iterable[int], n: int | None = None) -> Hand:
    """Normalize ``cards`` into a sorted hand, rejecting duplicates."""
    lst = list(cards)
    h = tuple(sorted(lst))
    if len(set(h)) != len(h):
        raise ValueError(f"duplicate card in {tuple(lst)}")
    if h and h[0] < 0:
        raise ValueError(f"negative card in {h}")
    if n is not None and h and h[-1] >= n:
        raise ValueError(f"card {h[-1]} outside deck of size {n}")
    return h


def to_mask(h: Iterable[int]) -> int:
    m = 0
    for x in h:
        m |= 1 << x
    return m


def from_mask(m: int) -> Hand:
    out = []
    x = 0
    while m:
        if m & 1:
            out.append(x)
        m >>= 1
        x += 1
    return tuple(out)


def hand_key(h: Hand) -> tuple[int, int]:
    """Sort key placing hands by size, then colex rank."""
    return (len(h), subset_rank(h))


def fmt_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def fmt_hand(h: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in h) + "}"


@dataclass(frozen=True)
class DealSpec:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"deal parameter {name} must be a positive integer, got {v!r}")

    @property
    def n(self) -> int:
        return self.a + self.b + self.c

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"

    @classmethod
    def parse(cls, text: str) -> "DealSpec":
        parts = text.replace(",", " ").split()
        if len(parts) != 3:
            raise ValueError(f"deal must be three integers a,b,c; got {text!r}")
        return cls(*(int(p) for p in parts))


Announcement = tuple[Hand, ...]


def make_announcement(hands: Iterable[Iterable[int]], a: int, n: int) -> Announcement:
    """Validate and canonicalize an announcement (hands sorted by colex rank)."""
    out = []
    seen = set()
    for raw in hands:
        h = make_hand(raw, n)
        if len(h) != a:
            raise StrategyError(f"hand {fmt_hand(h)} has {len(h)} cards, expected {a}")
        if h in seen:
            raise StrategyError(f"duplicate hand {fmt_hand(h)}")
        seen.add(h)
        out.append(h)
    if not out:
        raise StrategyError("announcement is empty")
    out.sort(key=subset_rank)
    return tuple(out)


@dataclass(frozen=True)
class Strategy:
    """Announcements ``A_0..A_{m-1}`` with a distribution for every a-subset.

    ``distributions[h]`` lists ``(announcement index, probability)`` pairs in
    increasing index order.  Indices are 0-based here; files and the command
    line number announcements from 1.
    """

    deal: DealSpec
    announcements: tuple[Announcement, ...]
    distributions: Mapping[Hand, tuple[tuple[int, Fraction], ...]] = field(repr=False)

    @classmethod
    def build(
        cls,
        deal: DealSpec,
        announcements: Iterable[Iterable[Iterable[int]]],
        probabilities: Mapping[Hand, Mapping[int, Fraction]] | None = None,
    ) -> "Strategy":
        """Validate announcements and attach distributions.

        Hands missing from ``probabilities`` get the uniform distribution over
        the announcements containing them.
        """
        n = deal.n
        anns = []
        for i, hands in enumerate(announcements):
            try:
                anns.append(make_announcement(hands, deal.a, n))
            except (StrategyError, ValueError) as exc:
                raise StrategyError(f"announcement {i}: {exc}") from None
        if not anns:
            raise StrategyError("strategy has no announcements")

        membership: dict[Hand, list[int]] = {}
        for i, ann in enumerate(anns):
            for h in ann:
                membership.setdefault(h, []).append(i)

        probabilities = dict(probabilities or {})
        for h in probabilities:
            if h not in membership:
                raise StrategyError(f"probabilities given for hand {fmt_hand(h)} which occurs in no announcement")

        dists = {}
        for h in k_subsets(n, deal.a):
            g = membership.get(h)
            if not g:
                raise StrategyError(f"hand {fmt_hand(h)} occurs in no announcement")
            given = probabilities.get(h)
            if given is None:
                p = Fraction(1, len(g))
                dists[h] = tuple((i, p) for i in g)
                continue
            support = sorted(i for i, q in given.items())
            if support != g:
                raise StrategyError(
                    f"hand {fmt_hand(h)}: distribution support {support} differs from "
                    f"announcements containing it {g}"
                )
            pairs = tuple((i, Fraction(given[i])) for i in g)
            for i, q in pairs:
                if q <= 0:
                    raise StrategyError(f"hand {fmt_hand(h)}: probability for announcement {i} is {q}, must be > 0")
            total = sum(q for _, q in pairs)
            if total != 1:
                raise StrategyError(f"hand {fmt_hand(h)}: probabilities sum to {fmt_rational(total)}, not 1")
            dists[h] = pairs
        return cls(deal, tuple(anns), dists)

    @property
    def m(self) -> int:
        return len(self.announcements)

    def g(self, h: Hand) -> tuple[int, ...]:
        """Indices of the announcements containing ``h``."""
        return tuple(i for i, _ in self.distributions[h])

    def prob(self, h: Hand, i: int) -> Fraction:
        """``p_h(i)``; zero when ``h`` is not in announcement ``i``."""
        for j, q in self.distributions[h]:
            if j == i:
                return q
        return Fraction(0)

    def is_uniform(self) -> bool:
        return all(all(q == Fraction(1, len(d)) for _, q in d) for d in self.distributions.values())

    def weighted(self, i: int) -> list[tuple[Hand, Fraction]]:
        return [(h, self.prob(h, i)) for h in self.announcements[i]]
