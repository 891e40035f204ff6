"""Block designs and their conversion into announcement strategies."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .core import DealSpec, Hand, Strategy, binomial, fmt_hand, k_subsets, make_hand, subset_rank


class DesignError(ValueError):
    pass


@dataclass(frozen=True)
class Design:
    """``v`` points, blocks of size ``k``; blocks are kept in colex order."""

    v: int
    k: int
    blocks: tuple[Hand, ...]
    simple: bool = True

    def __post_init__(self):
        if self.v < 1 or not 0 <= self.k <= self.v:
            raise DesignError(f"invalid design parameters v={self.v}, k={self.k}")
        norm = []
        for raw in self.blocks:
            try:
                b = make_hand(raw, self.v)
            except ValueError as exc:
                raise DesignError(f"bad block {tuple(raw)}: {exc}") from None
            if len(b) != self.k:
                raise DesignError(f"block {fmt_hand(b)} has size {len(b)}, expected {self.k}")
            norm.append(b)
        norm.sort(key=subset_rank)
        if self.simple and len(set(norm)) != len(norm):
            dup = next(b for b, c in Counter(norm).items() if c > 1)
            raise DesignError(f"repeated block {fmt_hand(dup)} in a simple design")
        object.__setattr__(self, "blocks", tuple(norm))

    @classmethod
    def of(cls, v: int, blocks: Iterable[Iterable[int]], simple: bool = True) -> "Design":
        blocks = [tuple(b) for b in blocks]
        if not blocks:
            raise DesignError("a design needs at least one block")
        return cls(v, len(blocks[0]), tuple(blocks), simple)

    def key(self) -> tuple[int, ...]:
        """Canonical form: sorted block ranks."""
        return tuple(subset_rank(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)


def design_lambda(D: Design, t: int) -> int | None:
    """The constant number of blocks through each t-subset, or ``None``."""
    if not 1 <= t <= D.k <= D.v:
        raise DesignError(f"need 1 <= t <= k <= v, got t={t}, k={D.k}, v={D.v}")
    counts = Counter(s for b in D.blocks for s in combinations(b, t))
    if len(counts) != binomial(D.v, t):
        return None
    values = set(counts.values())
    if len(values) != 1:
        return None
    (lam,) = values
    # every s-subset, s < t, must then lie in lam*C(v-s,t-s)/C(k-s,t-s) blocks
    for s in range(0, t):
        expected = Fraction(lam * binomial(D.v - s, t - s), binomial(D.k - s, t - s))
        if s == 0:
            if len(D.blocks) != expected:
                return None
            continue
        sub = Counter(x for b in D.blocks for x in combinations(b, s))
        if set(sub.values()) != {expected} or len(sub) != binomial(D.v, s):
            return None
    return lam


# -- Steiner triple systems --------------------------------------------------


def _bose(v: int) -> list[Hand]:
    # idempotent commutative quasigroup of odd order q: x o y = (x+y)(q+1)/2 mod q
    q = v // 3
    half = (q + 1) // 2

    def pt(x, i):
        return x + q * (i % 3)

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(q)]
    for x, y in combinations(range(q), 2):
        z = (x + y) * half % q
        for i in range(3):
            blocks.append((pt(x, i), pt(y, i), pt(z, i + 1)))
    return blocks


def _skolem(v: int) -> list[Hand]:
    # half-idempotent commutative quasigroup of order 2h
    h = (v - 1) // 6
    q = 2 * h
    inf = v - 1

    def op(x, y):
        s = (x + y) % q
        return s // 2 + (h if s % 2 else 0)

    def pt(x, i):
        return x + q * (i % 3)

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(h)]
    for x in range(h):
        for i in range(3):
            blocks.append((inf, pt(x + h, i), pt(x, i + 1)))
    for x, y in combinations(range(q), 2):
        for i in range(3):
            blocks.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return blocks


def sts_construct(v: int) -> Design:
    """A Steiner triple system of order ``v`` (Bose for v = 3 mod 6, Skolem for v = 1 mod 6)."""
    if v % 6 not in (1, 3) or v < 7:
        raise DesignError(f"no STS({v}): a Steiner triple system of order v >= 7 exists iff v = 1 or 3 (mod 6)")
    blocks = _bose(v) if v % 6 == 3 else _skolem(v)
    D = Design(v, 3, tuple(tuple(b) for b in blocks))
    if len(D) != v * (v - 1) // 6 or design_lambda(D, 2) != 1:
        raise AssertionError(f"STS({v}) construction failed validation")
    return D


def cyclic_design(base_blocks: Sequence[Iterable[int]], v: int) -> Design:
    """All distinct translates ``B + j (mod v)`` of the base blocks."""
    bases = [make_hand(b, v) for b in base_blocks]
    if not bases:
        raise DesignError("need at least one base block")
    k = len(bases[0])
    seen = set()
    for b in bases:
        if len(b) != k:
            raise DesignError("base blocks must share one size")
        for j in range(v):
            seen.add(tuple(sorted((x + j) % v for x in b)))
    return Design(v, k, tuple(seen))


# -- large sets and strategies ----------------------------------------------


def _common_vk(F: Sequence[Design]) -> tuple[int, int]:
    if not F:
        raise DesignError("empty design family")
    vk = {(D.v, D.k) for D in F}
    if len(vk) != 1:
        raise DesignError(f"designs disagree on (v, k): {sorted(vk)}")
    return next(iter(vk))


def verify_large_set(F: Sequence[Design], t: int) -> bool:
    """Whether ``F`` partitions all k-subsets into ``C(v-t, k-t)`` t-(v,k,1) designs."""
    v, k = _common_vk(F)
    if len(F) != binomial(v - t, k - t):
        return False
    if any(design_lambda(D, t) != 1 for D in F):
        return False
    counts = Counter(b for D in F for b in D.blocks)
    return len(counts) == binomial(v, k) and set(counts.values()) == {1}


def strategy_from_designs(F: Sequence[Design], deal: DealSpec, gamma: int = 1) -> Strategy:
    """Equitable strategy whose announcements are the block sets of ``F``."""
    v, k = _common_vk(F)
    if v != deal.n or k != deal.a:
        raise DesignError(f"designs are on (v={v}, k={k}) but deal {deal} needs (v={deal.n}, k={deal.a})")
    counts = Counter(b for D in F for b in D.blocks)
    for h in k_subsets(v, k):
        if counts.get(h, 0) != gamma:
            raise DesignError(f"{k}-subset {fmt_hand(h)} occurs in {counts.get(h, 0)} designs, expected {gamma}")
    return Strategy.build(deal, [D.blocks for D in F])


def designs_of_strategy(S: Strategy) -> list[Design]:
    return [Design(S.deal.n, S.deal.a, ann) for ann in S.announcements]


# -- orbits ------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitResult:
    strategy: Strategy
    designs: tuple[Design, ...]
    m: int
    gamma: int
    aut_order: int
    t: int

    @property
    def literal_gamma(self) -> int:
        """``n!/|Aut(D)|`` read literally as the replication number."""
        return math.factorial(self.designs[0].v) // self.aut_order

    @property
    def literal_m(self) -> int:
        return self.literal_gamma * (self.designs[0].v - self.t)

    @property
    def identity_holds(self) -> bool:
        return self.m == self.gamma * (self.designs[0].v - self.t)

    def discrepancy(self) -> str | None:
        if (self.literal_gamma, self.literal_m) == (self.gamma, self.m):
            return None
        return (
            f"orbit has m={self.m} distinct designs with per-block replication gamma={self.gamma}; "
            f"reading gamma as n!/|Aut| gives gamma={self.literal_gamma}, m={self.literal_m}"
        )


def orbit_strategy(D: Design, allow_large: bool = False) -> OrbitResult:
    """Strategy from all distinct images of ``D`` under the symmetric group."""
    n, a = D.v, D.k
    t = a - 1
    if t < 1 or design_lambda(D, t) != 1:
        raise DesignError(f"input must be a {t}-({n},{a},1) design")
    if n > 8 and not allow_large:
        raise DesignError(f"orbit sweep over {n}! permutations refused; pass allow_large=True")
    seen: dict[frozenset, None] = {}
    for p in permutations(range(n)):
        img = frozenset(sum(1 << p[x] for x in b) for b in D.blocks)
        if img not in seen:
            seen[img] = None
    designs = []
    for img in seen:
        blocks = tuple(tuple(x for x in range(n) if m >> x & 1) for m in img)
        designs.append(Design(n, a, blocks))
    designs.sort(key=Design.key)
    counts = Counter(b for E in designs for b in E.blocks)
    reps = set(counts.values())
    if len(reps) != 1 or len(counts) != binomial(n, a):
        raise AssertionError("orbit replication is not constant")
    (gamma,) = reps
    m = len(designs)
    if m != gamma * (n - t):
        raise AssertionError(f"orbit count m={m} differs from gamma*(n-t)={gamma * (n - t)}")
    aut = math.factorial(n) // m
    deal = DealSpec(a, n - a - 1, 1)
    S = strategy_from_designs(designs, deal, gamma)
    return OrbitResult(S, tuple(designs), m, gamma, aut, t)


EXAMPLE4_BASE = (
    (3, 4, 5, 6), (2, 5, 6, 7), (2, 3, 4, 7), (1, 4, 5, 7), (1, 3, 6, 7), (1, 2, 4, 6), (1, 2, 3, 5),
    (0, 4, 6, 7), (0, 3, 5, 7), (0, 2, 4, 5), (0, 2, 3, 6), (0, 1, 5, 6), (0, 1, 3, 4), (0, 1, 2, 7),
)

# (0,1)(2)(3,4,6,7,5)
EXAMPLE4_PERMUTATION = (1, 0, 2, 4, 6, 3, 7, 5)


def example4_base() -> Design:
    return Design(8, 4, EXAMPLE4_BASE)


def apply_permutation(D: Design, perm: Sequence[int]) -> Design:
    return Design(D.v, D.k, tuple(tuple(perm[x] for x in b) for b in D.blocks), D.simple)


def example4_family() -> list[Design]:
    """The ten images of the base 3-(8,4,1) design under powers of the permutation."""
    out = []
    D = example4_base()
    for _ in range(10):
        out.append(D)
        D = apply_permutation(D, EXAMPLE4_PERMUTATION)
    return out


# -- neighborhoods -----------------------------------------------------------


def block_neighborhood(announcement: Sequence[Hand], T: Iterable[int]) -> tuple[tuple[Hand, ...], Hand]:
    """Blocks containing ``T`` and the other points those blocks cover."""
    t = set(T)
    if not t:
        raise ValueError("T must be nonempty")
    blocks = tuple(h for h in announcement if t <= set(h))
    points = set().union(*blocks) - t if blocks else set()
    return blocks, tuple(sorted(points))
