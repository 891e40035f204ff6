"""Audit a strategy against the necessary conditions for informative, secure schemes.

The audit takes a strategy together with a claim about it (``"perfect"``:
equitable, informative, perfectly delta-secure; ``"weak"``: informative and
weakly delta-secure).  Claims are re-verified first; a claim that does not
hold is a violation.  Structural consequences are then checked only when
their hypotheses have actually been verified, so on a genuinely secure
strategy every consequence must hold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import Strategy, fmt_hand, k_subsets, to_mask
from .designs import Design, block_neighborhood, design_lambda
from .verify import equitability, is_informative, perfect_security_check, weak_security_check


@dataclass(frozen=True)
class Finding:
    check: str
    status: str  # "pass", "violation" or "skipped"
    detail: str = ""

    def __str__(self):
        tail = f": {self.detail}" if self.detail else ""
        return f"[{self.status}] {self.check}{tail}"


@dataclass
class AuditReport:
    claim: str
    delta: int
    findings: list[Finding] = field(default_factory=list)

    def add(self, check, ok, detail=""):
        self.findings.append(Finding(check, "pass" if ok else "violation", "" if ok else detail))

    def skip(self, check, why):
        self.findings.append(Finding(check, "skipped", why))

    @property
    def violations(self) -> list[Finding]:
        return [f for f in self.findings if f.status == "violation"]

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        return [str(f) for f in self.findings]


def _first_empty_cathy(S: Strategy, i: int, hands_for_cathy):
    members = [to_mask(h) for h in S.announcements[i]]
    for hc in hands_for_cathy:
        hm = to_mask(hc)
        if all(m & hm for m in members):
            return hc
    return None


def _possible_cathy_subsets(S: Strategy, i: int, size: int):
    for h in S.announcements[i]:
        for y in combinations(h, size):
            yield h, y


def necessary_condition_audit(S: Strategy, delta: int | None = None, claim: str = "perfect") -> AuditReport:
    deal = S.deal
    a, b, c, n = deal.a, deal.b, deal.c, deal.n
    d = a - c
    if delta is None:
        delta = max(d - 1, 1)
    if claim not in ("perfect", "weak"):
        raise ValueError(f"claim must be 'perfect' or 'weak', got {claim!r}")
    if not 1 <= delta <= a:
        raise ValueError(f"delta must lie in 1..{a}, got {delta}")
    report = AuditReport(claim, delta)

    # claims
    gamma = equitability(S)
    informative = is_informative(S)
    weak = weak_security_check(S, delta)
    report.add("claim: informative for Bob", bool(informative), str(informative))
    if claim == "perfect":
        report.add("claim: equitable", gamma is not None, "distributions are not uniform over a constant number of announcements")
        perfect = perfect_security_check(S, delta)
        report.add(f"claim: perfectly {delta}-secure", bool(perfect), str(perfect.witness))
    report.add(f"claim: weakly {delta}-secure", bool(weak), str(weak.witness))

    # impossibility for a <= c+1
    if a <= c + 1:
        both = bool(informative) and bool(weak_security_check(S, 1))
        report.add(
            "theorem: a <= c+1 admits no informative, weakly 1-secure strategy",
            not both,
            "strategy is informative and weakly 1-secure with a <= c+1",
        )
        return report

    if not informative:
        report.skip("structural consequences", "strategy is not informative")
        return report

    # at most one hand per announcement through any d-subset
    bad = None
    for i, ann in enumerate(S.announcements):
        seen = set()
        for h in ann:
            for s in combinations(h, d):
                if s in seen:
                    bad = (i, s)
                    break
                seen.add(s)
            if bad:
                break
        if bad:
            break
    report.add(
        f"lemma: every {d}-subset lies in at most one hand per announcement",
        bad is None,
        bad and f"announcement {bad[0] + 1}, subset {fmt_hand(bad[1])}",
    )

    if b < d - 1:
        report.skip("lemmas needing b >= d-1", f"b={b} < d-1={d - 1}")
        return report
    weak_d = weak_security_check(S, d - 1)
    if not weak_d:
        report.skip("lemmas needing weak (d-1)-security", f"not weakly {d - 1}-secure: {weak_d.witness}")
        return report

    # every c-subset of a hand is a possible Cathy hand
    bad = None
    for i in range(S.m):
        for h, y in _possible_cathy_subsets(S, i, c):
            if _first_empty_cathy(S, i, [y]) is not None:
                bad = (i, h, y)
                break
        if bad:
            break
    report.add(
        "lemma: P(Y,i) nonempty for every c-subset Y of a hand in A_i",
        bad is None,
        bad and f"announcement {bad[0] + 1}, hand {fmt_hand(bad[1])}, Y={fmt_hand(bad[2])}",
    )

    # (c-1)-subset of a hand plus an outside card is a possible Cathy hand
    bad = None
    for i, ann in enumerate(S.announcements):
        for h in ann:
            outside = [z for z in range(n) if z not in h]
            for y in combinations(h, c - 1):
                cands = [tuple(sorted(y + (z,))) for z in outside]
                hc = _first_empty_cathy(S, i, cands)
                if hc is not None:
                    bad = (i, h, hc)
                    break
            if bad:
                break
        if bad:
            break
    report.add(
        "lemma: P(Y+z,i) nonempty for (c-1)-subsets Y of a hand and z outside it",
        bad is None,
        bad and f"announcement {bad[0] + 1}, hand {fmt_hand(bad[1])}, Cathy {fmt_hand(bad[2])}",
    )

    # each (d-1)-subset lies in >= 2 hands and misses >= 2 hands
    bad = None
    for i, ann in enumerate(S.announcements):
        for D in k_subsets(n, d - 1):
            dm = to_mask(D)
            inside = sum(1 for h in ann if to_mask(h) & dm == dm)
            if inside < 2 or len(ann) - inside < 2:
                bad = (i, D, inside, len(ann) - inside)
                break
        if bad:
            break
    report.add(
        f"lemma: every {d - 1}-subset is in >= 2 hands and misses >= 2 hands of each announcement",
        bad is None,
        bad and f"announcement {bad[0] + 1}, subset {fmt_hand(bad[1])}: in {bad[2]}, missing {bad[3]}",
    )

    if claim != "perfect":
        return report
    if gamma is None or not perfect_security_check(S, d - 1):
        report.skip("consequences of perfect (d-1)-security", "strategy is not equitable and perfectly (d-1)-secure")
        return report

    report.add(f"theorem: a = d+1 = {d + 1}, hence c = 1", a == d + 1, f"a={a}, c={c}")
    if a != d + 1:
        return report

    bad = []
    for i, ann in enumerate(S.announcements):
        if design_lambda(Design(n, a, ann), d) != 1:
            bad.append(i + 1)
    report.add(
        f"theorem: every announcement is a {d}-({n},{a},1) design",
        not bad,
        f"announcements {bad} fail",
    )

    bad = None
    subsets = k_subsets(n, d - 1)
    for i, ann in enumerate(S.announcements):
        hoods = {D: set(block_neighborhood(ann, D)[1]) for D in subsets}
        for D, E in combinations(subsets, 2):
            ND, NE = hoods[D], hoods[E]
            if not ND & NE or ND - set(E) != NE - set(D):
                bad = (i, D, E)
                break
        if bad:
            break
    report.add(
        f"lemma: N(D) and N(D') meet and N(D)\\D' = N(D')\\D for all {d - 1}-subsets",
        bad is None,
        bad and f"announcement {bad[0] + 1}, D={fmt_hand(bad[1])}, D'={fmt_hand(bad[2])}",
    )
    return report
