"""Line-oriented strategy and design files.

Strategy file::

    rcards v1
    deal 3 3 1
    announcement 1
    0 1 3
    1 2 4
    ...
    announcement 2
    ...
    probs
    0 1 2 : 1=1/2 4=1/2

Blank lines and ``#`` comments are ignored.  Announcements are numbered from
1 and must appear in order.  Without a ``probs`` section, and for hands it
does not list, each hand picks uniformly among the announcements containing
it.  Canonical output lists hands in colex order and writes a ``probs`` line
only for non-uniform hands.

Design file: one or more sections ``design <v> <k>`` each followed by one
block per line; an ``rcards v1`` header line is optional.
"""

from __future__ import annotations

from fractions import Fraction

from .core import DealSpec, Hand, Strategy, StrategyError, fmt_rational, k_subsets, make_hand, subset_rank
from .designs import Design, DesignError

HEADER = "rcards v1"


class ParseError(ValueError):
    def __init__(self, line: int, col: int, msg: str):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col
        self.msg = msg


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield no, body


def _col(body: str, token: str) -> int:
    return body.find(token) + 1 if token in body else len(body) - len(body.lstrip()) + 1


def _ints(no: int, body: str, tokens: list[str]) -> list[int]:
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(no, _col(body, tok), f"expected an integer, got {tok!r}") from None
    return out


def parse_strategy(text: str) -> Strategy:
    it = iter(_lines(text))
    try:
        no, body = next(it)
    except StopIteration:
        raise ParseError(1, 1, "empty file") from None
    if body.strip() != HEADER:
        raise ParseError(no, 1, f"expected header {HEADER!r}")
    try:
        no, body = next(it)
    except StopIteration:
        raise ParseError(no + 1, 1, "missing deal line") from None
    tokens = body.split()
    if tokens[0] != "deal" or len(tokens) != 4:
        raise ParseError(no, 1, "expected 'deal <a> <b> <c>'")
    try:
        deal = DealSpec(*_ints(no, body, tokens[1:]))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(no, 1, str(exc)) from None
    n, a = deal.n, deal.a

    announcements: list[list[Hand]] = []
    seen: list[dict[Hand, int]] = []
    probs: dict[Hand, dict[int, Fraction]] = {}
    prob_lines: dict[Hand, tuple[int, int]] = {}
    section = None
    last = no
    for no, body in it:
        last = no
        tokens = body.split()
        if tokens[0] == "announcement":
            if section == "probs":
                raise ParseError(no, 1, "announcement after probs section")
            want = len(announcements) + 1
            if len(tokens) != 2 or tokens[1] != str(want):
                raise ParseError(no, 1, f"expected 'announcement {want}'")
            announcements.append([])
            seen.append({})
            section = "ann"
            continue
        if tokens[0] == "probs":
            if len(tokens) != 1:
                raise ParseError(no, _col(body, tokens[1]), "unexpected text after 'probs'")
            section = "probs"
            continue
        if section is None:
            raise ParseError(no, 1, "hand outside an announcement section")
        if section == "ann":
            cards = _ints(no, body, tokens)
            h = _hand(no, body, cards, n)
            if len(h) != a:
                raise ParseError(no, 1, f"hand has {len(h)} cards, deal needs {a}")
            if h in seen[-1]:
                raise ParseError(no, 1, f"duplicate hand, first given on line {seen[-1][h]}")
            seen[-1][h] = no
            announcements[-1].append(h)
            continue
        # probs line
        if ":" not in body:
            raise ParseError(no, 1, "expected '<hand> : <i>=<num>/<den> ...'")
        left, right = body.split(":", 1)
        h = _hand(no, body, _ints(no, body, left.split()), n)
        if len(h) != a:
            raise ParseError(no, 1, f"hand has {len(h)} cards, deal needs {a}")
        if h in probs:
            raise ParseError(no, 1, f"probabilities for this hand already given on line {prob_lines[h][0]}")
        dist: dict[int, Fraction] = {}
        for tok in right.split():
            col = body.find(tok, len(left)) + 1
            if "=" not in tok:
                raise ParseError(no, col, f"expected '<i>=<num>/<den>', got {tok!r}")
            idx, val = tok.split("=", 1)
            try:
                i = int(idx)
                q = Fraction(val)
            except (ValueError, ZeroDivisionError):
                raise ParseError(no, col, f"bad probability entry {tok!r}") from None
            if not 1 <= i <= len(announcements):
                raise ParseError(no, col, f"announcement {i} does not exist")
            if h not in seen[i - 1]:
                raise ParseError(no, col, f"hand is not in announcement {i}")
            if i - 1 in dist:
                raise ParseError(no, col, f"announcement {i} listed twice")
            dist[i - 1] = q
        if sum(dist.values()) != 1:
            raise ParseError(no, len(left) + 2, f"probabilities sum to {fmt_rational(sum(dist.values()))}, not 1")
        probs[h] = dist
        prob_lines[h] = (no, 1)

    if not announcements:
        raise ParseError(last + 1, 1, "no announcements")
    for i, ann in enumerate(announcements):
        if not ann:
            raise ParseError(last + 1, 1, f"announcement {i + 1} is empty")
    members: dict[Hand, list[int]] = {}
    for i, ann in enumerate(announcements):
        for h in ann:
            members.setdefault(h, []).append(i + 1)
    for h in k_subsets(n, a):
        if h not in members:
            raise ParseError(last + 1, 1, f"hand {' '.join(map(str, h))} occurs in no announcement")
    for h, dist in probs.items():
        missing = sorted(set(members[h]) - {i + 1 for i in dist})
        if missing:
            no = prob_lines[h][0]
            raise ParseError(no, 1, f"no probability for announcements {missing} containing this hand")
    try:
        return Strategy.build(deal, announcements, probs)
    except StrategyError as exc:
        raise ParseError(last, 1, str(exc)) from None


def _hand(no: int, body: str, cards: list[int], n: int) -> Hand:
    for x in cards:
        if not 0 <= x < n:
            raise ParseError(no, _col(body, str(x)), f"card {x} outside deck 0..{n - 1}")
    try:
        return make_hand(cards, n)
    except ValueError as exc:
        raise ParseError(no, 1, str(exc)) from None


def emit_strategy(S: Strategy) -> str:
    out = [HEADER, f"deal {S.deal.a} {S.deal.b} {S.deal.c}"]
    for i, ann in enumerate(S.announcements, 1):
        out.append(f"announcement {i}")
        out.extend(" ".join(map(str, h)) for h in ann)
    biased = [
        h
        for h in sorted(S.distributions, key=subset_rank)
        if any(q != Fraction(1, len(S.distributions[h])) for _, q in S.distributions[h])
    ]
    if biased:
        out.append("probs")
        for h in biased:
            entries = " ".join(f"{i + 1}={fmt_rational(q)}" for i, q in S.distributions[h])
            out.append(f"{' '.join(map(str, h))} : {entries}")
    return "\n".join(out) + "\n"


def parse_designs(text: str) -> list[Design]:
    designs: list[tuple[int, int, int, list[tuple[int, ...]]]] = []
    first = True
    for no, body in _lines(text):
        tokens = body.split()
        if first and body.strip() == HEADER:
            first = False
            continue
        first = False
        if tokens[0] == "design":
            if len(tokens) != 3:
                raise ParseError(no, 1, "expected 'design <v> <k>'")
            v, k = _ints(no, body, tokens[1:])
            designs.append((no, v, k, []))
            continue
        if not designs:
            raise ParseError(no, 1, "block outside a design section")
        _, v, k, blocks = designs[-1]
        cards = _ints(no, body, tokens)
        b = _hand(no, body, cards, v)
        if len(b) != k:
            raise ParseError(no, 1, f"block has {len(b)} points, design needs {k}")
        blocks.append(b)
    if not designs:
        raise ParseError(1, 1, "no design section")
    out = []
    for no, v, k, blocks in designs:
        if not blocks:
            raise ParseError(no, 1, "design has no blocks")
        try:
            out.append(Design(v, k, tuple(blocks)))
        except DesignError as exc:
            raise ParseError(no, 1, str(exc)) from None
    return out


def emit_designs(designs: list[Design]) -> str:
    out = []
    for D in designs:
        out.append(f"design {D.v} {D.k}")
        out.extend(" ".join(map(str, b)) for b in D.blocks)
    return "\n".join(out) + "\n"
