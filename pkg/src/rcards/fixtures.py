"""Published (3,3,1) strategies used as reference fixtures."""

from .core import DealSpec, Strategy

# deterministic strategy, six announcements
FIGURE1 = (
    ((0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (0, 4, 5), (1, 5, 6), (0, 2, 6)),
    ((0, 2, 3), (1, 3, 4), (2, 4, 5), (3, 5, 6), (0, 4, 6), (0, 1, 5), (1, 2, 6)),
    ((0, 2, 4), (0, 3, 5), (1, 2, 3), (0, 1, 6), (1, 4, 5), (2, 5, 6)),
    ((0, 1, 2), (2, 3, 4), (4, 5, 6), (1, 3, 5), (0, 3, 6)),
    ((1, 2, 5), (0, 5, 6), (1, 4, 6), (0, 3, 4), (2, 3, 6)),
    ((3, 4, 5), (0, 1, 4), (0, 2, 5), (2, 4, 6), (1, 3, 6)),
)

# 2-equitable strategy, ten STS(7)s
FIGURE2 = (
    ((2, 5, 6), (2, 3, 4), (1, 4, 5), (1, 3, 6), (0, 4, 6), (0, 3, 5), (0, 1, 2)),
    ((2, 5, 6), (2, 3, 4), (1, 4, 6), (1, 3, 5), (0, 4, 5), (0, 3, 6), (0, 1, 2)),
    ((3, 4, 5), (2, 4, 6), (1, 3, 6), (1, 2, 5), (0, 5, 6), (0, 2, 3), (0, 1, 4)),
    ((3, 4, 5), (2, 4, 6), (1, 5, 6), (1, 2, 3), (0, 3, 6), (0, 2, 5), (0, 1, 4)),
    ((3, 4, 6), (2, 3, 5), (1, 4, 5), (1, 2, 6), (0, 5, 6), (0, 2, 4), (0, 1, 3)),
    ((3, 4, 6), (2, 3, 5), (1, 5, 6), (1, 2, 4), (0, 4, 5), (0, 2, 6), (0, 1, 3)),
    ((3, 5, 6), (2, 4, 5), (1, 3, 4), (1, 2, 6), (0, 4, 6), (0, 2, 3), (0, 1, 5)),
    ((3, 5, 6), (2, 4, 5), (1, 4, 6), (1, 2, 3), (0, 3, 4), (0, 2, 6), (0, 1, 5)),
    ((4, 5, 6), (2, 3, 6), (1, 3, 4), (1, 2, 5), (0, 3, 5), (0, 2, 4), (0, 1, 6)),
    ((4, 5, 6), (2, 3, 6), (1, 3, 5), (1, 2, 4), (0, 3, 4), (0, 2, 5), (0, 1, 6)),
)

DEAL_331 = DealSpec(3, 3, 1)


def figure1_strategy() -> Strategy:
    return Strategy.build(DEAL_331, FIGURE1)


def figure2_strategy() -> Strategy:
    return Strategy.build(DEAL_331, FIGURE2)
