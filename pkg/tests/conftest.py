"""Independent oracles shared by the test modules.

Nothing here imports the counting code: the brute-force counter checks the
tableau conditions itself and the fusion-rule rank never touches tableaux.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement, permutations

import pytest


def brute_count(rows, content, level=None):
    """Count fillings of a straight shape by trying every arrangement of the content."""
    cells = [(a, b) for a, r in enumerate(rows, 1) for b in range(1, r + 1)]
    flat = [f for f, amount in enumerate(content, 1) for _ in range(amount)]
    assert len(flat) == len(cells)
    count = 0
    for perm in set(permutations(flat)):
        g = dict(zip(cells, perm))
        ok = all(
            (b == 1 or g[(a, b - 1)] <= g[(a, b)]) and (a == 1 or g[(a - 1, b)] < g[(a, b)])
            for a, b in cells
        )
        if ok and level is not None:
            ok = all(
                g[(q + 2, 1)] >= g[(q, level)]
                for q in range(1, len(rows) - 1)
                if (q, level) in g
            )
        count += ok
    return count


def fuses(a: int, b: int, c: int, level: int) -> bool:
    """sl2 fusion rule at the given level for three weights (as multiples of w1)."""
    return abs(a - b) <= c <= a + b and (a + b + c) % 2 == 0 and a + b + c <= 2 * level


@lru_cache(maxsize=None)
def fusion_rank(level: int, weights: tuple[int, ...]) -> int:
    """Rank by propagating through intermediate weights (weights are self-dual)."""
    if not weights:
        return 1
    state = {0: 1}
    for w in weights[:-1]:
        nxt: dict[int, int] = {}
        for mu, mult in state.items():
            for nu in range(level + 1):
                if fuses(mu, w, nu, level):
                    nxt[nu] = nxt.get(nu, 0) + mult
        state = nxt
    return state.get(weights[-1], 0)


def weight_vectors(n_range, level_range, even=True):
    for level in level_range:
        for n in n_range:
            for ws in combinations_with_replacement(range(level, -1, -1), n):
                if not even or sum(ws) % 2 == 0:
                    yield level, ws


# Reference tableaux, named by level; L9_UNIQUE has row 4 sorted (see the decisions ledger).
L6_UNIQUE = (
    (1, 1, 1, 1, 1, 1),
    (2, 2, 2, 2, 2, 2),
    (3, 3, 3, 3, 3, 4),
    (4, 4, 4, 4, 5, 5),
    (5, 5, 5),
    (6, 6, 7),
)
L5_MAXIMAL = (
    (1,) * 5,
    (2,) * 5,
    (3,) * 5,
    (4,) * 5,
    (5,) * 5,
    (6, 6, 6, 7, 8),
    (7, 7),
    (8, 8),
)
L6_MAXIMAL = (
    (1,) * 6,
    (2,) * 6,
    (3,) * 6,
    (4,) * 6,
    (5, 5, 6),
    (6, 7, 7),
)
L10_FILL = (
    (1,) * 10,
    (2, 2, 2, 2, 2, 2, 2, 2, 3, 3),
    (3, 3, 3, 3, 3, 3, 4, 4, 4, 4),
    (4, 4, 4, 5, 5, 5, 5, 5, 5, 6),
    (6, 6),
    (7, 8),
)
# the same tableau after swapping the 4 at (3,10) with the 5 at (4,4)
L10_SWAPPED = (
    (1,) * 10,
    (2, 2, 2, 2, 2, 2, 2, 2, 3, 3),
    (3, 3, 3, 3, 3, 3, 4, 4, 4, 5),
    (4, 4, 4, 4, 5, 5, 5, 5, 5, 6),
    (6, 6),
    (7, 8),
)
L9_UNIQUE = (
    (1,) * 9,
    (2, 2, 2, 2, 2, 2, 2, 2, 3),
    (3, 3, 3, 3, 3, 3, 3, 4, 4),
    (4, 4, 4, 4, 4, 4, 5, 5, 5),
    (5, 5, 5, 5, 5, 6, 6, 6, 6),
    (6, 6, 6, 6, 7, 7, 7, 7, 7),
    (7, 7, 7),
    (8, 8, 9),
)
L7_FORWARD = (
    (1,) * 7,
    (2, 2, 2, 2, 2, 2, 3),
    (3, 3, 3, 3, 3, 4, 4),
    (4, 4, 4, 4, 5, 5, 5),
    (5, 5, 5, 6, 6),
    (6, 6, 6, 6, 7),
)
L7_REVERSE = (
    (1,) * 7,
    (2, 2, 2, 2, 2, 2, 3),
    (3, 3, 3, 3, 3, 4, 4),
    (4, 4, 4, 4, 5, 5, 6),
    (5, 5, 5, 5, 6),
    (6, 6, 6, 6, 7),
)


@pytest.fixture(scope="session")
def small_sweep():
    """Every even-total instance with 3 <= n <= 7 nonzero-or-zero weights and level <= 5."""
    return list(weight_vectors(range(3, 8), range(1, 6)))


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
