"""Exact counts of semistandard and proper tableaux (classical and quantum Kostka numbers).

Counting adds one horizontal strip per flavor and memoizes on the partially
filled shape, so every count is exact Python ``int``.  Enumeration reuses the
same counter to avoid dead ends; the brute-force oracle in the tests checks both.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .errors import InvariantViolation, ValidationError
from .fills import Content, Tableau, as_content
from .shapes import (
    Partition,
    SkewShape,
    as_skew,
    drop_last_column,
    quantum_shape,
    reduced_shape,
    split_quantum_degree,
)


def _check(shape: SkewShape, content: Content) -> None:
    if sum(content) != shape.area:
        raise ValidationError(
            f"content {content} has {sum(content)} boxes, shape has {shape.area}"
        )


def _strips(
    current: tuple[int, ...], outer: tuple[int, ...], amount: int
) -> Iterator[tuple[int, ...]]:
    """Shapes obtained from ``current`` by adding a horizontal strip of ``amount`` boxes."""
    depth = len(outer)

    def rec(j: int, left: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if j == depth:
            if left == 0:
                yield tuple(acc)
            return
        lo = current[j]
        hi = outer[j] if j == 0 else min(outer[j], current[j - 1])
        for v in range(lo, min(hi, lo + left) + 1):
            acc.append(v)
            yield from rec(j + 1, left - (v - lo), acc)
            acc.pop()

    yield from rec(0, amount, [])


def _proper_ok(before: tuple[int, ...], after: tuple[int, ...], outer: tuple[int, ...], level: int) -> bool:
    # a box newly filled at (q+2, 1) needs (q, level) filled already or in this strip
    for j in range(2, len(outer)):
        if before[j] == 0 and after[j] > 0:
            if outer[j - 2] >= level and after[j - 2] < level:
                return False
    return True


@lru_cache(maxsize=None)
def _completions(
    outer: tuple[int, ...], content: tuple[int, ...], level: int | None, cap: int | None
) -> Callable[[tuple[int, ...], int], int]:
    """Memoized number of ways to finish ``outer`` from a partial shape and a flavor index."""

    @lru_cache(maxsize=None)
    def rec(current: tuple[int, ...], i: int) -> int:
        if i == len(content):
            return 1 if current == outer else 0
        total = 0
        for nxt in _strips(current, outer, content[i]):
            if level is not None and not _proper_ok(current, nxt, outer, level):
                continue
            total += rec(nxt, i + 1)
            if cap is not None and total >= cap:
                return cap
        return total

    return rec


def _start(shape: SkewShape) -> tuple[int, ...]:
    return shape.inner.rows + (0,) * (len(shape.outer) - len(shape.inner))


def _count_on(shape: SkewShape, content: Content, level: int | None, cap: int | None) -> int:
    _check(shape, content)
    return _completions(shape.outer.rows, content, level, cap)(_start(shape), 0)


def count_tableaux(
    shape: Partition | SkewShape | Sequence[int], content: Sequence[int], cap: int | None = None
) -> int:
    """Number of semistandard tableaux of ``shape`` with the given content.

    With ``cap`` the count saturates: the result is exact below ``cap`` and equal to
    ``cap`` otherwise.
    """
    return _count_on(as_skew(shape), as_content(content), None, cap)


def count_proper_tableaux(
    shape: Partition | SkewShape | Sequence[int],
    content: Sequence[int],
    level: int,
    cap: int | None = None,
) -> int:
    """Number of proper semistandard tableaux (for sl2, so r + 1 = 2)."""
    shape = as_skew(shape)
    if shape.outer.width > level:
        raise ValidationError(f"shape {shape.outer} is wider than level {level}")
    return _count_on(shape, as_content(content), level, cap)


def quantum_kostka(level: int, s: int, content: Sequence[int]) -> int:
    """Proper tableaux on the rim-hook shape with content ``(level^(s-1), content)``.

    Also counted on the reduced shape ``(level^2k, p, p)`` with the bare content; the
    two counts must agree.
    """
    content = as_content(content)
    k, p = split_quantum_degree(level, s)
    if sum(content) != 2 * (k * level + p):
        raise ValidationError(f"content {content} does not have area {2 * (k * level + p)}")
    direct = count_proper_tableaux(quantum_shape(level, s), (level,) * (s - 1) + content, level)
    reduced = count_proper_tableaux(reduced_shape(level, k, p), content, level)
    if direct != reduced:
        raise InvariantViolation(f"quantum count {direct} != reduced count {reduced}")
    return direct


# above this many tableaux a bounded request walks rows instead of sorting everything
STRIP_ENUMERATION_MAX = 50_000


def enumerate_tableaux(
    shape: Partition | SkewShape | Sequence[int],
    content: Sequence[int],
    level: int | None = None,
    proper: bool = False,
    limit: int | None = None,
) -> list[Tableau]:
    """Tableaux in lexicographic order of their row-major entries, at most ``limit``.

    Usually every tableau is built strip by strip, following only strips the
    completion counter says can be finished, and the list is sorted.  When the
    total is huge and only a few are wanted, rows are chosen top to bottom instead.
    """
    shape = as_skew(shape)
    content = as_content(content)
    _check(shape, content)
    if proper and level is None:
        raise ValidationError("proper enumeration needs a level")
    if limit is not None and limit <= 0:
        return []
    lvl = level if proper else None
    total = _completions(shape.outer.rows, content, lvl, None)(_start(shape), 0)
    if limit is None or total <= STRIP_ENUMERATION_MAX:
        found = sorted(_by_strips(shape, content, lvl), key=Tableau.entries)
        return found if limit is None else found[:limit]
    return _by_rows(shape, content, level, proper, limit)


def _by_strips(shape: SkewShape, content: Content, level: int | None) -> Iterator[Tableau]:
    outer = shape.outer.rows
    rec = _completions(outer, content, level, None)
    rows: list[list[int]] = [[] for _ in outer]

    def go(current: tuple[int, ...], i: int) -> Iterator[Tableau]:
        if i == len(content):
            yield Tableau(shape, tuple(tuple(r) for r in rows))
            return
        for nxt in _strips(current, outer, content[i]):
            if level is not None and not _proper_ok(current, nxt, outer, level):
                continue
            if not rec(nxt, i + 1):
                continue
            for j, (lo, hi) in enumerate(zip(current, nxt)):
                rows[j].extend([i + 1] * (hi - lo))
            yield from go(nxt, i + 1)
            for j, (lo, hi) in enumerate(zip(current, nxt)):
                del rows[j][len(rows[j]) - (hi - lo):]

    start = _start(shape)
    if rec(start, 0):
        yield from go(start, 0)


def _by_rows(
    shape: SkewShape, content: Content, level: int | None, proper: bool, limit: int
) -> list[Tableau]:
    outer, inner = shape.outer, shape.inner
    depth, n = len(outer), len(content)
    starts = tuple(inner.row(a) for a in range(1, depth + 1))
    # largest flavor a box can hold, leaving room for the boxes below it in its column
    cap = tuple(
        tuple(n - sum(1 for a2 in range(a + 1, depth + 1) if outer.row(a2) >= b) for b in range(1, outer.row(a) + 1))
        for a in range(1, depth + 1)
    )

    def rows_for(a: int, prev: tuple[int, ...], prev2: tuple[int, ...], left: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        """Weakly increasing words for row ``a`` (1-indexed), in lexicographic order."""
        start, stop = starts[a - 1], outer.row(a)
        prev_start = starts[a - 2] if a >= 2 else 0
        need = stop - start
        counts = list(left)
        word: list[int] = []

        def rec(b: int, low: int) -> Iterator[tuple[int, ...]]:
            if b > stop:
                yield tuple(word)
                return
            lo = low
            if a >= 2 and prev_start < b <= outer.row(a - 1):
                lo = max(lo, prev[b - prev_start - 1] + 1)
            if proper and b == 1 and a >= 3 and starts[a - 3] < level <= outer.row(a - 2):
                lo = max(lo, prev2[level - starts[a - 3] - 1])
            for v in range(lo, cap[a - 1][b - 1] + 1):
                if counts[v - 1]:
                    counts[v - 1] -= 1
                    word.append(v)
                    yield from rec(b + 1, v)
                    word.pop()
                    counts[v - 1] += 1

        if need == 0:
            yield ()
            return
        yield from rec(start + 1, 1)

    @lru_cache(maxsize=None)
    def feasible(a: int, prev: tuple[int, ...], prev2: tuple[int, ...], left: tuple[int, ...]) -> bool:
        if a > depth:
            return not any(left)
        for word in rows_for(a, prev, prev2, left):
            if feasible(a + 1, word, prev, _take(left, word)):
                return True
        return False

    out: list[Tableau] = []
    rows: list[tuple[int, ...]] = []

    def walk(a: int, prev: tuple[int, ...], prev2: tuple[int, ...], left: tuple[int, ...]) -> bool:
        if a > depth:
            out.append(Tableau(shape, tuple(rows)))
            return len(out) >= limit
        for word in rows_for(a, prev, prev2, left):
            rest = _take(left, word)
            if not feasible(a + 1, word, prev, rest):
                continue
            rows.append(word)
            stop = walk(a + 1, word, prev, rest)
            rows.pop()
            if stop:
                return True
        return False

    walk(1, (), (), content)
    return out


def _take(left: tuple[int, ...], word: tuple[int, ...]) -> tuple[int, ...]:
    counts = list(left)
    for v in word:
        counts[v - 1] -= 1
    return tuple(counts)


def peel_last_column(t: Tableau) -> tuple[Tableau, Content]:
    """Drop the rightmost column of a straight-shape tableau; return it with the leftover content."""
    if t.shape.inner.rows:
        raise ValidationError("column peeling is defined for straight shapes")
    n = max(t.entries(), default=0)
    outer = drop_last_column(t.shape.outer)
    rows = tuple(row[: outer.row(a)] for a, row in enumerate(t.rows, 1) if outer.row(a))
    peeled = Tableau(SkewShape(outer), rows)
    return peeled, peeled.content(n)


def column_removal_unique(
    shape: Partition | SkewShape | Sequence[int], content: Sequence[int], level: int | None = None
) -> bool:
    """Peel columns off the unique tableau one at a time; each remainder must be unique too.

    With ``level`` the tableaux are proper ones and the remainder after peeling column
    ``b`` is tested at level ``b - 1``.  Returns ``False`` if the starting count is not 1.
    """
    proper = level is not None
    found = enumerate_tableaux(shape, content, level, proper=proper, limit=2)
    if len(found) != 1:
        return False
    t = found[0]
    while t.shape.outer.width > 1:
        t, rest = peel_last_column(t)
        width = t.shape.outer.width
        count = (
            count_proper_tableaux(t.shape, rest, width, cap=2) if proper else count_tableaux(t.shape, rest, cap=2)
        )
        if count != 1:
            return False
    return True
