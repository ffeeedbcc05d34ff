"""Tableaux, the forward/reverse fill algorithms and the rank-two modification move."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FillError, InvariantViolation, ValidationError
from .shapes import Box, LowRow, Partition, SkewShape, as_skew, low_row_boxes, reduced_shape

Content = tuple[int, ...]


def as_content(amounts: Iterable[int]) -> Content:
    content = tuple(int(c) for c in amounts)
    if any(c < 0 for c in content):
        raise ValidationError(f"content amounts must be nonnegative: {content}")
    return content


@dataclass(frozen=True)
class Tableau:
    """A filling of a (skew) shape; ``rows[a-1]`` lists the flavors of row ``a`` left to right."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        shape = as_skew(self.shape)
        object.__setattr__(self, "shape", shape)
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        expected = tuple(o - shape.inner.row(a) for a, o in enumerate(shape.outer.rows, 1))
        if tuple(len(r) for r in rows) != expected:
            raise ValidationError(f"row lengths {[len(r) for r in rows]} do not fill {expected}")

    @classmethod
    def from_grid(cls, shape: Partition | SkewShape, grid: dict[Box, int]) -> "Tableau":
        shape = as_skew(shape)
        rows = []
        for a, r in enumerate(shape.outer.rows, 1):
            try:
                rows.append(tuple(grid[Box(a, b)] for b in range(shape.inner.row(a) + 1, r + 1)))
            except KeyError as exc:
                raise FillError(f"box {exc.args[0]} left empty") from None
        return cls(shape, tuple(rows))

    def entry(self, a: int, b: int) -> int | None:
        """Flavor in box (a, b); ``None`` for boxes outside the skew shape."""
        start = self.shape.inner.row(a)
        if a < 1 or a > len(self.rows) or not start < b <= self.shape.outer.row(a):
            return None
        return self.rows[a - 1][b - start - 1]

    def grid(self) -> dict[Box, int]:
        return {box: self.entry(*box) for box in self.shape.boxes()}  # type: ignore[misc]

    def entries(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def content(self, n: int | None = None) -> Content:
        flat = self.entries()
        n = max(flat, default=0) if n is None else n
        counts = [0] * n
        for x in flat:
            counts[x - 1] += 1
        return tuple(counts)

    def column(self, b: int) -> tuple[int, ...]:
        return tuple(x for a in range(1, len(self.rows) + 1) if (x := self.entry(a, b)) is not None)

    def render(self) -> str:
        """One line per row, entries separated by single spaces."""
        lines = []
        for a, row in enumerate(self.rows, 1):
            pad = ["."] * self.shape.inner.row(a)
            lines.append(" ".join(pad + [str(x) for x in row]))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape.outer.rows),
            "inner": list(self.shape.inner.rows),
            "entries": [list(r) for r in self.rows],
        }

    def __str__(self) -> str:
        return self.render()


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly increase left to right, columns strictly increase downward."""
    for a, row in enumerate(t.rows, 1):
        if any(x > y for x, y in zip(row, row[1:])):
            return False
        start = t.shape.inner.row(a)
        for j, x in enumerate(row):
            above = t.entry(a - 1, start + j + 1)
            if above is not None and above >= x:
                return False
    return True


def is_proper(t: Tableau, level: int, r_plus_1: int = 2) -> bool:
    """Wrap-around condition: entry(r+1+q, 1) >= entry(q, level) whenever both boxes exist.

    Boxes of the removed inner shape count as smaller than every flavor.
    """
    if not is_semistandard(t):
        raise ValidationError("properness is only defined for semistandard tableaux")
    outer = t.shape.outer
    for q in range(1, len(outer) - r_plus_1 + 1):
        low = t.entry(r_plus_1 + q, 1)
        if low is None or not outer.has_box(q, level):
            continue
        high = t.entry(q, level)
        if high is not None and low < high:
            return False
    return True


def _check_area(shape: Partition, content: Content) -> None:
    if sum(content) != shape.area:
        raise ValidationError(f"content {content} has {sum(content)} boxes, shape {shape} has {shape.area}")


def _forward_place(grid: dict[Box, int], region: Partition, flavors: Sequence[tuple[int, int]]) -> None:
    empty = iter(sorted(b for b in region.boxes() if b not in grid))
    for flavor, amount in flavors:
        for _ in range(amount):
            try:
                grid[next(empty)] = flavor
            except StopIteration:
                raise FillError(f"no empty box left for flavor {flavor}") from None


def place_reverse(shape: Partition, amount: int) -> tuple[list[Box], Partition]:
    """Take the ``amount`` largest low-row boxes of ``shape``; return them and what remains."""
    boxes = sorted(b for group in low_row_boxes(shape) for b in group)
    if amount > len(boxes):
        raise FillError(f"amount {amount} exceeds low-row size {len(boxes)} of {shape}")
    taken = boxes[len(boxes) - amount:] if amount else []
    rows = list(shape.rows)
    for box in taken:
        rows[box.row - 1] -= 1
    try:
        rest = Partition(tuple(rows))
    except ValidationError as exc:
        raise InvariantViolation(f"reverse placement broke the shape: {exc}") from None
    return taken, rest


def _reverse_place(
    grid: dict[Box, int], shape: Partition, flavors: Sequence[tuple[int, int]]
) -> Partition:
    for flavor, amount in flavors:
        taken, shape = place_reverse(shape, amount)
        for box in taken:
            grid[box] = flavor
    return shape


def forward_fill(shape: Partition, content: Sequence[int]) -> Tableau:
    """Place flavors 1..n in order, each into the smallest empty boxes."""
    content = as_content(content)
    _check_area(shape, content)
    grid: dict[Box, int] = {}
    _forward_place(grid, shape, [(i, c) for i, c in enumerate(content, 1)])
    return Tableau.from_grid(shape, grid)


def reverse_fill(shape: Partition, content: Sequence[int]) -> Tableau:
    """Place flavors n..1 in order, each into the largest boxes of the current low-row.

    Raises ``FillError`` when a flavor does not fit in the low-row it meets.
    """
    content = as_content(content)
    _check_area(shape, content)
    grid: dict[Box, int] = {}
    _reverse_place(grid, shape, [(i, content[i - 1]) for i in range(len(content), 0, -1)])
    return Tableau.from_grid(shape, grid)


def low_row_step(lr: LowRow, amount: int, level: int) -> LowRow:
    """Low-row of the bottom three rows after reverse-placing ``amount`` boxes."""
    l1, l2, l3 = lr
    if l1 + l2 + l3 != level:
        raise ValidationError(f"low-row {lr} does not sum to level {level}")
    if not 0 <= amount <= level:
        raise ValidationError(f"amount {amount} outside [0, {level}]")
    if amount <= l3:
        return (l1, l2 + amount, l3 - amount)
    if amount <= l2 + l3:
        return (l1 + amount - l3, l2 + 2 * l3 - amount, 0)
    spill = amount - l2 - l3
    return (spill, level - spill - l3, l3)


def _strip_zeros(lr: Sequence[int]) -> tuple[int, ...]:
    lr = list(lr)
    while lr and lr[0] == 0:
        lr.pop(0)
    while lr and lr[-1] == 0:
        lr.pop()
    return tuple(lr)


def reverse_trace(level: int, k: int, p: int, tail: Sequence[int]) -> list[LowRow]:
    """Three-segment low-rows met while reverse-filling ``tail`` (largest flavor first)
    into the reduced shape.

    Each tracked triple is checked against the low-row of the real diagram; the last
    segment never exceeds p and the low-row never spans more than three rows.  The
    first segment is *not* bounded by ``level - p``: case two of the step grows it.
    """
    shape = reduced_shape(level, k, p)
    lr: LowRow = (level - p, 0, p)
    trace = [lr]
    for amount in tail:
        _, shape = place_reverse(shape, amount)
        lr = low_row_step(lr, amount, level)
        # a virtual full row on top stands in for the rows above when k = 0
        actual = _strip_zeros(len(g) for g in low_row_boxes(Partition((level,) + shape.rows)))
        if actual != _strip_zeros(lr):
            raise InvariantViolation(f"tracked low-row {lr} disagrees with {actual} of {shape}")
        if not 0 <= lr[2] <= p or len(actual) > 3:
            raise InvariantViolation(f"low-row {lr} of {shape} escapes its bounds (p={p})")
        trace.append(lr)
    return trace


def tail_sum(content: Sequence[int], k: int) -> int:
    """Sum of the amounts of flavors 2k+2, ..., n."""
    return sum(content[2 * k + 1:])


def _split_fill(level: int, k: int, p: int, content: Content, split: int) -> Tableau:
    shape = reduced_shape(level, k, p)
    n = len(content)
    grid: dict[Box, int] = {}
    rest = _reverse_place(grid, shape, [(i, content[i - 1]) for i in range(n, split, -1)])
    _forward_place(grid, rest, [(i, content[i - 1]) for i in range(1, split + 1)])
    return Tableau.from_grid(shape, grid)


def combined_fill(level: int, k: int, p: int, content: Sequence[int]) -> Tableau:
    """Reverse-fill flavors 2k+2..n into the reduced shape, forward-fill flavors 1..2k+1.

    When flavor 2k+1 overflows the two shortest rows the forward part breaks a
    column; flavors 2k+1 and 2k then join the reverse part, and so on two at a time.
    The result is checked to be semistandard and proper.
    """
    content = as_content(content)
    shape = reduced_shape(level, k, p)
    _check_area(shape, content)
    if any(a < b for a, b in zip(content, content[1:])):
        raise ValidationError(f"content must be sorted descending: {content}")
    if content and content[0] > level:
        raise ValidationError(f"amount {content[0]} exceeds level {level}")
    if tail_sum(content, k) < p:
        raise ValidationError("tail sum is below p; no tableau exists")
    n = len(content)
    reverse_trace(level, k, p, content[min(2 * k + 1, n):][::-1])
    for split in range(min(2 * k + 1, n), -1, -2):
        try:
            t = _split_fill(level, k, p, content, split)
        except FillError:
            continue
        if is_semistandard(t) and is_proper(t, level):
            return t
    raise InvariantViolation(f"no combined fill of {content} on {shape} is a proper tableau")


def is_maximal_content(content: Sequence[int], level: int) -> bool:
    """At least n-3 of the nonzero amounts equal the level."""
    nonzero = [c for c in content if c]
    return sum(1 for c in nonzero if c == level) >= len(nonzero) - 3


def _swap_candidates(t: Tableau, r: int, jump_only: bool) -> list[tuple[Box, Box]]:
    upper, lower = t.rows[r - 1], t.rows[r]
    if jump_only:
        ys = []
        for col in range(1, min(len(upper), len(lower)) + 1):
            a, b = upper[col - 1], lower[col - 1]
            if b - a > 1:
                ys.append(max(x for x in upper if x < b))
    else:
        ys = sorted(set(upper), reverse=True)
    found = []
    for y in dict.fromkeys(ys):
        if y + 1 not in lower:
            continue
        y_box = Box(r, t.shape.inner.row(r) + max(j for j, x in enumerate(upper, 1) if x == y))
        z_box = Box(r + 1, t.shape.inner.row(r + 1) + min(j for j, x in enumerate(lower, 1) if x == y + 1))
        found.append((y_box, z_box))
    return found


def modify_tableau(t: Tableau, k: int, p: int, level: int | None = None) -> Tableau | None:
    """A second proper tableau obtained by swapping one ``y`` with one ``y + 1``.

    ``t`` is the output of ``combined_fill``.  Row ``r`` is the lowest row holding only
    flavors up to 2k+1; in a column where the flavor jumps by more than one between
    rows r and r+1 (from a to b), ``y`` is the largest flavor of row r below b, taken at
    its largest box, and ``z = y + 1`` is taken at its smallest box in row r+1.  If no
    such swap is valid, the same swap is tried on every other pair of adjacent rows.

    Returns ``None`` when the tail sum is at most p, the content is maximal, or no
    swap yields a new proper tableau.  ``level`` defaults to the width of ``t``, which
    is only right when k > 0.
    """
    level = t.shape.outer.width if level is None else level
    content = t.content()
    if tail_sum(content, k) <= p or is_maximal_content(content, level):
        return None
    low = [a for a, row in enumerate(t.rows[:-1], 1) if row and max(row) <= 2 * k + 1]
    pairs = [(low[-1], True)] if low else []
    pairs += [(r, False) for r in range(len(t.rows) - 1, 0, -1)]
    for r, jump_only in pairs:
        for y_box, z_box in _swap_candidates(t, r, jump_only):
            grid = t.grid()
            grid[y_box], grid[z_box] = grid[z_box], grid[y_box]
            new = Tableau.from_grid(t.shape, grid)
            if new != t and is_semistandard(new) and is_proper(new, level):
                return new
    return None
