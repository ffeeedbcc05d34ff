"""Young diagrams, skew diagrams and the derived shapes used for sl2 rank counts.

Rows and columns are 1-indexed wherever a box is named, so ``Box(1, 1)`` is the
top-left corner.  Partitions store their row lengths top to bottom with trailing
zero rows trimmed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import ValidationError

LowRow = tuple[int, ...]


class Box(NamedTuple):
    """A box in row ``row`` and column ``col``; tuple order is the row-major order."""

    row: int
    col: int


@dataclass(frozen=True)
class Partition:
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        if any(r < 0 for r in rows):
            raise ValidationError(f"negative row length in {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValidationError(f"rows must be weakly decreasing: {rows}")
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, *rows: int) -> "Partition":
        return cls(tuple(rows))

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __getitem__(self, i: int) -> int:
        return self.rows[i]

    @property
    def area(self) -> int:
        return sum(self.rows)

    @property
    def width(self) -> int:
        return self.rows[0] if self.rows else 0

    def row(self, a: int) -> int:
        """Length of row ``a`` (1-indexed); 0 past the last row."""
        return self.rows[a - 1] if 1 <= a <= len(self.rows) else 0

    def has_box(self, a: int, b: int) -> bool:
        return a >= 1 and b >= 1 and self.row(a) >= b

    def boxes(self) -> list[Box]:
        return [Box(a, b) for a, r in enumerate(self.rows, 1) for b in range(1, r + 1)]

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(o <= s for o, s in zip(other.rows, self.rows))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.rows)) + ")"


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ValidationError(f"{self.inner} is not contained in {self.outer}")

    @property
    def area(self) -> int:
        return self.outer.area - self.inner.area

    def boxes(self) -> list[Box]:
        return [
            Box(a, b)
            for a, r in enumerate(self.outer.rows, 1)
            for b in range(self.inner.row(a) + 1, r + 1)
        ]


def as_skew(shape: Partition | SkewShape | Sequence[int]) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    if not isinstance(shape, Partition):
        shape = Partition(tuple(shape))
    return SkewShape(shape)


def transpose(shape: Partition) -> Partition:
    """Conjugate partition: column heights become rows."""
    if not shape.rows:
        return Partition()
    return Partition(tuple(sum(1 for r in shape.rows if r >= b) for b in range(1, shape.width + 1)))


def drop_last_column(shape: Partition) -> Partition:
    """Delete the rightmost column of ``shape``."""
    if not shape.rows:
        raise ValidationError("cannot drop a column from the empty partition")
    w = shape.width
    return Partition(tuple(r - 1 if r == w else r for r in shape.rows))


def low_row_boxes(shape: Partition) -> list[list[Box]]:
    """Boxes with no box directly beneath them, grouped by row from the top.

    Every row from the first one holding such a box down to the last row gets a
    (possibly empty) group, so the group sizes are exactly ``low_row(shape)``.
    """
    groups: list[list[Box]] = []
    for a, r in enumerate(shape.rows, 1):
        below = shape.row(a + 1)
        groups.append([Box(a, b) for b in range(below + 1, r + 1)])
    while groups and not groups[0]:
        groups.pop(0)
    return groups


def low_row(shape: Partition) -> LowRow:
    """Sizes of the low-row segments, top to bottom, first segment nonzero.

    >>> low_row(Partition.of(4, 4, 3, 3))
    (1, 0, 3)
    """
    return tuple(len(g) for g in low_row_boxes(shape))


def reduced_shape(level: int, k: int, p: int) -> Partition:
    """The shape ``(level^(2k), p, p)`` on which sl2 ranks are counted."""
    if level < 1:
        raise ValidationError(f"level must be positive, got {level}")
    if k < 0:
        raise ValidationError(f"k must be nonnegative, got {k}")
    if not 1 <= p <= level:
        raise ValidationError(f"p must lie in [1, {level}], got {p}")
    return Partition((level,) * (2 * k) + (p, p))


def split_quantum_degree(level: int, s: int) -> tuple[int, int]:
    """The unique ``(k, p)`` with ``s = (k - 1) * level + p`` and ``1 <= p <= level``."""
    if s < 1:
        raise ValidationError(f"quantum degree must be positive, got {s}")
    k, p = divmod(s - 1, level)
    return k + 1, p + 1


def quantum_shape(level: int, s: int) -> Partition:
    """The straight shape left after deleting ``level*w1`` from ``level*w2`` plus s rim hooks."""
    k, p = split_quantum_degree(level, s)
    return Partition((level,) * (s + 2 * k - 1) + (p, p))


def _is_border_strip(cells: set[tuple[int, int]]) -> bool:
    for a, b in cells:
        if {(a + 1, b), (a, b + 1), (a + 1, b + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        a, b = stack.pop()
        for nb in ((a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def _extensions(base: Partition, extra: int, width: int) -> Iterator[tuple[int, ...]]:
    depth = len(base) + extra
    padded = base.rows + (0,) * (depth - len(base))

    def rec(j: int, prev: int, left: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if j == depth:
            if left == 0:
                yield acc
            return
        lo = padded[j]
        for v in range(lo, min(prev, lo + left) + 1):
            yield from rec(j + 1, v, left - (v - lo), acc + (v,))

    yield from rec(0, width, extra, ())


def add_rim_hook(shape: Partition, level: int, size: int) -> Partition:
    """Add the unique border strip of ``size`` boxes reaching column ``level``."""
    found = []
    for rows in _extensions(shape, size, level):
        grown = Partition(rows)
        cells = {
            (a, b)
            for a, r in enumerate(grown.rows, 1)
            for b in range(shape.row(a) + 1, r + 1)
        }
        if any(b == level for _, b in cells) and _is_border_strip(cells):
            found.append(grown)
    if len(found) != 1:
        raise ValidationError(f"expected one rim hook on {shape}, found {len(found)}")
    return found[0]


def rim_hook_shape(level: int, s: int) -> Partition:
    """``level*w2`` with ``s`` rim hooks of size ``level + 2`` added, built box by box."""
    shape = Partition((level, level))
    for _ in range(s):
        shape = add_rim_hook(shape, level, level + 2)
    return shape
