"""Lattice paths in Young's lattice with diagonal labels.

A path is a chain of partitions adding one box per step.  Boxes are
(row, col) pairs with row 1 at the top; the diagonal label of a box is
col - row.  A block of consecutive steps with strictly decreasing labels
adds a vertical strip (at most one box per row), and a path cut into such
blocks by an ascent composition is the basic object counted throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import FusionContext, Partition, is_restricted, normalize

Box = tuple[int, int]


def diagonal_label(box: Box) -> int:
    """col - row; constant along diagonals."""
    row, col = box
    return col - row


def add_box(shape, box: Box) -> Partition:
    """Shape with one more box; raises if the box is not addable."""
    row, col = box
    rows = list(shape) + [0] * max(0, row - len(shape))
    if rows[row - 1] + 1 != col:
        raise ValueError(f"box {box} does not extend row {row} of {shape}")
    if row > 1 and rows[row - 2] < col:
        raise ValueError(f"box {box} not addable to {shape}")
    rows[row - 1] += 1
    return tuple(rows)


def addable_box(shape, diag: int) -> Box | None:
    """The unique addable box of the shape on the given diagonal, if any."""
    shape = tuple(shape)
    for row in range(1, len(shape) + 2):
        col = (shape[row - 1] if row <= len(shape) else 0) + 1
        if col - row == diag and (row == 1 or shape[row - 2] >= col):
            return (row, col)
    return None


def vertical_strips(shape, size: int, within=None, max_rows: int | None = None):
    """All ways to add ``size`` boxes to ``shape``, no two in the same row.

    Yields (new_shape, boxes) with boxes in add order (labels strictly
    decreasing, i.e. top row first).  ``within`` restricts to subdiagrams of
    a target; ``max_rows`` caps the number of rows.
    """
    shape = tuple(shape)
    if size < 0:
        return
    if size == 0:
        if within is None or _fits_inside(shape, within):
            yield shape, ()
        return
    nrows = len(shape) + size
    if within is not None:
        nrows = min(nrows, len(within))
    if max_rows is not None:
        nrows = min(nrows, max_rows)

    def rec(row, left, current: list[int], rows_used: list[int]):
        if left == 0:
            yield tuple(current), tuple(
                (r, current[r - 1]) for r in rows_used
            )
            return
        if row > nrows or nrows - row + 1 < left:
            return
        # skip this row
        yield from rec(row + 1, left, current, rows_used)
        # place a box in this row
        col = (current[row - 1] if row <= len(current) else 0) + 1
        prev = current[row - 2] if 1 <= row - 1 <= len(current) else 0
        ok = row == 1 or prev >= col
        if ok and within is not None and (row > len(within) or within[row - 1] < col):
            ok = False
        if ok:
            grown = current[:]
            if row > len(grown):
                grown.append(0)
            grown[row - 1] += 1
            rows_used.append(row)
            yield from rec(row + 1, left - 1, grown, rows_used)
            rows_used.pop()

    yield from rec(1, size, list(shape), [])


def _fits_inside(shape, within) -> bool:
    return all(
        (shape[i] if i < len(shape) else 0) <= (within[i] if i < len(within) else 0)
        for i in range(len(shape))
    )


def column_strip_targets(base, r: int, ctx: FusionContext | None = None) -> set[Partition]:
    """Partitions reachable from ``base`` by adding an r-box vertical strip.

    With a context, only restricted targets with at most n rows survive;
    r > n then yields nothing since a strip needs r distinct rows.
    """
    base = normalize(base)
    out: set[Partition] = set()
    max_rows = ctx.n if ctx is not None else None
    for target, _ in vertical_strips(base, r, max_rows=max_rows):
        target = normalize(target)
        if ctx is None or is_restricted(target, ctx):
            out.add(target)
    return out


@dataclass(frozen=True, slots=True)
class LatticePath:
    """A box path from ``base`` cut into label-decreasing blocks by ``ascents``."""

    base: Partition
    steps: tuple[Box, ...]
    ascents: tuple[int, ...]

    def __post_init__(self):
        if sum(self.ascents) != len(self.steps):
            raise ValueError("ascent blocks must account for every step")

    @property
    def target(self) -> Partition:
        shape = self.base
        for box in self.steps:
            shape = add_box(shape, box)
        return normalize(shape)

    def labels(self) -> tuple[int, ...]:
        return tuple(diagonal_label(b) for b in self.steps)


def block_slices(path: LatticePath) -> list[tuple[int, int]]:
    out = []
    start = 0
    for a in path.ascents:
        out.append((start, start + a))
        start += a
    return out


def block_boxes(path: LatticePath, i: int) -> tuple[Box, ...]:
    """Boxes of 1-indexed block i."""
    lo, hi = block_slices(path)[i - 1]
    return path.steps[lo:hi]


def block_labels(path: LatticePath, i: int) -> tuple[int, ...]:
    return tuple(diagonal_label(b) for b in block_boxes(path, i))


def boundary_shapes(path: LatticePath) -> tuple[Partition, ...]:
    """Shapes at block boundaries, from base to target inclusive."""
    shapes = [normalize(path.base)]
    shape = path.base
    pos = 0
    for a in path.ascents:
        for box in path.steps[pos : pos + a]:
            shape = add_box(shape, box)
        pos += a
        shapes.append(normalize(shape))
    return tuple(shapes)


@dataclass(frozen=True, slots=True)
class PathTableau:
    """Column i holds the labels of block i in step order (top to bottom)."""

    columns: tuple[tuple[int, ...], ...]

    def shape(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)


def path_to_tableau(path: LatticePath) -> PathTableau:
    return PathTableau(
        tuple(block_labels(path, i) for i in range(1, len(path.ascents) + 1))
    )


def block_has_bot(path: LatticePath, i: int) -> bool:
    """True when block i adds a box in the first row."""
    return any(row == 1 for row, _ in block_boxes(path, i))


def block_has_top(path: LatticePath, i: int, ctx: FusionContext) -> bool:
    """True when block i adds a box in row n."""
    return any(row == ctx.n for row, _ in block_boxes(path, i))


def path_from_label_blocks(base, label_blocks) -> LatticePath:
    """Reconstruct the path adding, per block, boxes in decreasing label order.

    Each label is placed at the unique addable box on its diagonal; raises
    when no such box exists (the label multiset does not describe a path).
    """
    base = normalize(base)
    shape = base
    steps: list[Box] = []
    for labels in label_blocks:
        for d in sorted(labels, reverse=True):
            box = addable_box(shape, d)
            if box is None:
                raise ValueError(f"no addable box on diagonal {d} of {shape}")
            shape = add_box(shape, box)
            steps.append(box)
    return LatticePath(base, tuple(steps), tuple(len(b) for b in label_blocks))


@lru_cache(maxsize=None)
def enumerate_paths(
    base,
    target,
    ascents,
    ctx: FusionContext | None = None,
) -> tuple[LatticePath, ...]:
    """All paths base -> target whose blocks have the given sizes.

    Blocks are label-decreasing (vertical strips).  Any negative block size
    means the empty set.  With a context, the partitions at block boundaries
    (including base and target) must all be restricted.
    """
    base = normalize(base)
    target = normalize(target)
    ascents = tuple(ascents)
    if any(a < 0 for a in ascents):
        return ()
    if sum(ascents) != sum(target) - sum(base):
        return ()
    if not _fits_inside(base, target):
        return ()
    if ctx is not None and not (
        is_restricted(base, ctx) and is_restricted(target, ctx)
    ):
        return ()

    out: list[LatticePath] = []

    def rec(i, shape, steps: list[Box]):
        if i == len(ascents):
            if normalize(shape) == target:
                out.append(LatticePath(base, tuple(steps), ascents))
            return
        for new_shape, boxes in vertical_strips(shape, ascents[i], within=target):
            if ctx is not None and not is_restricted(new_shape, ctx):
                continue
            steps.extend(boxes)
            rec(i + 1, new_shape, steps)
            del steps[len(steps) - len(boxes) :]

    rec(0, padded_to_target(base, target), [])
    return tuple(out)


def padded_to_target(base, target) -> tuple[int, ...]:
    return tuple(base) + (0,) * (len(target) - len(base))
