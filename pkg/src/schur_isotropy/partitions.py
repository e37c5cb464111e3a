"""Partition shapes: parsing, hooks, contents, conjugation, and box surgery."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    BoxOutOfShape,
    EmptyPartition,
    MalformedInput,
    NonPositivePart,
    NotWeaklyDecreasing,
)


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so every shape has a single
    canonical value and the empty partition is ``Partition()``.  Instances
    compare and hash as plain tuples, which also gives lexicographic order.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        previous = None
        for p in parts:
            if not isinstance(p, int):
                raise MalformedInput(f"part {p!r} is not an integer")
            if p <= 0:
                raise NonPositivePart(f"part {p} is not positive")
            if previous is not None and p > previous:
                raise NotWeaklyDecreasing(f"parts {previous},{p} increase")
            previous = p
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    @property
    def size(self) -> int:
        """Total number of boxes."""
        return sum(self)

    def part(self, row: int) -> int:
        """1-based part, zero beyond the last row."""
        return self[row - 1] if 1 <= row <= len(self) else 0

    def conjugate(self) -> "Partition":
        """Shape reflected along the main diagonal."""
        if not self:
            return self
        return Partition(sum(1 for p in self if p > col) for col in range(self[0]))

    def is_rectangle(self) -> bool:
        """True when all parts are equal (vacuously true for the empty shape)."""
        return len(set(self)) <= 1

    def contains(self, other: "Partition") -> bool:
        """True when every row of ``other`` fits inside this shape."""
        return all(p <= self.part(row + 1) for row, p in enumerate(other))

    def as_text(self) -> str:
        """Canonical interchange form "a,b,c"; empty string for the empty shape."""
        return ",".join(map(str, self))


class Box(NamedTuple):
    """1-based (row, col) cell of a shape."""

    row: int
    col: int


def parse_partition(text: str) -> Partition:
    """Parse the canonical "a,b,c" form, tolerating whitespace.

    Input that is not sorted weakly decreasing is rejected rather than
    silently sorted, so typos surface instead of becoming a conjugate mix-up.
    """
    if text.strip() == "":
        return Partition()
    parts = []
    for token in text.split(","):
        token = token.strip()
        try:
            parts.append(int(token))
        except ValueError:
            raise MalformedInput(f"cannot parse part {token!r}") from None
    for p in parts:
        if p <= 0:
            raise NonPositivePart(f"part {p} is not positive")
    for left, right in zip(parts, parts[1:]):
        if right > left:
            raise NotWeaklyDecreasing(f"parts {left},{right} increase")
    return Partition(parts)


def boxes(shape: Partition) -> Iterator[Box]:
    """All boxes of the shape in row-major order."""
    for row, width in enumerate(shape, start=1):
        for col in range(1, width + 1):
            yield Box(row, col)


def _require_box(shape: Partition, box: Box) -> None:
    row, col = box
    if row < 1 or col < 1 or row > len(shape) or col > shape[row - 1]:
        raise BoxOutOfShape(f"box {tuple(box)} not in shape {shape.as_text() or '()'}")


def hook_length(shape: Partition, box: Box) -> int:
    """Number of boxes to the right plus boxes below plus one."""
    _require_box(shape, box)
    row, col = box
    return (shape[row - 1] - col) + (shape.conjugate()[col - 1] - row) + 1


def content(shape: Partition, box: Box) -> int:
    """Column index minus row index."""
    _require_box(shape, box)
    return box.col - box.row


def horizontal_strip_predecessors(shape: Partition) -> list[Partition]:
    """All shapes obtained by deleting at most one box per column.

    Returns every ``mu`` with ``shape[i+1] <= mu[i] <= shape[i]`` (so the
    skew difference is a horizontal strip), including ``shape`` itself, in
    lexicographically decreasing order.  The empty shape yields ``[()]``.
    """
    if not shape:
        return [Partition()]
    ranges = []
    for i, width in enumerate(shape):
        low = shape[i + 1] if i + 1 < len(shape) else 0
        ranges.append(range(low, width + 1))
    return sorted((Partition(choice) for choice in product(*ranges)), reverse=True)


def remove_corner_box(shape: Partition) -> Partition:
    """Delete the last box of the last row."""
    if not shape:
        raise EmptyPartition("no box to remove")
    return Partition(shape[:-1] + (shape[-1] - 1,))


def strip_full_height_columns(shape: Partition) -> Partition:
    """Delete every column whose height equals the number of rows.

    A rectangle strips all the way down to the empty shape.
    """
    if not shape:
        raise EmptyPartition("nothing to strip")
    return Partition(p - shape[-1] for p in shape)


def pieri_add_one_box(shape: Partition, max_length: int) -> list[Partition]:
    """All shapes obtained by adding one box, keeping at most ``max_length`` rows.

    Results come back in lexicographically decreasing order.
    """
    grown = []
    for i in range(len(shape)):
        if i == 0 or shape[i] < shape[i - 1]:
            grown.append(Partition(shape[:i] + (shape[i] + 1,) + shape[i + 1 :]))
    if len(shape) < max_length:
        grown.append(Partition(shape + (1,)))
    grown.sort(reverse=True)
    return grown


def partitions_of(total: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``total`` in lexicographically decreasing order."""
    if max_part is None or max_part > total:
        max_part = total
    if total == 0:
        yield Partition()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(total - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    """All partitions of size 0 through ``max_size``, smaller sizes first."""
    for total in range(max_size + 1):
        yield from partitions_of(total)
