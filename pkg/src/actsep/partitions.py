"""Partitions of a finite carrier in first-occurrence normal form.

Block ids are assigned in order of each block's first (= least) carrier
element, so two partitions are equal iff their `block_of` sequences are
equal, and `blocks()` lists blocks sorted by least member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def normalize_block_ids(assignment: Sequence[int]) -> tuple[int, ...]:
    """Relabel arbitrary block ids to first-occurrence order starting at 0."""
    seen: dict[int, int] = {}
    out = []
    for b in assignment:
        if b not in seen:
            seen[b] = len(seen)
        out.append(seen[b])
    return tuple(out)


@dataclass(frozen=True)
class Partition:
    block_of: tuple[int, ...]

    def __post_init__(self):
        if self.block_of != normalize_block_ids(self.block_of):
            raise ValueError("block ids not in first-occurrence normal form")

    @property
    def size(self) -> int:
        return len(self.block_of)

    @property
    def index(self) -> int:
        """Number of blocks (the paper-level index of the relation)."""
        return max(self.block_of) + 1 if self.block_of else 0

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.index)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return tuple(tuple(block) for block in out)

    def block(self, x: int) -> tuple[int, ...]:
        b = self.block_of[x]
        return tuple(y for y, c in enumerate(self.block_of) if c == b)

    def same(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def is_equality(self) -> bool:
        return self.index == self.size

    def is_universal(self) -> bool:
        return self.index <= 1


def partition_from_assignment(assignment: Sequence[int]) -> Partition:
    return Partition(normalize_block_ids(assignment))


def partition_from_blocks(size: int, blocks: Iterable[Iterable[int]]) -> Partition:
    assignment = [-1] * size
    for bid, block in enumerate(blocks):
        for x in block:
            if not 0 <= x < size:
                raise ValueError(f"block member {x} out of range for size {size}")
            if assignment[x] != -1:
                raise ValueError(f"element {x} assigned to two blocks")
            assignment[x] = bid
    if -1 in assignment:
        raise ValueError(f"element {assignment.index(-1)} not covered by any block")
    return partition_from_assignment(assignment)


def equality_partition(size: int) -> Partition:
    return Partition(tuple(range(size)))


def universal_partition(size: int) -> Partition:
    return Partition(tuple(0 for _ in range(size)))
