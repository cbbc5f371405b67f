"""Filled Young diagrams over Z/k, partitions and multipartitions.

A (k,+)-row of length p starting at label a carries the box labels
a, a-1, ..., a-p+1 reduced into [1, k] (0 is identified with k); a (k,-)-row
carries a, a+1, ..., a+p-1.  A diagram is a multiset of rows; it is stored in
a unique canonical order (length decreasing, then start increasing) so that
equality and hashing are structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product
from math import gcd
from typing import Iterable, Sequence

PLUS = "+"
MINUS = "-"
SIGNS = (PLUS, MINUS)

Partition = tuple[int, ...]
MultiPartition = tuple[Partition, ...]
DimensionVector = tuple[int, ...]


def reduce_label(value: int, k: int) -> int:
    """Reduce an integer to its representative in [1, k]."""
    return (value - 1) % k + 1


@dataclass(frozen=True)
class FilledRow:
    length: int
    start: int

    def box_labels(self, k: int, sign: str) -> tuple[int, ...]:
        """Labels carried by the row's boxes, left to right."""
        step = -1 if sign == PLUS else 1
        return tuple(reduce_label(self.start + step * t, k) for t in range(self.length))


def _row_key(row: FilledRow) -> tuple[int, int]:
    return (-row.length, row.start)


def _check_row(row: FilledRow, k: int) -> None:
    if row.length < 1:
        raise ValueError(f"row length must be >= 1, got {row.length}")
    if not 1 <= row.start <= k:
        raise ValueError(f"row start {row.start} out of range [1, {k}]")


@dataclass(frozen=True)
class FilledDiagram:
    modulus: int
    sign: str
    rows: tuple[FilledRow, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if self.sign not in SIGNS:
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")
        for row in self.rows:
            _check_row(row, self.modulus)
        if list(self.rows) != sorted(self.rows, key=_row_key):
            raise ValueError("rows not in canonical order; build via canonicalize()")

    @property
    def size(self) -> int:
        return sum(r.length for r in self.rows)

    @property
    def is_empty(self) -> bool:
        return not self.rows

    @property
    def partition(self) -> Partition:
        """Underlying partition: the row lengths, weakly decreasing."""
        return tuple(r.length for r in self.rows)

    @property
    def parts(self) -> tuple[int, ...]:
        """Distinct row lengths, decreasing."""
        seen: list[int] = []
        for r in self.rows:
            if not seen or seen[-1] != r.length:
                seen.append(r.length)
        return tuple(seen)

    @property
    def part_gcd(self) -> int:
        """gcd of the row lengths; 0 for the empty diagram."""
        g = 0
        for r in self.rows:
            g = gcd(g, r.length)
        return g

    def multiplicities(self, length: int) -> tuple[int, ...]:
        """Number of rows of the given length per start label 1..k."""
        out = [0] * self.modulus
        for r in self.rows:
            if r.length == length:
                out[r.start - 1] += 1
        return tuple(out)

    def start_labels(self) -> tuple[int, ...]:
        return tuple(r.start for r in self.rows)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        # underlying partition decreasing lexicographically, then starts increasing
        return (tuple(-p for p in self.partition), self.start_labels())

    def __str__(self) -> str:
        if not self.rows:
            return "empty"
        groups: list[list] = []
        for row in self.rows:
            if groups and groups[-1][0] == row:
                groups[-1][1] += 1
            else:
                groups.append([row, 1])
        return " ".join(
            f"{r.length}_{r.start}" + (f"^{n}" if n > 1 else "") for r, n in groups
        )


def canonicalize(rows: Iterable, k: int, sign: str) -> FilledDiagram:
    """Build the canonical diagram for a multiset of (length, start) rows.

    Idempotent and independent of the input row order; rows may be given as
    FilledRow instances or (length, start) pairs.
    """
    normalized = []
    for row in rows:
        if not isinstance(row, FilledRow):
            length, start = row
            row = FilledRow(int(length), int(start))
        normalized.append(row)
    normalized.sort(key=_row_key)
    return FilledDiagram(k, sign, tuple(normalized))


def empty_diagram(k: int, sign: str = MINUS) -> FilledDiagram:
    return FilledDiagram(k, sign, ())


def dimension_vector(diagram: FilledDiagram) -> DimensionVector:
    """Box counts per label 1..k."""
    counts = [0] * diagram.modulus
    for row in diagram.rows:
        for lab in row.box_labels(diagram.modulus, diagram.sign):
            counts[lab - 1] += 1
    return tuple(counts)


def _row_counts(row: FilledRow, k: int, sign: str) -> tuple[int, ...]:
    counts = [0] * k
    for lab in row.box_labels(k, sign):
        counts[lab - 1] += 1
    return tuple(counts)


def enumerate_diagrams(k: int, sign: str, d: Sequence[int]) -> list[FilledDiagram]:
    """All diagrams with the given box counts per label, in canonical order.

    The list is sorted by underlying partition (decreasing lexicographically),
    then by the start-label sequence.
    """
    d = tuple(d)
    if len(d) != k:
        raise ValueError(f"expected {k} box counts, got {len(d)}")
    if any(v < 0 for v in d):
        raise ValueError("box counts must be nonnegative")
    total = sum(d)
    candidates = [
        (FilledRow(length, start), _row_counts(FilledRow(length, start), k, sign))
        for length in range(total, 0, -1)
        for start in range(1, k + 1)
    ]
    out: list[FilledDiagram] = []
    chosen: list[FilledRow] = []
    remaining = list(d)

    def extend(idx: int, left: int) -> None:
        if left == 0:
            out.append(FilledDiagram(k, sign, tuple(chosen)))
            return
        for j in range(idx, len(candidates)):
            row, counts = candidates[j]
            if row.length > left:
                continue
            if all(remaining[i] >= counts[i] for i in range(k)):
                for i in range(k):
                    remaining[i] -= counts[i]
                chosen.append(row)
                extend(j, left - row.length)
                chosen.pop()
                for i in range(k):
                    remaining[i] += counts[i]

    extend(0, total)
    out.sort(key=FilledDiagram.sort_key)
    return out


def enumerate_by_size(k: int, sign: str, n: int) -> list[FilledDiagram]:
    """All diagrams with n boxes in total, over every box-count vector."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    candidates = [
        FilledRow(length, start)
        for length in range(n, 0, -1)
        for start in range(1, k + 1)
    ]
    out: list[FilledDiagram] = []
    chosen: list[FilledRow] = []

    def extend(idx: int, left: int) -> None:
        if left == 0:
            out.append(FilledDiagram(k, sign, tuple(chosen)))
            return
        for j in range(idx, len(candidates)):
            row = candidates[j]
            if row.length > left:
                continue
            chosen.append(row)
            extend(j, left - row.length)
            chosen.pop()

    extend(0, n)
    out.sort(key=FilledDiagram.sort_key)
    return out


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of n in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("partition size must be nonnegative")
    out: list[Partition] = []

    def extend(left: int, cap: int, prefix: Partition) -> None:
        if left == 0:
            out.append(prefix)
            return
        for part in range(min(left, cap), 0, -1):
            extend(left - part, part, prefix + (part,))

    extend(n, n, ())
    return tuple(out)


def multipartitions(iota: int, n: int) -> tuple[MultiPartition, ...]:
    """All iota-tuples of partitions with total size n.

    Ordered by the size composition (first slot largest first), then slotwise
    with the leftmost slot varying slowest.
    """
    if iota < 1:
        raise ValueError("number of components must be >= 1")
    if n < 0:
        raise ValueError("total size must be nonnegative")

    def compositions(slots: int, left: int):
        if slots == 1:
            yield (left,)
            return
        for first in range(left, -1, -1):
            for rest in compositions(slots - 1, left - first):
                yield (first,) + rest

    out: list[MultiPartition] = []
    for comp in compositions(iota, n):
        for combo in product(*(partitions(c) for c in comp)):
            out.append(tuple(combo))
    return tuple(out)


def diagram_to_json(diagram: FilledDiagram) -> dict:
    return {
        "modulus": diagram.modulus,
        "sign": diagram.sign,
        "rows": [{"len": r.length, "start": r.start} for r in diagram.rows],
    }


def diagram_from_json(obj: dict) -> FilledDiagram:
    rows = [(r["len"], r["start"]) for r in obj["rows"]]
    return canonicalize(rows, obj["modulus"], obj["sign"])
