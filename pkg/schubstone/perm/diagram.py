from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from .permutation import Permutation


@dataclass(frozen=True)
class Diagram:
    """The (Rothe) diagram D(w): box (i, j) iff w(i) > j and w^-1(j) > i."""

    boxes: FrozenSet[Tuple[int, int]]

    def __len__(self):
        return len(self.boxes)

    def __contains__(self, box):
        return box in self.boxes

    def row_counts(self) -> Tuple[int, ...]:
        """Number of boxes in rows 1, 2, ... up to the last nonempty row."""
        counts = Counter(i for i, _ in self.boxes)
        if not counts:
            return ()
        return tuple(counts.get(i, 0) for i in range(1, max(counts) + 1))

    def column(self, j):
        """Sorted rows of the boxes in column j."""
        return sorted(i for i, col in self.boxes if col == j)

    def within_rows(self, rows):
        """True if every box lies in the first `rows` rows."""
        return all(i <= rows for i, _ in self.boxes)

    def __str__(self):
        if not self.boxes:
            return '(empty diagram)'
        height = max(i for i, _ in self.boxes)
        width = max(j for _, j in self.boxes)
        lines = []
        for i in range(1, height + 1):
            lines.append(' '.join('#' if (i, j) in self.boxes else '.' for j in range(1, width + 1)))
        return '\n'.join(lines)

    def to_json(self):
        return [list(box) for box in sorted(self.boxes)]


def diagram(w: Permutation) -> Diagram:
    inv = w.inverse()
    n = len(w)
    boxes = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, w(i))
        if inv(j) > i
    )
    return Diagram(boxes)
