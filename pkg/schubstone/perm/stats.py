from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .permutation import Permutation


@dataclass(frozen=True)
class PermStats:
    length: int
    descents: Tuple[int, ...]
    last_descent: Optional[int]
    is_grassmannian: bool
    one_position: int

    def to_json(self):
        return dict(
            length=self.length,
            descents=list(self.descents),
            last_descent=self.last_descent,
            is_grassmannian=self.is_grassmannian,
            one_position=self.one_position
        )


def perm_stats(w: Permutation) -> PermStats:
    return PermStats(
        length=w.length,
        descents=w.descents,
        last_descent=w.last_descent,
        is_grassmannian=w.is_grassmannian,
        one_position=w.one_position
    )
