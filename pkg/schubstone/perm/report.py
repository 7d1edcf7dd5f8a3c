from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .permutation import Permutation, Code
from .diagram import Diagram, diagram
from .stats import PermStats, perm_stats
from .transition import TransitionData, max_transition
from .words import reduced_word_count


@dataclass(frozen=True)
class PermReport:
    """Everything the `perm` command shows about one permutation."""

    perm: Permutation
    code: Code
    stats: PermStats
    diagram: Diagram
    reduced_word_count: int
    transition: Optional[TransitionData]

    def to_json(self):
        return dict(
            perm=self.perm.to_json(),
            code=list(self.code),
            stats=self.stats.to_json(),
            diagram=self.diagram.to_json(),
            reduced_word_count=self.reduced_word_count,
            transition=None if self.transition is None else self.transition.to_json(),
        )

    def __str__(self):
        s = self.stats
        lines = [
            f'perm: {self.perm}',
            f'code: {list(self.code)}',
            f'length: {s.length}',
            f'descents: {list(s.descents)}',
            f'grassmannian: {str(s.is_grassmannian).lower()}',
            f'one_position: {s.one_position}',
            f'reduced words: {self.reduced_word_count}',
        ]
        t = self.transition
        if t is not None:
            children = ', '.join(f'{j}:{v}' for j, v in sorted(t.descendants.items()))
            lines.append(f'max transition: r={t.r} s={t.s} u={t.u} descendants={{{children}}}')
        lines.append('diagram:')
        lines.append(str(self.diagram))
        return '\n'.join(lines)


def perm_report(w: Permutation) -> PermReport:
    return PermReport(
        perm=w,
        code=w.code,
        stats=perm_stats(w),
        diagram=diagram(w),
        reduced_word_count=reduced_word_count(w),
        transition=None if w.is_identity else max_transition(w),
    )
