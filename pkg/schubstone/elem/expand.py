from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from schubstone.perm import Permutation
from schubstone.schubert import SchubertExpansion, expand_in_schubert
from schubstone.stanley import LevelTracker
from .index import ElemIndex, elem_poly
from .pieri import pieri


logger = logging.getLogger(__name__)


def elem_to_schubert(index: ElemIndex) -> SchubertExpansion:
    """e_I = sum of beta_w S_w."""
    return expand_in_schubert(elem_poly(index))


def _last_adding_level(levels):
    for i in range(1, len(levels)):
        if len(levels[i]) == 0:
            return i - 1
    return None


@dataclass(frozen=True)
class ElemStability:
    """New terms of e_{(0^k, I)} for k = 0, 1, ... against the predicted cutoff r."""

    index: ElemIndex
    levels: Tuple[SchubertExpansion, ...]
    predicted_r: int
    observed_r: Optional[int]
    last_term_ok: Optional[bool]

    @property
    def r_matches(self):
        return self.observed_r == max(self.predicted_r, 0)

    @property
    def passed(self):
        return self.r_matches and self.last_term_ok is not False

    def to_json(self):
        return dict(
            index=self.index.to_json(),
            levels=[dict(n=i, terms=level.to_json()['terms']) for i, level in enumerate(self.levels)],
            predicted_r=self.predicted_r,
            observed_r=self.observed_r,
            r_matches=self.r_matches,
            last_term_ok=self.last_term_ok,
        )

    def __str__(self):
        lines = [f'level {i}: {level}' for i, level in enumerate(self.levels)]
        lines.append(f'predicted r: {self.predicted_r}, observed r: {self.observed_r}')
        last = 'n/a' if self.last_term_ok is None else ('ok' if self.last_term_ok else 'mismatch')
        lines.append(f'last new term: {last}')
        lines.append('pass' if self.passed else 'FAIL')
        return '\n'.join(lines)


def elem_stability(index: ElemIndex) -> ElemStability:
    """
    Run the strong-stability diagnostic for e_I.

    The prediction is that new terms keep appearing exactly up to
    r = i_1 + ... + i_n - n, the last one being the single permutation
    2 3 ... (r+n+1) 1. Both claims are checked, not assumed.
    """
    n = len(index)
    predicted = index.degree - n
    tracker = LevelTracker(f'{index}')
    for k in range(max(predicted, 0) + 2):
        tracker.add_level(elem_to_schubert(index.padded(k)))

    levels = tuple(SchubertExpansion(level) for level in tracker.levels)
    last_ok = None
    if predicted >= 1:
        expected = Permutation(tuple(range(2, predicted + n + 2)) + (1,))
        last_ok = set(levels[predicted]) == {expected}

    result = ElemStability(index, levels, predicted, _last_adding_level(levels), last_ok)
    if not result.passed:
        logger.warning(f'strong stability prediction failed for {index}: predicted r={predicted}, observed {result.observed_r}')
    return result


@dataclass(frozen=True)
class PieriStability:
    """New terms of e_i^{j+k} S_{1^k x w} for k = 0..i+1 against the cutoff i - m."""

    i: int
    j: int
    w: Permutation
    levels: Tuple[SchubertExpansion, ...]
    predicted_cutoff: int
    observed_cutoff: Optional[int]

    @property
    def matches(self):
        return self.observed_cutoff == self.predicted_cutoff

    def to_json(self):
        return dict(
            i=self.i,
            j=self.j,
            w=self.w.to_json(),
            levels=[dict(n=k, terms=level.to_json()['terms']) for k, level in enumerate(self.levels)],
            predicted_cutoff=self.predicted_cutoff,
            observed_cutoff=self.observed_cutoff,
            matches=self.matches,
        )

    def __str__(self):
        lines = [f'level {k}: {level}' for k, level in enumerate(self.levels)]
        lines.append(f'predicted cutoff: {self.predicted_cutoff}, observed cutoff: {self.observed_cutoff}')
        return '\n'.join(lines)


def moves_to_pass(w: Permutation, j) -> int:
    """Simple transpositions needed to bring the letter 1 past position j."""
    return max(0, j + 1 - w.one_position)


def pieri_stability(i: int, j: int, w: Permutation) -> PieriStability:
    """
    Observe the levels at which e_i^{j+k} S_{1^k x w} gains new terms.

    The observed cutoff is the last level that adds terms; the prediction is
    max(i - m, 0) with m = moves_to_pass(w, j).
    """
    tracker = LevelTracker(f'e_{i}^{j} * S_{w}')
    for k in range(i + 2):
        tracker.add_level(pieri(i, j + k, w.embed(k)))
    levels = tuple(SchubertExpansion(level) for level in tracker.levels)
    predicted = max(i - moves_to_pass(w, j), 0)
    result = PieriStability(i, j, w, levels, predicted, _last_adding_level(levels))
    logger.debug(f'pieri stability e_{i}^{j} * S_{w}: predicted {predicted}, observed {result.observed_cutoff}')
    return result
