from __future__ import annotations

import logging
from collections.abc import Mapping
from typing import Dict, List

from schubstone.errors import StabilityError
from schubstone.perm import Permutation, cross


logger = logging.getLogger(__name__)


class LevelTracker:
    """
    Level-by-level bookkeeping for expansions under the 1^n x embedding.

    Level n receives the full expansion computed with n leading fixed points. Every
    term recorded at an earlier level i must reappear as 1^(n-i) x term with the same
    coefficient; whatever else appears is new at level n and (for n >= 1) may not
    start with a fixed point. Terms are stored exactly as they first appeared.
    """

    def __init__(self, label='expansion'):
        self.label = label
        self.levels: List[Dict[Permutation, int]] = []

    def __len__(self):
        return len(self.levels)

    def expected(self, n=None) -> Dict[Permutation, int]:
        """The old terms as they must appear at level n (default: the next level)."""
        if n is None:
            n = len(self.levels)
        result = {}
        for i, level in enumerate(self.levels[:n + 1]):
            for perm, coeff in level.items():
                result[cross(Permutation.identity(), perm, n - i)] = coeff
        return result

    def add_level(self, expansion: Mapping) -> Dict[Permutation, int]:
        """Record the next level and return its new terms."""
        n = len(self.levels)
        expected = self.expected(n)
        for perm, coeff in expected.items():
            found = expansion.get(perm, 0)
            if found != coeff:
                raise StabilityError(f'{self.label} level {n}: coefficient of {perm} changed from {coeff} to {found}')

        new = {perm: coeff for perm, coeff in expansion.items() if perm not in expected}
        if n >= 1:
            for perm in new:
                if perm(1) == 1:
                    raise StabilityError(f'{self.label} level {n}: new term {perm} starts with a fixed point')

        logger.debug(f'{self.label} level {n}: {len(expansion)} terms, {len(new)} new')
        self.levels.append(new)
        return new
