from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

from schubstone.errors import StabilityError, warning
from schubstone.perm import Permutation, cross, strip_leading_fixed
from schubstone.schubert import SchubertExpansion, product_expand, format_terms
from schubstone.util import is_interval
from .levels import LevelTracker


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StableExpansion:
    """
    Level decomposition of a product of Stanley symmetric functions.

    levels[i] holds the terms that first appear when every factor is embedded as
    1^i x w, recorded in that first embedded form.
    """

    factors: Tuple[Permutation, ...]
    levels: Tuple[SchubertExpansion, ...]
    bound_k: int
    verified: bool = False
    method: str = 'transition'
    padding: int = 0

    @property
    def stability_number(self):
        """
        The last level that still adds terms: one less than the first empty V_i (i >= 1).

        None when every computed level i >= 1 adds terms, unless level k+1 was
        verified to be empty, in which case it is k.
        """
        for i in range(1, len(self.levels)):
            if len(self.levels[i]) == 0:
                return i - 1
        if self.verified:
            return self.bound_k
        return None

    @property
    def gap_free(self):
        """Once a level adds nothing, no later level adds anything."""
        seen_empty = False
        for level in self.levels[1:]:
            if len(level) == 0:
                seen_empty = True
            elif seen_empty:
                return False
        return True

    @cached_property
    def terms(self) -> SchubertExpansion:
        """The stable expansion: every recorded term with its leading fixed points stripped."""
        result = {}
        for level in self.levels:
            for perm, coeff in level.items():
                _, v = strip_leading_fixed(perm)
                result[v] = result.get(v, 0) + coeff
        return SchubertExpansion(result)

    def at_level(self, n) -> SchubertExpansion:
        """The expansion of the product of the S_{1^n x w} implied by the recorded levels."""
        result = {}
        for i, level in enumerate(self.levels[:n + 1]):
            for perm, coeff in level.items():
                result[cross(Permutation.identity(), perm, n - i)] = coeff
        return SchubertExpansion(result)

    @property
    def one_positions(self):
        return sorted(set(v.one_position for v in self.terms))

    def to_json(self):
        return dict(
            factors=[w.to_json() for w in self.factors],
            method=self.method,
            padding=self.padding,
            bound_k=self.bound_k,
            levels=[dict(n=i, terms=level.to_json()['terms']) for i, level in enumerate(self.levels)],
            terms=self.terms.to_json()['terms'],
            stability_number=self.stability_number,
            conjecture_holds=self.gap_free,
            one_positions=self.one_positions,
            one_positions_interval=is_interval(self.one_positions),
        )

    def __str__(self):
        lines = [f'level {i}: {level}' for i, level in enumerate(self.levels)]
        lines.append(f'terms: {len(self.terms)}')
        lines.append(format_terms(self.terms, 'F'))
        return '\n'.join(lines)


def _check_leading_fixed(expansion, count, n):
    for perm in expansion:
        if any(perm(i) != i for i in range(1, count + 1)):
            raise StabilityError(f'level {n}: term {perm} does not start with 1..{count}')


def stable_product_expand(ws, *, verify=False, assume_no_gap=False, engine='monk') -> StableExpansion:
    """
    Stable expansion of the product of F_w over the given permutations.

    Runs the embedded products S_{1^n x w_1} ... S_{1^n x w_p} for n = 0..k with
    k = sum of the lengths. With `verify`, level k+1 is also computed and must add
    nothing. With `assume_no_gap`, stop at the first level that adds nothing. `engine`
    picks how each embedded product is expanded (see product_expand).
    """
    ws = tuple(ws)
    if len(ws) == 0:
        raise ValueError('stable expansion needs at least one permutation')
    if assume_no_gap and not (len(ws) == 2 and any(w.is_grassmannian for w in ws)):
        warning('Stopping at the first empty level assumes the no-gap property, which is only proven with a Grassmannian factor')

    k = sum(w.length for w in ws)
    tracker = LevelTracker('stable expansion')
    for n in range(k + 1):
        new = tracker.add_level(product_expand([w.embed(n) for w in ws], engine))
        if assume_no_gap and n >= 1 and len(new) == 0:
            logger.debug(f'no new terms at level {n}, stopping early')
            break

    if verify:
        n = k + 1
        expansion = product_expand([w.embed(n) for w in ws], engine)
        _check_leading_fixed(expansion, n - k, n)
        if dict(expansion.items()) != tracker.expected(n):
            raise StabilityError(f'level {n} past the bound {k} differs from the recorded levels')

    levels = tuple(SchubertExpansion(level) for level in tracker.levels)
    return StableExpansion(ws, levels, k, verified=verify)


def stable_expand(w: Permutation, u: Permutation, **kwargs) -> StableExpansion:
    """Stable expansion F_w * F_u = sum c^v F_v."""
    return stable_product_expand([w, u], **kwargs)
