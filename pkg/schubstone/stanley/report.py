from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from schubstone.errors import warning
from schubstone.util import is_interval
from .stable import StableExpansion


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StabilityReport:
    stability_number: Optional[int]
    conjecture_holds: bool
    grassmannian_bound_ok: Optional[bool]
    general_bound_ok: Optional[bool]
    code_bound: int
    one_positions: Tuple[int, ...]
    one_positions_interval: bool

    def to_json(self):
        return dict(
            stability_number=self.stability_number,
            conjecture_holds=self.conjecture_holds,
            grassmannian_bound_ok=self.grassmannian_bound_ok,
            general_bound_ok=self.general_bound_ok,
            code_bound=self.code_bound,
            one_positions=list(self.one_positions),
            one_positions_interval=self.one_positions_interval,
        )

    def __str__(self):
        def show(value):
            return 'n/a' if value is None else str(value).lower()

        positions = ','.join(str(p) for p in self.one_positions)
        return '\n'.join([
            f'stability_number: {show(self.stability_number)}',
            f'conjecture_holds: {show(self.conjecture_holds)}',
            f'grassmannian_bound_ok: {show(self.grassmannian_bound_ok)}',
            f'general_bound_ok: {show(self.general_bound_ok)} (bound {self.code_bound})',
            f'one_positions: {{{positions}}} interval: {show(self.one_positions_interval)}',
        ])


def stability_report(e: StableExpansion, *factors) -> StabilityReport:
    """
    Stability diagnostics for a computed stable expansion.

    The code-length bound max l(c(w)) is proven when some factor is Grassmannian
    (together with s = w^-1(1) - 1 for a squared Grassmannian w with w(1) != 1);
    for other pairs it is only reported.
    """
    if len(factors) == 0:
        factors = e.factors

    number = e.stability_number
    bound = max(len(w.code) for w in factors)
    bound_ok = None if number is None else number <= bound

    grassmannian_ok = None
    if any(w.is_grassmannian for w in factors):
        grassmannian_ok = bound_ok
        if len(factors) == 2 and factors[0] == factors[1]:
            w = factors[0]
            if not w.is_identity and w(1) != 1:
                grassmannian_ok = bool(grassmannian_ok) and number == w.one_position - 1
    elif bound_ok is False:
        warning(f'Stability number {number} exceeds the code-length bound {bound} for {", ".join(map(str, factors))}')

    if not e.gap_free:
        warning(f'Found a gap in the stable expansion levels for {", ".join(map(str, factors))}')

    positions = tuple(e.one_positions)
    report = StabilityReport(
        stability_number=number,
        conjecture_holds=e.gap_free,
        grassmannian_bound_ok=grassmannian_ok,
        general_bound_ok=bound_ok,
        code_bound=bound,
        one_positions=positions,
        one_positions_interval=is_interval(positions),
    )
    logger.debug(f'stability report: {report.to_json()}')
    return report
