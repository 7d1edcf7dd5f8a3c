from __future__ import annotations

import itertools
import math
import logging
from dataclasses import dataclass

import sympy

from schubstone.perm import Permutation
from schubstone.schubert import schubert_poly
from schubstone.util import check_max_n
from .index import ElemIndex, elem_poly
from .kostka import staircase_exponents


logger = logging.getLogger(__name__)


def standard_indices(n):
    """All J = (j_1, ..., j_{n-1}) with 0 <= j_k <= k."""
    return [ElemIndex(J) for J in itertools.product(*(range(k + 1) for k in range(1, n)))]


@dataclass(frozen=True)
class BasisReport:
    n: int
    size: int
    monomial_count: int
    elem_count: int
    elem_rank: int
    schubert_rank: int
    schubert_in_elem_span: bool

    @property
    def elem_independent(self):
        return self.elem_rank == self.elem_count

    def to_json(self):
        return dict(
            n=self.n,
            size=self.size,
            monomial_count=self.monomial_count,
            elem_count=self.elem_count,
            elem_rank=self.elem_rank,
            schubert_rank=self.schubert_rank,
            elem_independent=self.elem_independent,
            schubert_in_elem_span=self.schubert_in_elem_span,
        )


def basis_report(n: int) -> BasisReport:
    """Rank checks for the staircase monomials, standard elementary monomials and S_w, w in S_n."""
    check_max_n(n, 'basis_report')
    monomials = staircase_exponents(n)
    position = {a: i for i, a in enumerate(monomials)}

    def row(poly):
        entries = [0] * len(monomials)
        for a, c in poly.items():
            entries[position[a]] = c
        return entries

    elem = sympy.Matrix([row(elem_poly(J)) for J in standard_indices(n)])
    schubert = sympy.Matrix([row(schubert_poly(w)) for w in Permutation.all(n)])
    elem_rank = elem.rank()
    joint_rank = elem.col_join(schubert).rank()

    report = BasisReport(
        n=n,
        size=math.factorial(n),
        monomial_count=len(monomials),
        elem_count=elem.rows,
        elem_rank=elem_rank,
        schubert_rank=schubert.rank(),
        schubert_in_elem_span=joint_rank == elem_rank,
    )
    logger.debug(f'basis report: {report.to_json()}')
    return report
