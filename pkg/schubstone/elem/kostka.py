from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

import sympy

from schubstone.errors import InternalError
from schubstone.perm import Permutation
from schubstone.poly import ExponentVector
from schubstone.schubert import schubert_poly
from schubstone.util import check_max_n, trim_zeros


logger = logging.getLogger(__name__)


def staircase_exponents(n):
    """Exponent vectors a with a_k <= n - k, in lexicographic order of the padded vectors."""
    ranges = [range(n - k + 1) for k in range(1, n)]
    return [trim_zeros(a) for a in itertools.product(*ranges)]


def act(w: Permutation, v, n):
    """Rearrange coordinates: (w v)_i = v_{w(i)}."""
    return tuple(v[w(i) - 1] for i in range(1, n + 1))


@dataclass(frozen=True)
class KostkaMatrix:
    """
    The Schubert-Kostka matrix K_{w,a} (coefficient of X^a in S_w) over S_n and
    the staircase exponents, together with its inverse K^-1_{a,w}.
    """

    n: int
    perms: Tuple[Permutation, ...]
    exponents: Tuple[ExponentVector, ...]
    forward: Dict[Tuple[Permutation, ExponentVector], int]
    inverse: Dict[Tuple[ExponentVector, Permutation], int]

    def entry(self, w: Permutation, a) -> int:
        return self.forward.get((w, trim_zeros(a)), 0)

    def inverse_entry(self, a, u: Permutation) -> int:
        return self.inverse.get((trim_zeros(a), u), 0)

    def to_sympy(self):
        """(K, K^-1) as sparse sympy matrices, rows and columns in index-list order."""
        perm_pos = {w: i for i, w in enumerate(self.perms)}
        exp_pos = {a: i for i, a in enumerate(self.exponents)}
        size = len(self.perms)
        forward = sympy.SparseMatrix(size, size, {(perm_pos[w], exp_pos[a]): c for (w, a), c in self.forward.items()})
        inverse = sympy.SparseMatrix(size, size, {(exp_pos[a], perm_pos[u]): c for (a, u), c in self.inverse.items()})
        return forward, inverse

    def to_json(self):
        return dict(
            n=self.n,
            perms=[w.to_json() for w in self.perms],
            exponents=[list(a) for a in self.exponents],
            forward=[[self.entry(w, a) for a in self.exponents] for w in self.perms],
            inverse=[[self.inverse_entry(a, u) for u in self.perms] for a in self.exponents],
        )

    def __str__(self):
        def table(title, rows, cols, value):
            header = [title] + [str(c) for c in cols]
            body = [[str(r)] + [str(value(r, c)) for c in cols] for r in rows]
            widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
            return '\n'.join(' '.join(cell.rjust(width) for cell, width in zip(line, widths)) for line in [header] + body)

        exps = [list(a) for a in self.exponents]
        forward = table('K', self.perms, exps, lambda w, a: self.entry(w, a))
        inverse = table('K^-1', exps, self.perms, lambda a, u: self.inverse_entry(a, u))
        return f'{forward}\n\n{inverse}'


def kostka_matrix(n: int) -> KostkaMatrix:
    """
    Forward matrix from Schubert polynomial coefficients; inverse from the signed sum
    K^-1_{a,u} = sum over w in S_n of (-1)^l(w) K_{w0 u, w(rho) - a}, verified
    against the forward matrix.
    """
    if n < 1:
        raise ValueError(f'n must be positive, got {n}')
    check_max_n(n, 'kostka_matrix')
    return _kostka_matrix(n)


@lru_cache(maxsize=None)
def _kostka_matrix(n) -> KostkaMatrix:
    perms = tuple(Permutation.all(n))
    exponents = tuple(staircase_exponents(n))
    index_set = set(exponents)

    forward = {}
    for w in perms:
        for a, c in schubert_poly(w).items():
            if a in index_set:
                forward[(w, a)] = c

    #w(rho) for every w, with its sign
    rho = tuple(range(n - 1, -1, -1))
    shuffled = [(act(w, rho, n), -1 if w.length % 2 else 1) for w in perms]

    w0 = Permutation.longest(n)
    inverse = {}
    for u in perms:
        #nonzero K_{w0 u, b} means b = w(rho) - a is an exponent of S_{w0 u}
        for b, c in schubert_poly(w0 * u).items():
            b = b + (0,) * (n - len(b))
            for vector, sign in shuffled:
                a = trim_zeros(x - y for x, y in zip(vector, b))
                if a in index_set and all(x >= y for x, y in zip(vector, b)):
                    inverse[(a, u)] = inverse.get((a, u), 0) + sign * c
    inverse = {key: c for key, c in inverse.items() if c != 0}

    result = KostkaMatrix(n, perms, exponents, forward, inverse)
    k, k_inv = result.to_sympy()
    if k * k_inv != sympy.SparseMatrix.eye(len(perms)):
        raise InternalError(f'Kostka inverse for n={n} does not invert the forward matrix')
    logger.debug(f'kostka matrix n={n}: {len(forward)} forward and {len(inverse)} inverse entries')
    return result
