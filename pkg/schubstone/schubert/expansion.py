from __future__ import annotations

import heapq
import logging
from collections.abc import Mapping
from functools import reduce

from schubstone.errors import NotSchubertPositiveError, NotHomogeneousError
from schubstone.perm import Permutation, perm_from_code
from schubstone.poly import Polynomial, multiply, index_sequence
from .generate import schubert_poly
from .transition_product import product_terms


logger = logging.getLogger(__name__)


class SchubertExpansion(Mapping):
    """
    Positive integer combination of Schubert polynomials, keyed by canonical permutation.

    Iteration and printing follow the lexicographic order of the permutation words.
    """

    def __init__(self, terms=None):
        clean = {}
        items = () if terms is None else (terms.items() if isinstance(terms, Mapping) else terms)
        for perm, coeff in items:
            if not isinstance(perm, Permutation):
                perm = Permutation(perm)
            clean[perm] = clean.get(perm, 0) + int(coeff)
        for perm, coeff in clean.items():
            if coeff < 0:
                raise NotSchubertPositiveError(f'not Schubert-positive: coefficient {coeff} at {perm}')
        self._terms = {perm: clean[perm] for perm in sorted(clean) if clean[perm] != 0}
        if len(set(perm.length for perm in self._terms)) > 1:
            raise NotHomogeneousError('Schubert expansion mixes permutations of different lengths')

    def __getitem__(self, perm):
        return self._terms.get(perm, 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __contains__(self, perm):
        return perm in self._terms

    @property
    def degree(self):
        """Common length of the indexing permutations (-1 when empty)."""
        return next((perm.length for perm in self._terms), -1)

    def to_polynomial(self) -> Polynomial:
        result = Polynomial()
        for perm, coeff in self._terms.items():
            result = result + schubert_poly(perm) * coeff
        return result

    def to_json(self):
        return dict(terms=[dict(perm=perm.to_json(), coeff=coeff) for perm, coeff in self._terms.items()])

    def __str__(self):
        return format_terms(self._terms)

    def __repr__(self):
        return f'SchubertExpansion({self})'


def _heap_key(exp):
    #same degree throughout, so the index sequences have equal length
    return tuple(-i for i in index_sequence(exp))


def expand_in_schubert(p: Polynomial) -> SchubertExpansion:
    """
    Expand a Schubert-positive homogeneous polynomial in the Schubert basis.

    Repeatedly strip the leading monomial X^a of the remainder and subtract the
    corresponding multiple of S_v, v = perm_from_code(a).
    """
    if not p.is_homogeneous():
        raise NotHomogeneousError(f'Cannot expand a non-homogeneous polynomial of degree {p.degree}')

    remainder = dict(p.items())
    heap = [(_heap_key(exp), exp) for exp in remainder]
    heapq.heapify(heap)
    result = {}
    while heap:
        _, exp = heapq.heappop(heap)
        coeff = remainder.get(exp)
        if coeff is None:
            continue
        if coeff <= 0:
            raise NotSchubertPositiveError(f'not Schubert-positive: leading coefficient {coeff} at exponent {list(exp)}')

        v = perm_from_code(exp)
        result[v] = coeff
        for term, c in schubert_poly(v).items():
            value = remainder.get(term, 0) - coeff * c
            if value == 0:
                remainder.pop(term, None)
            else:
                if term not in remainder:
                    heapq.heappush(heap, (_heap_key(term), term))
                remainder[term] = value

    logger.debug(f'expanded polynomial with {len(p)} terms into {len(result)} Schubert polynomials')
    return SchubertExpansion(result)


def schubert_product(ws) -> Polynomial:
    """The polynomial product of S_w over the given permutations."""
    polys = sorted((schubert_poly(w) for w in ws), key=len)
    return reduce(multiply, polys, Polynomial.one())


ENGINES = ('polynomial', 'monk')


def product_expand(ws, engine='polynomial') -> SchubertExpansion:
    """
    Expand a product of finitely many Schubert polynomials in the Schubert basis.

    The polynomial engine multiplies the polynomials out and strips leading terms;
    the monk engine never leaves the Schubert basis and scales to larger embeddings.
    """
    ws = list(ws)
    if len(ws) == 0:
        raise ValueError('product_expand needs at least one permutation')
    if engine == 'polynomial':
        return expand_in_schubert(schubert_product(ws))
    if engine == 'monk':
        return SchubertExpansion(product_terms(ws))
    raise ValueError(f'unknown engine {engine!r}, expected one of {", ".join(ENGINES)}')


def format_terms(terms, symbol='S'):
    """Render {perm: coeff} as "S[3,2,4,1] + 2*S[...]" in the given order."""
    parts = []
    for perm, coeff in terms.items():
        word = ','.join(str(x) for x in perm.word) or '1'
        name = f'{symbol}[{word}]'
        parts.append(name if coeff == 1 else f'{coeff}*{name}')
    return ' + '.join(parts) if parts else '0'
