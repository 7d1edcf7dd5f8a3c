from __future__ import annotations

from collections.abc import Mapping

from schubstone.errors import InvalidPermutationError
from schubstone.perm import Permutation
from schubstone.poly import Polynomial
from .index import ElemIndex, elem_poly
from .kostka import kostka_matrix


class ElemExpansion(Mapping):
    """Signed integer combination of standard elementary monomials e_J."""

    def __init__(self, terms=None):
        clean = {}
        for index, coeff in (terms or {}).items():
            if not isinstance(index, ElemIndex):
                index = ElemIndex(tuple(index))
            clean[index] = clean.get(index, 0) + coeff
        self._terms = {index: clean[index] for index in sorted(clean) if clean[index] != 0}

    def __getitem__(self, index):
        if not isinstance(index, ElemIndex):
            index = ElemIndex(tuple(index))
        return self._terms.get(index, 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def to_polynomial(self) -> Polynomial:
        result = Polynomial()
        for index, coeff in self._terms.items():
            result = result + elem_poly(index) * coeff
        return result

    def to_json(self):
        return dict(terms=[dict(index=index.to_json(), coeff=coeff) for index, coeff in self._terms.items()])

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for index, coeff in self._terms.items():
            body = str(index) if abs(coeff) == 1 else f'{abs(coeff)}*{index}'
            if not parts:
                parts.append(body if coeff > 0 else f'-{body}')
            else:
                parts.append(f'+ {body}' if coeff > 0 else f'- {body}')
        return ' '.join(parts)

    def __repr__(self):
        return f'ElemExpansion({self})'


def schubert_to_elem(v: Permutation, n: int) -> ElemExpansion:
    """
    S_v in the basis e_J, J = (j_1, ..., j_{n-1}) with j_k <= k.

    With w = v w0, S_v = sum over staircase a of K^-1_{a,w} e_J where
    j_k = k - a_{n-k}.
    """
    if len(v) > n:
        raise InvalidPermutationError(f'{v} is not in S_{n}')
    kostka = kostka_matrix(n)
    w = v * Permutation.longest(n)

    terms = {}
    for a in kostka.exponents:
        coeff = kostka.inverse_entry(a, w)
        if coeff == 0:
            continue
        padded = a + (0,) * (n - len(a))
        index = tuple(k - padded[n - k - 1] for k in range(1, n))
        terms[ElemIndex(index)] = coeff
    return ElemExpansion(terms)
