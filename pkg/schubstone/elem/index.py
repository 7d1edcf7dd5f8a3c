from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from schubstone.errors import ParseError, VanishingFactorError
from schubstone.poly import Polynomial, exponent_from_indices
from schubstone.util import parse_int_list


@dataclass(frozen=True, order=True)
class ElemIndex:
    """
    I = (i_1, ..., i_n) naming e_I = e_{i_1}^1 e_{i_2}^2 ... e_{i_n}^n.

    The length is significant: (0, I) and I name different products.
    """

    indices: Tuple[int, ...]

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        for k, i in enumerate(indices, start=1):
            if i < 0:
                raise ValueError(f'Elementary index entries must be nonnegative, got {i}')
            if i > k:
                raise VanishingFactorError(f'vanishing factor: e_{i}^{k} = 0 in {list(indices)}')
        object.__setattr__(self, 'indices', indices)

    @classmethod
    def parse(cls, text: str) -> ElemIndex:
        """Parse "e[1,2,0]", "[1,2,0]", "1,2,0" or "120"."""
        stripped = text.strip()
        body = stripped[1:] if stripped[:1] in ('e', 'E') else stripped
        if body.strip() == '':
            raise ParseError(text, len(text), 'empty index')
        return cls(parse_int_list(body))

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __getitem__(self, k):
        return self.indices[k]

    @property
    def degree(self):
        return sum(self.indices)

    def padded(self, k) -> ElemIndex:
        """(0^k, I)."""
        return ElemIndex((0,) * k + self.indices)

    def to_json(self):
        return list(self.indices)

    def __str__(self):
        return 'e[' + ','.join(str(i) for i in self.indices) + ']'


@lru_cache(maxsize=None)
def elementary(i, k) -> Polynomial:
    """e_i^k: the i-th elementary symmetric polynomial in x_1..x_k."""
    if i > k:
        return Polynomial()
    return Polynomial((exponent_from_indices(subset), 1) for subset in itertools.combinations(range(1, k + 1), i))


def elem_poly(index) -> Polynomial:
    if not isinstance(index, ElemIndex):
        index = ElemIndex(tuple(index))
    result = Polynomial.one()
    for k, i in enumerate(index, start=1):
        if i > 0:
            result = result * elementary(i, k)
    return result
