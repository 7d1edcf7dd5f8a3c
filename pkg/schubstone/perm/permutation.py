from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

from schubstone.errors import InvalidPermutationError
from schubstone.util import parse_int_list, trim_zeros


# Finitely supported nonnegative sequence, trailing zeros stripped.
Code = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    """
    A permutation of S_infinity in one-line notation.

    The word is stored in canonical form: trailing fixed points are stripped, so
    `Permutation((2, 1, 3)) == Permutation((2, 1))`. Leading fixed points are
    kept, they encode the 1^n x w embedding. Positions past the word are fixed.
    Ordering is lexicographic on the word.
    """

    word: Tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidPermutationError(f'{list(word)} is not a permutation of 1..{len(word)}')
        end = len(word)
        while end > 0 and word[end - 1] == end:
            end -= 1
        object.__setattr__(self, 'word', word[:end])

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse "3241" or "10,2,3,1,..." (compact digits only when every letter is <= 9)."""
        return cls(parse_int_list(text))

    @classmethod
    def identity(cls) -> Permutation:
        return cls(())

    @classmethod
    def transposition(cls, i, j) -> Permutation:
        """t_ij, exchanging i and j."""
        return cls.identity().swap(i, j)

    @classmethod
    def longest(cls, n) -> Permutation:
        """w0 = n(n-1)...1 in S_n."""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def all(cls, n):
        """Yield every permutation of S_n, in lexicographic order."""
        for word in itertools.permutations(range(1, n + 1)):
            yield cls(word)

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self.word):
            return self.word[i - 1]
        return i

    def __len__(self):
        """Size n of the canonical word (smallest n with w in S_n)."""
        return len(self.word)

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: (w*u)(i) = w(u(i))."""
        n = max(len(self), len(other))
        return Permutation(tuple(self(other(i)) for i in range(1, n + 1)))

    def __str__(self):
        if len(self.word) == 0:
            return '1'
        if all(x <= 9 for x in self.word):
            return ''.join(str(x) for x in self.word)
        return ','.join(str(x) for x in self.word)

    def __repr__(self):
        return f'Permutation({self})'

    def padded(self, n) -> Tuple[int, ...]:
        """The one-line word viewed in S_n (n >= len(self))."""
        return tuple(self(i) for i in range(1, max(n, len(self)) + 1))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.word)
        for i, x in enumerate(self.word, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def swap(self, i, j) -> Permutation:
        """w t_ij: exchange the values in positions i and j."""
        word = list(self.padded(max(i, j)))
        word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
        return Permutation(tuple(word))

    def swap_raises_length(self, i, j) -> bool:
        """True if l(w t_ij) = l(w) + 1: w(i) < w(j) with no value in between at positions between i and j."""
        if i > j:
            i, j = j, i
        a, b = self(i), self(j)
        if a > b:
            return False
        return not any(a < self(p) < b for p in range(i + 1, j))

    def embed(self, k) -> Permutation:
        """1^k x w."""
        return cross(Permutation.identity(), self, k)

    def to_json(self):
        return list(self.word)

    @cached_property
    def length(self) -> int:
        """Number of inversions."""
        return sum(self.code)

    @cached_property
    def code(self) -> Code:
        return code(self)

    @cached_property
    def descents(self) -> Tuple[int, ...]:
        w = self.word
        return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])

    @property
    def last_descent(self):
        """Largest descent, or None for the identity."""
        return self.descents[-1] if self.descents else None

    @property
    def is_grassmannian(self):
        return len(self.descents) <= 1

    @property
    def is_identity(self):
        return len(self.word) == 0

    @property
    def one_position(self):
        """w^-1(1)."""
        return self.inverse()(1)


def code(w: Permutation) -> Code:
    """c(w)_i = #{j > i : w(j) < w(i)}."""
    word = w.word
    n = len(word)
    return trim_zeros(sum(1 for j in range(i + 1, n) if word[j] < word[i]) for i in range(n))


def perm_from_code(c) -> Permutation:
    """Inverse of `code()`; any finitely supported nonnegative sequence is a code in S_infinity."""
    c = trim_zeros(c)
    if any(x < 0 for x in c):
        raise InvalidPermutationError(f'Code entries must be nonnegative: {list(c)}')
    if len(c) == 0:
        return Permutation.identity()

    n = max(i + x for i, x in enumerate(c, start=1))
    available = list(range(1, n + 1))
    word = [available.pop(x) for x in c]
    word.extend(available)
    return Permutation(tuple(word))


def cross(w: Permutation, u: Permutation, pad: int = 0) -> Permutation:
    """
    w x u: w(1)...w(m) followed by u shifted by m, where m = max(len(w), pad).

    `cross(identity, w, n)` is the embedding 1^n x w.
    """
    if pad < 0:
        raise ValueError('pad must be nonnegative')
    m = max(len(w), pad)
    return Permutation(w.padded(m) + tuple(x + m for x in u.word))


def strip_leading_fixed(w: Permutation):
    """
    Return (k, v) with w = 1^k x v and v(1) != 1.

    The identity is returned as (0, identity).
    """
    if w.is_identity:
        return 0, w
    k = 0
    while w(k + 1) == k + 1:
        k += 1
    return k, Permutation(tuple(x - k for x in w.word[k:]))
