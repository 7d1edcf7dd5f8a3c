from __future__ import annotations

from functools import lru_cache
from typing import List, Tuple

from .permutation import Permutation


def reduced_words(w: Permutation) -> List[Tuple[int, ...]]:
    """
    All reduced words (a_1, ..., a_p) with s_{a_1}...s_{a_p} = w, sorted.

    Generated by peeling right descents: if w(i) > w(i+1), every reduced word of
    w s_i extended by i is a reduced word of w.
    """
    return list(_reduced_words(w))


@lru_cache(maxsize=None)
def _reduced_words(w: Permutation) -> Tuple[Tuple[int, ...], ...]:
    if w.is_identity:
        return ((),)
    words = []
    for i in w.descents:
        words.extend(prefix + (i,) for prefix in _reduced_words(w.swap(i, i + 1)))
    return tuple(sorted(words))


def apply_word(word) -> Permutation:
    """The product s_{a_1} ... s_{a_p} of simple transpositions."""
    result = Permutation.identity()
    for a in word:
        result = result.swap(a, a + 1)
    return result


@lru_cache(maxsize=None)
def reduced_word_count(w: Permutation) -> int:
    """|R(w)| without listing the words."""
    if w.is_identity:
        return 1
    return sum(reduced_word_count(w.swap(i, i + 1)) for i in w.descents)
