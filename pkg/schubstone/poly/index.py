"""
Exponent vectors, index sequences and the monomial order.

An exponent vector a = (a_1, a_2, ...) names the monomial X^a = x_1^a_1 x_2^a_2 ...
The same monomial is X_b = x_{b_1} ... x_{b_p} for the weakly increasing index
sequence b = b(a).

The monomial order used by the transition algorithm compares total degree first
and then the index sequences lexicographically, larger index winning. Because
a termwise-larger index sequence always wins, this is a linear extension of the
dominance order, so the top term of every Schubert polynomial S_w is X^c(w).
"""

from __future__ import annotations

from typing import Tuple

from schubstone.errors import LengthMismatchError


ExponentVector = Tuple[int, ...]
IndexSequence = Tuple[int, ...]


def index_sequence(a: ExponentVector) -> IndexSequence:
    """b(a): index i repeated a_i times."""
    return tuple(i for i, count in enumerate(a, start=1) for _ in range(count))


def exponent_from_indices(b: IndexSequence) -> ExponentVector:
    if len(b) == 0:
        return ()
    a = [0] * max(b)
    for i in b:
        if i < 1:
            raise ValueError(f'Variable indices start at 1, got {i}')
        a[i - 1] += 1
    return tuple(a)


def monomial_key(a: ExponentVector):
    """Sort key for the monomial order: bigger key = bigger monomial."""
    return (sum(a), index_sequence(a))


def _increases(b):
    return tuple(b[i] < b[i + 1] for i in range(len(b) - 1))


def is_weakly_increasing(b):
    return all(b[i] <= b[i + 1] for i in range(len(b) - 1))


def good_pair_check(b1: IndexSequence, b2: IndexSequence, n: int = None) -> bool:
    """
    True if (b1, b2) is a good pair: both weakly increasing, b1 <= b2 termwise
    and both increase at the same positions. With `n`, also require every entry
    to be at most n (a good-n pair).
    """
    b1 = tuple(b1)
    b2 = tuple(b2)
    if len(b1) != len(b2):
        raise LengthMismatchError(f'Good pair needs equal lengths, got {len(b1)} and {len(b2)}')

    if not (is_weakly_increasing(b1) and is_weakly_increasing(b2)):
        return False
    if any(x > y for x, y in zip(b1, b2)):
        return False
    if _increases(b1) != _increases(b2):
        return False
    if n is not None and any(x > n for x in b1 + b2):
        return False
    return True
