from schubstone.errors import InvalidPermutationError
from schubstone.perm import Permutation, reduced_words
from schubstone.poly import Polynomial


def top_polynomial(n) -> Polynomial:
    """S_w0 = x1^(n-1) x2^(n-2) ... x_(n-1)."""
    return Polynomial.monomial(tuple(range(n - 1, 0, -1)))


def schubert_dd(w: Permutation, n: int) -> Polynomial:
    """Schubert polynomial by divided differences from the top class of S_n."""
    if len(w) > n:
        raise InvalidPermutationError(f'{w} is not in S_{n}')

    word = reduced_words(w.inverse() * Permutation.longest(n))[0]
    poly = top_polynomial(n)
    for a in reversed(word):
        poly = poly.divided_difference(a)
    return poly
