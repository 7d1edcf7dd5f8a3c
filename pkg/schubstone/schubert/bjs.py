from functools import lru_cache

from schubstone.perm import Permutation, reduced_words
from schubstone.poly import Polynomial, exponent_from_indices


def compatible_sequences(word):
    """
    Yield the sequences (i_1 <= ... <= i_p) compatible with the reduced word:
    i_j <= a_j, and i_j < i_{j+1} whenever a_j < a_{j+1}.
    """
    p = len(word)

    def extend(prefix):
        j = len(prefix)
        if j == p:
            yield tuple(prefix)
            return
        if j == 0:
            low = 1
        else:
            low = prefix[-1] + (1 if word[j - 1] < word[j] else 0)
        for i in range(low, word[j] + 1):
            prefix.append(i)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


@lru_cache(maxsize=None)
def schubert_bjs(w: Permutation) -> Polynomial:
    """Schubert polynomial as a sum over reduced words and their compatible sequences."""
    terms = {}
    for word in reduced_words(w):
        for seq in compatible_sequences(word):
            exp = exponent_from_indices(seq)
            terms[exp] = terms.get(exp, 0) + 1
    return Polynomial(terms)
