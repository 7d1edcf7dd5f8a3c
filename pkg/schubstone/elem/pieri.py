from collections import Counter

from schubstone.perm import Permutation
from schubstone.schubert import SchubertExpansion


def pieri_operator(w: Permutation, i, j):
    """T_ij: w t_ij if that raises the length by exactly one, else None."""
    return w.swap(i, j) if w.swap_raises_length(i, j) else None


def pieri(r: int, k: int, w: Permutation) -> SchubertExpansion:
    """
    e_r^k * S_w as a sum of T_{i_1 j_1} ... T_{i_r j_r} S_w.

    The i's are distinct and at most k, the j's exceed k and satisfy
    j_1 <= ... <= j_r. T_{i_r j_r} acts first, so the j's never increase along
    the way.
    """
    if not 1 <= r <= k:
        raise ValueError(f'Pieri rule needs 1 <= r <= k, got r={r}, k={k}')

    top = max(len(w), k) + r
    result = Counter()

    def apply(v, steps, used, j_max):
        if steps == r:
            result[v] += 1
            return
        for j in range(k + 1, j_max + 1):
            for i in range(1, k + 1):
                if i in used:
                    continue
                child = pieri_operator(v, i, j)
                if child is not None:
                    apply(child, steps + 1, used | {i}, j)

    apply(w, 0, frozenset(), top)
    return SchubertExpansion(result)
