from schubstone.perm import Permutation
from .expansion import SchubertExpansion


def monk_terms(w: Permutation, m: int):
    """The permutations w t_jk with j <= m < k and length l(w) + 1."""
    if m < 1:
        raise ValueError(f'm must be positive, got {m}')
    result = []
    for j in range(1, m + 1):
        for k in range(m + 1, max(len(w), m) + 2):
            if w.swap_raises_length(j, k):
                result.append(w.swap(j, k))
    return result


def monk(w: Permutation, m: int) -> SchubertExpansion:
    """S_w * S_{t_{m,m+1}} by Monk's rule."""
    return SchubertExpansion((v, 1) for v in monk_terms(w, m))
