from schubstone.perm import Permutation
from schubstone.schubert import SchubertExpansion, monk_terms
from .stable import StableExpansion


def monk_stable(w: Permutation, m: int) -> StableExpansion:
    """
    F_w * F_{t_{m,m+1}} in closed form.

    Level 0 holds the Monk terms of w. At level 1 the only new terms are
    (1 x w) t_{1,k} for k > m+1 raising the length by one, i.e. the positions
    past m where w takes a new minimum, counted from the left. From level 2 on
    position 2 is a fixed point and blocks every such swap.
    """
    base = SchubertExpansion((v, 1) for v in monk_terms(w, m))
    shifted = w.embed(1)
    extra = {shifted.swap(1, k): 1 for k in range(m + 2, len(shifted) + 2) if shifted.swap_raises_length(1, k)}

    k = w.length + 1
    levels = [base, SchubertExpansion(extra)]
    levels.extend(SchubertExpansion() for _ in range(k - 1))
    return StableExpansion((w, Permutation.transposition(m, m + 1)), tuple(levels), k, method='monk')
