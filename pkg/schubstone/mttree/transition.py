from schubstone.perm import Permutation, TransitionData, max_transition
from schubstone.poly import Polynomial
from schubstone.schubert import schubert_bjs


def transition_polynomial(t: TransitionData) -> Polynomial:
    """x_r S_u + sum of S_v over the descendants, with BJS Schubert polynomials."""
    poly = Polynomial.var(t.r) * schubert_bjs(t.u)
    for v in t.descendants.values():
        poly = poly + schubert_bjs(v)
    return poly


def transition_identity_holds(w: Permutation) -> bool:
    """Check S_w = x_r S_u + sum S_v as exact polynomials."""
    return schubert_bjs(w) == transition_polynomial(max_transition(w))
