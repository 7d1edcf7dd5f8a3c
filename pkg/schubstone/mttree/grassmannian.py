from __future__ import annotations

import logging

from schubstone.errors import NotGrassmannianError, LengthMismatchError
from schubstone.perm import Permutation, cross, strip_leading_fixed
from schubstone.schubert import SchubertExpansion
from schubstone.stanley import StableExpansion
from .tree import mt_tree


logger = logging.getLogger(__name__)


def _order_factors(w: Permutation, u: Permutation):
    """Put a Grassmannian factor second."""
    if u.is_grassmannian:
        return w, u
    if w.is_grassmannian:
        return u, w
    raise NotGrassmannianError(f'Neither {w} nor {u} is Grassmannian')


def grassmannian_product(w: Permutation, u: Permutation) -> SchubertExpansion:
    """
    S_w * S_u for Grassmannian u, read off the good leaves of the MT-tree rooted at w x u.

    With m = l(c(u)) the product equals S_{w x u} restricted to x_1..x_m, which
    needs l(c(w)) <= m. When that fails the factors are exchanged if w is
    Grassmannian too. Leading fixed points may not be added here: they change
    the finite product.
    """
    if w.is_identity:
        return SchubertExpansion({u: 1})
    if u.is_identity:
        return SchubertExpansion({w: 1})

    w, u = _order_factors(w, u)
    if len(w.code) > len(u.code):
        if not w.is_grassmannian:
            raise LengthMismatchError(f'{w} has a longer code than the Grassmannian factor {u}')
        w, u = u, w

    m = len(u.code)
    tree = mt_tree(cross(w, u, m), m)
    return tree.expansion()


def stanley_via_mt(w: Permutation, u: Permutation) -> StableExpansion:
    """
    Stable expansion of F_w * F_u for Grassmannian u using a single MT-tree.

    The factor with the shorter code gets leading fixed points until both codes
    have length m. The product S_{1^m x w} * S_{1^m x u} then already contains
    every stable term; it is read off the tree rooted at (1^m x w) x (1^m x u)
    whose good leaves have their descents in the first 2m positions. Levels are
    reconstructed from the number of leading fixed points of each leaf.

    The result is the level decomposition of the padded pair, which is what
    `factors` records. F_{1 x w} = F_w, but the F_v are not linearly
    independent, so it can differ term by term from stable_expand(w, u).
    """
    k = w.length + u.length
    if w.is_identity or u.is_identity:
        other = u if w.is_identity else w
        levels = [SchubertExpansion({other: 1})]
        levels.extend(SchubertExpansion() for _ in range(k))
        return StableExpansion((w, u), tuple(levels), k, method='mt')

    m = max(len(w.code), len(u.code))
    padding = m - min(len(w.code), len(u.code))
    factors = tuple(x.embed(m - len(x.code)) for x in (w, u))
    first, second = _order_factors(*factors)
    logger.debug(f'stanley via MT-tree: m={m}, padding={padding}')

    expansion = grassmannian_product(first.embed(m), second.embed(m))
    levels = [dict() for _ in range(max(k, m) + 1)]
    for perm, coeff in expansion.items():
        lead, v = strip_leading_fixed(perm)
        if lead >= m:
            levels[0][v.embed(lead - m)] = coeff
        else:
            levels[m - lead][v] = coeff
    return StableExpansion(factors, tuple(SchubertExpansion(level) for level in levels), k, method='mt', padding=padding)
