import logging
from typing import Dict

from schubstone.perm import Permutation, max_transition


logger = logging.getLogger(__name__)

Terms = Dict[Permutation, int]


def _accumulate(result: Terms, perm, coeff):
    value = result.get(perm, 0) + coeff
    if value == 0:
        result.pop(perm, None)
    else:
        result[perm] = value


def multiply_by_variable(terms: Terms, r) -> Terms:
    """
    x_r * sum c_w S_w, from x_r = S_{s_r} - S_{s_{r-1}} and Monk's rule:
    x_r S_w = sum over k > r of S_{w t_rk} - sum over j < r of S_{w t_jr}, length-raising swaps only.
    """
    result = {}
    for w, coeff in terms.items():
        for k in range(r + 1, max(len(w), r) + 2):
            if w.swap_raises_length(r, k):
                _accumulate(result, w.swap(r, k), coeff)
        for j in range(1, r):
            if w.swap_raises_length(j, r):
                _accumulate(result, w.swap(j, r), -coeff)
    return result


def multiply_expansion(terms: Terms, u: Permutation) -> Terms:
    """
    (sum c_w S_w) * S_u without materializing any polynomial.

    Follows the maximal-transition recursion of u: the product with S_u is x_r times
    the product with S_{u'} plus the products with the descendants.
    """
    memo = {}
    stack = [u]
    while stack:
        top = stack[-1]
        if top in memo:
            stack.pop()
            continue
        if top.is_identity:
            memo[top] = dict(terms)
            stack.pop()
            continue

        t = max_transition(top)
        missing = [v for v in (t.u, *t.descendants.values()) if v not in memo]
        if missing:
            stack.extend(missing)
            continue

        result = multiply_by_variable(memo[t.u], t.r)
        for v in t.descendants.values():
            for perm, coeff in memo[v].items():
                _accumulate(result, perm, coeff)
        memo[top] = result
        stack.pop()

    logger.debug(f'multiplied by S_{u} through {len(memo)} transition nodes')
    return memo[u]


def product_terms(ws) -> Terms:
    """The Schubert expansion of a product, folding the factors in from longest to shortest."""
    ws = sorted(ws, key=lambda w: w.length, reverse=True)
    terms = {ws[0]: 1}
    for u in ws[1:]:
        terms = multiply_expansion(terms, u)
    return terms
