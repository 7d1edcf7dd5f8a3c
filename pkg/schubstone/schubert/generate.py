import logging
from typing import Dict

from schubstone.perm import Permutation, max_transition
from schubstone.poly import Polynomial


logger = logging.getLogger(__name__)

_cache: Dict[Permutation, Polynomial] = {}


def schubert_poly(w: Permutation) -> Polynomial:
    """
    Schubert polynomial via the maximal-transition recursion S_w = x_r S_u + sum S_v.

    Every descendant v is lexicographically larger than w in the same S_n and u is
    shorter, so the recursion bottoms out at the identity. Results are cached.
    """
    poly = _cache.get(w)
    if poly is not None:
        return poly

    generated = 0
    stack = [w]
    while stack:
        top = stack[-1]
        if top in _cache:
            stack.pop()
            continue
        if top.is_identity:
            _cache[top] = Polynomial.one()
            stack.pop()
            continue

        t = max_transition(top)
        needed = [t.u, *t.descendants.values()]
        missing = [v for v in needed if v not in _cache]
        if missing:
            stack.extend(missing)
            continue

        poly = Polynomial.var(t.r) * _cache[t.u]
        for v in t.descendants.values():
            poly = poly + _cache[v]
        _cache[top] = poly
        generated += 1
        stack.pop()

    logger.debug(f'generated {generated} Schubert polynomials for {w}')
    return _cache[w]


def clear_cache():
    _cache.clear()
