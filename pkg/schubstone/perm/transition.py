from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

from schubstone.errors import NoDescentError
from .permutation import Permutation


@dataclass(frozen=True)
class TransitionData:
    """
    The maximal transition of w: S_w = x_r S_u + sum of S_v over the descendants.

    r is the last descent, s the largest position with w(s) < w(r), u = w t_rs and
    descendants maps each j < r to u t_jr whenever that has the length of w.
    """

    w: Permutation
    r: int
    s: int
    u: Permutation
    descendants: Dict[int, Permutation]

    @property
    def J(self):
        return tuple(sorted(self.descendants))

    def to_json(self):
        return dict(
            w=self.w.to_json(),
            r=self.r,
            s=self.s,
            u=self.u.to_json(),
            descendants=[dict(j=j, perm=v.to_json()) for j, v in sorted(self.descendants.items())]
        )


def max_transition(w: Permutation) -> TransitionData:
    r = w.last_descent
    if r is None:
        raise NoDescentError('Maximal transition needs a descent; got the identity')

    s = max(i for i in range(r + 1, len(w) + 1) if w(i) < w(r))
    u = w.swap(r, s)
    descendants = {}
    for j in range(1, r):
        if u.swap_raises_length(j, r):
            descendants[j] = u.swap(j, r)
    return TransitionData(w, r, s, u, descendants)
