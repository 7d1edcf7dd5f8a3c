from __future__ import annotations

import abc
from collections.abc import Iterable

from schubstone.db import NamedEntry
from schubstone.mttree import stanley_via_mt
from schubstone.stanley import StableExpansion, stable_product_expand


class StanleyMethod(NamedEntry, metaclass=abc.ABCMeta):
    """An algorithm for stable expansions of products of Stanley symmetric functions."""

    def __init__(self, *, name: str, alt_names: Iterable[str] = (), description: str = '', max_factors: int = None):
        super().__init__(name, alt_names, description)
        self.max_factors = max_factors

    @abc.abstractmethod
    def expand(self, ws, *, verify=False, assume_no_gap=False, engine='monk') -> StableExpansion:
        pass


class TransitionMethod(StanleyMethod):
    def expand(self, ws, *, verify=False, assume_no_gap=False, engine='monk'):
        return stable_product_expand(ws, verify=verify, assume_no_gap=assume_no_gap, engine=engine)


class MTMethod(StanleyMethod):
    def expand(self, ws, *, verify=False, assume_no_gap=False, engine='monk'):
        w, u = ws
        return stanley_via_mt(w, u)


METHOD_TRANSITION = TransitionMethod(
    name='transition',
    alt_names=['tr'],
    description='embed and expand level by level up to the length bound'
)

METHOD_MT = MTMethod(
    name='mt',
    alt_names=['mt-tree'],
    description='single MT-tree, needs a Grassmannian factor',
    max_factors=2
)
