from __future__ import annotations

import enum
import logging
from collections import Counter

import networkx as nx

from schubstone.perm import Permutation, max_transition
from schubstone.schubert import SchubertExpansion


logger = logging.getLogger(__name__)


class NodeKind(enum.Enum):
    INTERNAL = 'internal'
    GOOD = 'good'
    BAD = 'bad'


def classify(v: Permutation, m) -> NodeKind:
    """Good: last descent <= m. Bad: 1 sits past position m+1. Otherwise keep moving."""
    if v.is_identity or v.last_descent <= m:
        return NodeKind.GOOD
    if v.one_position > m + 1:
        return NodeKind.BAD
    return NodeKind.INTERNAL


class MTTree:
    """
    Tree of maximal-transition moves, stored as a networkx DiGraph.

    Nodes are integers numbered in depth-first preorder (children by ascending j)
    and carry `perm` and `kind` attributes; edges carry the label `j`. The same
    permutation may occur at several nodes.
    """

    def __init__(self, root: Permutation, m: int):
        self.root = root
        self.m = m
        self.graph = nx.DiGraph()

    def _add_node(self, perm, kind):
        node = self.graph.number_of_nodes()
        self.graph.add_node(node, perm=perm, kind=kind)
        return node

    def perm(self, node) -> Permutation:
        return self.graph.nodes[node]['perm']

    def kind(self, node) -> NodeKind:
        return self.graph.nodes[node]['kind']

    @property
    def num_nodes(self):
        return self.graph.number_of_nodes()

    @property
    def num_edges(self):
        return self.graph.number_of_edges()

    def nodes(self):
        return sorted(self.graph.nodes)

    def edges(self):
        """(parent, j, child) triples in node order."""
        return sorted((a, data['j'], b) for a, b, data in self.graph.edges(data=True))

    def leaves(self, kind: NodeKind = None):
        """Leaf nodes in depth-first order, optionally of one kind."""
        return [n for n in self.nodes() if self.graph.out_degree(n) == 0 and (kind is None or self.kind(n) == kind)]

    def good_leaves(self):
        return [self.perm(n) for n in self.leaves(NodeKind.GOOD)]

    def bad_leaves(self):
        return [self.perm(n) for n in self.leaves(NodeKind.BAD)]

    def leaf_multiset(self) -> Counter:
        return Counter((self.perm(n), self.kind(n)) for n in self.leaves())

    def expansion(self) -> SchubertExpansion:
        """Good leaves counted with multiplicity."""
        return SchubertExpansion(Counter(self.good_leaves()))

    def to_json(self):
        return dict(
            root=self.root.to_json(),
            m=self.m,
            nodes=[dict(id=n, perm=self.perm(n).to_json(), kind=self.kind(n).value) for n in self.nodes()],
            edges=[{'from': a, 'j': j, 'to': b} for a, j, b in self.edges()],
            leaves=[dict(perm=self.perm(n).to_json(), kind=self.kind(n).value) for n in self.leaves()],
        )

    def __str__(self):
        lines = []
        stack = [(0, None, 0)]
        while stack:
            node, j, depth = stack.pop()
            prefix = '' if j is None else f'j={j}: '
            kind = self.kind(node)
            suffix = '' if kind is NodeKind.INTERNAL else f' [{kind.value}]'
            lines.append('  ' * depth + f'{prefix}{self.perm(node)}{suffix}')
            children = sorted((data['j'], child) for _, child, data in self.graph.out_edges(node, data=True))
            stack.extend((child, cj, depth + 1) for cj, child in reversed(children))
        return '\n'.join(lines)


def mt_tree(root: Permutation, m: int) -> MTTree:
    """Apply maximal transitions from the root until every branch ends in a good or bad leaf."""
    if m < 1:
        raise ValueError(f'm must be positive, got {m}')

    tree = MTTree(root, m)
    stack = [(root, None, None)]
    while stack:
        perm, parent, j = stack.pop()
        kind = classify(perm, m)
        t = None
        if kind is NodeKind.INTERNAL:
            t = max_transition(perm)
            if len(t.descendants) == 0:
                #S_w = x_r S_u with r > m vanishes after restriction
                kind = NodeKind.BAD
        node = tree._add_node(perm, kind)
        if parent is not None:
            tree.graph.add_edge(parent, node, j=j)
        if kind is NodeKind.INTERNAL:
            stack.extend((v, node, cj) for cj, v in sorted(t.descendants.items(), reverse=True))

    logger.debug(f'MT-tree rooted at {root} (m={m}): {tree.num_nodes} nodes, '
                 f'{len(tree.leaves(NodeKind.GOOD))} good and {len(tree.leaves(NodeKind.BAD))} bad leaves')
    return tree


def is_reduced(w: Permutation) -> bool:
    """No maximal-transition move with a nonempty descendant set applies."""
    return w.is_identity or len(max_transition(w).descendants) == 0


def no_descent_after_one(w: Permutation) -> bool:
    p = w.one_position
    return all(d < p for d in w.descents)


def one_positions_preserved(w: Permutation, m: int) -> bool:
    """Every leaf of the tree rooted at 1 x w (with m+1 variables) keeps 1 where w has it."""
    tree = mt_tree(w.embed(1), m + 1)
    return all(tree.perm(n).one_position == w.one_position for n in tree.leaves())
