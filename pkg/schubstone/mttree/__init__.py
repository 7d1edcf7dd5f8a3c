from schubstone.perm import TransitionData, max_transition
from .transition import transition_polynomial, transition_identity_holds
from .tree import MTTree, NodeKind, mt_tree, classify, is_reduced, no_descent_after_one, one_positions_preserved
from .grassmannian import grassmannian_product, stanley_via_mt
from .dot import tree_to_dot
