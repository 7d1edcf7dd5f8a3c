from schubstone.mttree import MTTree, tree_to_dot
from .format import OutputFormat


class DOTFormat(OutputFormat):
    """Graphviz DOT, MT-trees only."""

    def render(self, obj) -> str:
        return tree_to_dot(obj)

    def supports(self, obj) -> bool:
        return isinstance(obj, MTTree)


FORMAT_DOT = DOTFormat(name='dot', alt_names=['graphviz'], description='Graphviz digraph (mt-tree only)')
