from .tree import MTTree, NodeKind


_NODE_STYLE = {
    NodeKind.INTERNAL: 'shape=box',
    NodeKind.GOOD: 'shape=box, style=bold, color=darkgreen',
    NodeKind.BAD: 'shape=box, style=dashed, color=red, fontcolor=red',
}


def tree_to_dot(t: MTTree) -> str:
    """Graphviz rendering: bad leaves dashed red, good leaves bold green, edges labelled by j."""
    lines = ['digraph mttree {']
    for node in t.nodes():
        lines.append(f'  n{node} [label="{t.perm(node)}", {_NODE_STYLE[t.kind(node)]}];')
    for a, j, b in t.edges():
        lines.append(f'  n{a} -> n{b} [label="j={j}"];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
