"""
DOT text for bipolar orientations. Every edge carries `rotpos`, the position of each
half-edge in its vertex's clockwise rotation, so the embedding survives the export.
"""


def as_graphviz(o, name="orientation"):
    plane = o.plane
    lines = ["digraph {} {{".format(name)]
    for v in range(plane.vertex_count):
        attrs = []
        if v == o.source:
            attrs.append('label="s"')
        elif v == o.sink:
            attrs.append('label="t"')
        else:
            attrs.append('label="{}"'.format(v))
        lines.append("  v{} [{}];".format(v, ", ".join(attrs)))
    for e, u, w in plane.edge_list():
        tail_pos = plane.rotations[u].index(e)
        head_pos = plane.rotations[w].index(-e)
        outer = ', outer="{}"'.format("tail" if plane.outer == e else "head") if abs(plane.outer) == e else ""
        lines.append('  v{} -> v{} [label="{}", rotpos="{},{}"{}];'.format(u, w, e, tail_pos, head_pos, outer))
    lines.append("}")
    return "\n".join(lines) + "\n"
