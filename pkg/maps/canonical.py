"""
Canonical codes for rooted plane maps, and the edge matching between isomorphic ones.

A code relabels the darts breadth-first from a start dart, following cw and twin,
and lists (cw label, twin label[, direction flag]) per dart, as ASCII bytes. Two maps rooted at
corresponding darts are isomorphic iff their codes are equal.
"""

from collections import deque

from maps.orientation import OrientationError, outer_start


def dart_labels(plane, start):
    labels = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        h = queue.popleft()
        for nxt in (plane.cw(h), -h):
            if nxt not in labels:
                labels[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
    return labels, order


def _code(plane, start, directed):
    labels, order = dart_labels(plane, start)
    rows = []
    for h in order:
        row = (labels[plane.cw(h)], labels[-h])
        if directed:
            row += (1 if h > 0 else 0,)
        rows.append(".".join(str(x) for x in row))
    return ";".join(rows).encode("ascii")


def canonical_code(o):
    """Code of a bipolar orientation, started at the first dart of its left border."""
    return _code(o.plane, outer_start(o), directed=True)


def rooted_code(m):
    """Code of a rooted map, started at its root dart; edge directions are ignored."""
    return _code(m.plane, m.root, directed=False)


def canonical_edge_order(o):
    """Edges of o listed by the canonical label of their tail dart."""
    labels, order = dart_labels(o.plane, outer_start(o))
    return [h for h in order if h > 0]


def edge_matching(o1, o2):
    """
    Edge bijection {e in o1: e' in o2} induced by the isomorphism of two
    orientations; raises OrientationError when they are not isomorphic.
    """
    if canonical_code(o1) != canonical_code(o2):
        raise OrientationError("orientations are not isomorphic")
    return dict(zip(canonical_edge_order(o1), canonical_edge_order(o2)))
