"""
Inverse map: plane bipolar orientation -> Baxter permutation.

Each edge carries a (virtual) black vertex. Two spanning trees rooted at the source
give the coordinates: in T_x every non-source vertex hangs from its first incoming
edge in clockwise order (at the sink: the right-border edge), in T_y from its last
(at the sink: the left-border edge). Numbering the edges in depth-first prefix order,
children clockwise in T_x and counterclockwise in T_y, gives x(e) and y(e).
"""

from bijection.phi import EdgeCorrespondence
from maps.orientation import OrientationError, borders, outer_start, require_valid
from perms.permutation import Permutation


def _parent_darts(o, first):
    """Incoming dart each non-source vertex hangs from."""
    plane = o.plane
    b = borders(o)
    parent = {}
    for v, rot in enumerate(plane.rotations):
        if v == o.source:
            continue
        if v == o.sink:
            edge = b["right_edges"][-1] if first else b["left_edges"][-1]
            parent[v] = -edge
            continue
        for i, h in enumerate(rot):
            prev, nxt = rot[i - 1], rot[(i + 1) % len(rot)]
            if h < 0 and ((first and prev > 0) or (not first and nxt > 0)):
                parent[v] = h
                break
    return parent


def _prefix_numbers(o, clockwise):
    plane = o.plane
    parent = _parent_darts(o, first=clockwise)

    def children(v):
        if v == o.source:
            if clockwise:
                start = outer_start(o)
                seq = plane.rotation_from(v, start)
            else:
                start = borders(o)["right_edges"][0]
                seq = _counterclockwise_from(plane, v, start)
            return [h for h in seq if h > 0]
        if clockwise:
            seq = plane.rotation_from(v, parent[v])[1:]
        else:
            seq = _counterclockwise_from(plane, v, parent[v])[1:]
        return [h for h in seq if h > 0]

    numbers = {}
    stack = list(reversed(children(o.source)))
    while stack:
        e = stack.pop()
        numbers[e] = len(numbers) + 1
        w = plane.head(e)
        if parent.get(w) == -e:
            stack.extend(reversed(children(w)))
    return numbers


def _counterclockwise_from(plane, v, start):
    seq = plane.rotation_from(v, start)
    return (seq[0],) + tuple(reversed(seq[1:]))


def psi(o):
    """Returns (permutation, correspondence) for a valid bipolar orientation with at least one edge."""
    require_valid(o)
    if o.plane.edge_count < 1:
        raise OrientationError("psi needs at least one edge")
    xs = _prefix_numbers(o, clockwise=True)
    ys = _prefix_numbers(o, clockwise=False)
    n = o.plane.edge_count
    if len(xs) != n or len(ys) != n:
        raise OrientationError("trees T_x / T_y do not span all {} edges".format(n))
    values = [0] * n
    for e in range(1, n + 1):
        values[xs[e] - 1] = ys[e]
    p = Permutation(tuple(values))
    corr = EdgeCorrespondence(tuple(((xs[e], ys[e]), e) for e in sorted(xs, key=xs.get)))
    return p, corr
