"""
The generating tree of plane bipolar orientations, and the bijection it induces
with Baxter permutations by replaying insertion sequences.
"""

from gentree.insertion import LEFT, RIGHT, TreeError, check_step, insertion_sequence
from maps.orientation import borders, pole_degrees, with_outer_at_source
from maps.plane_map import BipolarOrientation, PlaneMap, one_edge, renumber
from maps.surgery import contract_edge, delete_edge


def orient_insert(o, side, k):
    """
    L_k: new edge from the k-th vertex of the left border to the sink, becoming the
    last edge of the left border. R_k: the sink is split; the ingoing edges e_k..e_j
    (counted from the right border) move to a new vertex v joined to the sink by a new edge.
    """
    plane = o.plane
    b = borders(o)
    check_step(side, k, b["left_outer_degree"], plane.degree(o.sink))
    f = plane.edge_count + 1
    t = o.sink
    rotations = [list(rot) for rot in plane.rotations]

    if side == LEFT:
        v = b["left_path"][k - 1]
        a_k = b["left_edges"][k - 1]
        rotations[v].insert(rotations[v].index(a_k), f)
        rotations[t].insert(rotations[t].index(-b["left_edges"][-1]) + 1, -f)
        outer = f
    else:
        at_sink = list(plane.rotation_from(t, -b["right_edges"][-1]))
        rotations[t] = at_sink[: k - 1] + [-f]
        rotations.append(at_sink[k - 1:] + [f])
        outer = plane.outer

    result = BipolarOrientation(PlaneMap(tuple(tuple(r) for r in rotations), outer), o.source, t)
    return with_outer_at_source(result)


def orient_parent(o):
    """Contract the last edge of the left border if its tail has outdegree 1, delete it otherwise."""
    plane = o.plane
    if plane.edge_count < 2:
        raise TreeError("the one-edge orientation has no parent")
    e = borders(o)["left_edges"][-1]
    v = plane.tail(e)
    outdegree = sum(1 for h in plane.rotations[v] if h > 0)
    if outdegree == 1:
        rotations, outer = contract_edge(plane, -e)
    else:
        rotations, outer = delete_edge(plane, e)
    rotations, outer, s, t = renumber(rotations, outer, o.source, o.sink)
    return with_outer_at_source(BipolarOrientation(PlaneMap(rotations, outer), s, t))


def orient_step(o):
    """The (side, k) with orient_insert(orient_parent(o), side, k) == o."""
    plane = o.plane
    b = borders(o)
    e = b["left_edges"][-1]
    v = plane.tail(e)
    if sum(1 for h in plane.rotations[v] if h > 0) == 1:
        # v came from splitting the sink: k counts the edges that stayed at t, plus one
        return (RIGHT, plane.degree(o.sink))
    return (LEFT, b["left_path"].index(v) + 1)


def replay_orientation(steps):
    o = one_edge()
    for side, k in steps:
        o = orient_insert(o, side, k)
    return o


def baxter_to_orientation(p):
    """Replays the insertion sequence of a Baxter permutation from the one-edge orientation."""
    return replay_orientation(insertion_sequence(p))


def orientation_sequence(o):
    steps = []
    while o.plane.edge_count > 1:
        steps.append(orient_step(o))
        o = orient_parent(o)
    return tuple(reversed(steps))


def orientation_label(o):
    """(left outer degree, sink degree)."""
    return (borders(o)["left_outer_degree"], pole_degrees(o)[1])
