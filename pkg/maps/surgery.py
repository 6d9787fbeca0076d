"""
Edge surgery on rotation systems: deletion, contraction, and the root edge
that turns a bipolar map into a rooted map and back.
"""

from maps.plane_map import BipolarOrientation, MapError, PlaneMap, RootedMap, renumber


def _surviving_dart(plane, h, removed):
    """A dart on the face of h that survives the removal of `removed`."""
    for start in (h, -h):
        g = plane.face_next(start)
        while g != start:
            if g not in removed:
                return g
            g = plane.face_next(g)
    raise MapError("no dart survives around half-edge {}".format(h))


def delete_edge(plane, e):
    """Rotations and outer dart after deleting edge e (vertex and edge ids not yet compacted)."""
    removed = {e, -e}
    rotations = [tuple(h for h in rot if h not in removed) for rot in plane.rotations]
    outer = plane.outer
    if outer in removed:
        outer = _surviving_dart(plane, outer, removed)
    return rotations, outer


def contract_edge(plane, h):
    """
    Rotations and outer dart after contracting the edge of dart h into the vertex of h.
    The other endpoint keeps an empty rotation list so vertex ids stay put until renumbered.
    """
    removed = {h, -h}
    keep, other = plane.vertex_of(h), plane.vertex_of(-h)
    if keep == other:
        raise MapError("cannot contract loop {}".format(abs(h)))
    spliced = plane.rotation_from(other, -h)[1:]
    rotations = [list(rot) for rot in plane.rotations]
    idx = rotations[keep].index(h)
    rotations[keep][idx:idx + 1] = list(spliced)
    rotations[other] = []
    outer = plane.outer
    if outer in removed:
        outer = _surviving_dart(plane, outer, removed)
    return [tuple(rot) for rot in rotations], outer


def _outer_corner_dart(plane, v):
    outer = plane.outer_face
    for h in plane.rotations[v]:
        if plane.face_of[h] == outer:
            return h
    raise MapError("vertex {} is not on the outer face".format(v))


def add_root_edge(m):
    """
    Root edge r = E+1 from source to sink drawn through the outer face, so that the
    old left border stays on the outer face and the outer face lies on the right of r.
    """
    plane = m.plane
    s, t = m.source, m.sink
    r = plane.edge_count + 1
    corner_s = _outer_corner_dart(plane, s)
    corner_t = _outer_corner_dart(plane, t)
    rotations = [list(rot) for rot in plane.rotations]
    rotations[s].insert(rotations[s].index(corner_s), r)
    rotations[t].insert(rotations[t].index(corner_t), -r)
    rooted = PlaneMap(tuple(tuple(rot) for rot in rotations), -r)
    return RootedMap(rooted, r)


def remove_root_edge(m):
    """Inverse of add_root_edge; edge signs of the remaining edges are carried over."""
    plane = m.plane
    r = m.root
    s, t = m.source, m.sink
    new_outer = plane.cw(r)
    if abs(new_outer) == r:
        raise MapError("root edge is the only edge at the source")
    rotations = [tuple(h for h in rot if abs(h) != r) for rot in plane.rotations]
    rotations, outer, s, t = renumber(rotations, new_outer, s, t)
    return BipolarOrientation(PlaneMap(rotations, outer), s, t)
