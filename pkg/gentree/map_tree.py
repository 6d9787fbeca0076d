"""
Parent rule of the generating tree of rooted non-separable planar maps.
"""

from gentree.insertion import TreeError
from maps.plane_map import PlaneMap, RootedMap, renumber
from maps.separability import is_separable
from maps.surgery import contract_edge, delete_edge


def map_parent(m):
    """
    e follows the root edge counterclockwise around the outer face (at the root's head).
    The map is valid when deleting e leaves it separable; valid maps lose e by contraction,
    the others by deletion.
    """
    plane = m.plane
    if plane.edge_count < 3:
        raise TreeError("map_parent needs at least 3 edges, got {}".format(plane.edge_count))
    if is_separable(plane):
        raise TreeError("map_parent needs a non-separable map")
    r = m.root
    h = plane.ccw(-r)
    e = abs(h)

    deleted, outer = delete_edge(plane, e)
    without_e = PlaneMap(*renumber(deleted, outer)[:2])
    if is_separable(without_e):
        rotations, outer = contract_edge(plane, h)
    else:
        rotations, outer = deleted, outer
    rotations, outer, _, _ = renumber(rotations, outer)
    root = r - 1 if e < r else r
    return RootedMap(PlaneMap(rotations, outer), root)
