"""
Separability of plane maps and brute-force enumeration of the bipolar
orientations of a fixed embedded map.
"""

from itertools import product

import networkx as nx

from config import settings
from maps.orientation import validate, with_outer_at_source
from maps.plane_map import BipolarOrientation, PlaneMap, flip_edges


def is_separable(plane):
    """
    True iff the map has a cut vertex. Maps with at most two vertices (one edge,
    multiple edges between two poles) count as non-separable.
    """
    if plane.vertex_count <= 2:
        return False
    edges = plane.edge_list()
    if any(u == v for _, u, v in edges):
        return True
    g = nx.Graph()
    g.add_nodes_from(range(plane.vertex_count))
    g.add_edges_from((u, v) for _, u, v in edges)
    return next(nx.articulation_points(g), None) is not None


def enumerate_bipolar_orientations(plane, source, sink, max_edges=None):
    """
    Every direction assignment of the edges of `plane` that is a plane bipolar
    orientation with poles (source, sink), in a fixed deterministic order.
    """
    limit = settings.MAX_BRUTE_EDGES if max_edges is None else max_edges
    settings.check_guard("edge count", plane.edge_count, limit)

    edges = plane.edge_list()
    forced = set()
    free = []
    for e, u, v in edges:
        if u == v:
            return []
        if u == source or v == sink:
            continue
        if v == source or u == sink:
            forced.add(e)
            continue
        free.append(e)

    n = plane.vertex_count
    found = []
    for choice in product((False, True), repeat=len(free)):
        flipped = forced | {e for e, flip in zip(free, choice) if flip}
        ins = [0] * n
        outs = [0] * n
        for e, u, v in edges:
            if e in flipped:
                u, v = v, u
            outs[u] += 1
            ins[v] += 1
        if any((ins[x] == 0 or outs[x] == 0) for x in range(n) if x not in (source, sink)):
            continue
        candidate = BipolarOrientation(flip_edges(plane, flipped), source, sink)
        if not validate(candidate):
            found.append(with_outer_at_source(candidate))
    return found


def k4():
    """
    K4 drawn with the outer triangle (s, a, t): s=0, a=1, b=2 (inside), t=3.
    The edge a-b is the only one whose direction the poles leave open.
    """
    rotations = (
        (3, 1, 2),
        (5, 4, -1),
        (-4, 6, -2),
        (-3, -6, -5),
    )
    return PlaneMap(rotations, -3), 0, 3
