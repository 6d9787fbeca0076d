"""
Plane bipolar orientations: validation, borders, faces, ROP/LOP detection,
and the mirror / dual / reversal transforms.
"""

from collections import Counter
from dataclasses import dataclass

import networkx as nx

from maps.plane_map import BipolarOrientation, PlaneMap


class OrientationError(ValueError):
    """Raised when an operation needs a valid bipolar orientation and gets something else."""


@dataclass(frozen=True)
class FaceInfo:
    face: int
    source: int
    sink: int
    left_vertices: tuple
    right_vertices: tuple
    degree: int


def _structural_violations(o):
    plane = o.plane
    counts = Counter(h for rot in plane.rotations for h in rot)
    violations = []
    for h, c in sorted(counts.items()):
        if c > 1:
            violations.append("half-edge {} appears {} times".format(h, c))
        if h == 0:
            violations.append("half-edge id 0 is not allowed")
    edges = {abs(h) for h in counts}
    expected = set(range(1, len(edges) + 1))
    if edges != expected:
        violations.append("edge ids must be 1..{}, got {}".format(len(edges), sorted(edges)))
    for e in sorted(edges):
        if e not in counts or -e not in counts:
            violations.append("edge {} lacks one of its half-edges".format(e))
    for name, v in (("source", o.source), ("sink", o.sink)):
        if not 0 <= v < plane.vertex_count:
            violations.append("{} {} is not a vertex".format(name, v))
    if plane.outer not in counts:
        violations.append("outer half-edge {} does not exist".format(plane.outer))
    return violations


def _multigraph(plane, directed):
    g = nx.MultiDiGraph() if directed else nx.MultiGraph()
    g.add_nodes_from(range(plane.vertex_count))
    for e, u, v in plane.edge_list():
        g.add_edge(u, v, key=e)
    return g


def validate(o):
    """
    Returns the list of violated bipolar-orientation invariants; empty iff `o`
    is a plane bipolar orientation. Each violation names the vertex/edge/face concerned.
    """
    violations = _structural_violations(o)
    if violations:
        return violations
    plane = o.plane
    s, t = o.source, o.sink

    for e, u, v in plane.edge_list():
        if u == v:
            violations.append("edge {} is a loop at vertex {}".format(e, u))
    if not nx.is_connected(_multigraph(plane, directed=False)):
        violations.append("underlying multigraph is disconnected")
        return violations
    chi = plane.euler_characteristic()
    if chi != 2:
        violations.append("Euler check failed: V - E + F = {}".format(chi))

    for v, rot in enumerate(plane.rotations):
        ins = [-h for h in rot if h < 0]
        outs = [h for h in rot if h > 0]
        if v == s:
            for e in ins:
                violations.append("source {} has ingoing edge {}".format(s, e))
        elif v == t:
            for e in outs:
                violations.append("sink {} has outgoing edge {}".format(t, e))
        else:
            if not ins:
                violations.append("vertex {} has no ingoing edge (extra source)".format(v))
            if not outs:
                violations.append("vertex {} has no outgoing edge (extra sink)".format(v))
            changes = sum(1 for i in range(len(rot)) if (rot[i] > 0) != (rot[i - 1] > 0))
            if ins and outs and changes != 2:
                violations.append(
                    "vertex {}: clockwise rotation is not one outgoing block then one ingoing block".format(v)
                )
    if s == t:
        violations.append("source and sink coincide at vertex {}".format(s))

    digraph = _multigraph(plane, directed=True)
    if not nx.is_directed_acyclic_graph(digraph):
        cycle = nx.find_cycle(digraph)
        violations.append("directed cycle through edges {}".format([key for _, _, key in cycle]))

    outer_vertices = {plane.vertex_of(h) for h in plane.faces[plane.outer_face]}
    for name, v in (("source", s), ("sink", t)):
        if v not in outer_vertices:
            violations.append("{} {} is not incident to the outer face".format(name, v))

    if not violations:
        for f, orbit in enumerate(plane.faces):
            changes = sum(1 for i in range(len(orbit)) if (orbit[i] > 0) != (orbit[i - 1] > 0))
            if changes != 2:
                violations.append("face {} is not bounded by exactly two oriented paths".format(f))
    return violations


def require_valid(o):
    violations = validate(o)
    if violations:
        raise OrientationError("invalid bipolar orientation: " + "; ".join(violations))
    return o


def outer_start(o):
    """The outgoing dart at the source whose left face is the outer face (first edge of the left border)."""
    plane = o.plane
    outer = plane.outer_face
    for h in plane.rotations[o.source]:
        if h > 0 and plane.face_of[h] == outer:
            return h
    raise OrientationError("source {} has no outgoing dart on the outer face".format(o.source))


def with_outer_at_source(o):
    """Same orientation with `outer` normalized to the first edge of the left border."""
    start = outer_start(o)
    if start == o.plane.outer:
        return o
    return BipolarOrientation(PlaneMap(o.plane.rotations, start), o.source, o.sink)


def borders(o):
    """
    Returns a dict with left_path / right_path (vertex sequences s..t),
    left_edges / right_edges, left_outer_degree and right_outer_degree.
    """
    plane = o.plane
    start = outer_start(o)
    orbit = plane.faces[plane.face_of[start]]
    idx = orbit.index(start)
    walk = orbit[idx:] + orbit[:idx]
    left_edges = []
    for h in walk:
        if h < 0:
            break
        left_edges.append(h)
    right_edges = [-h for h in reversed(walk[len(left_edges):])]
    left_path = [o.source] + [plane.head(e) for e in left_edges]
    right_path = [o.source] + [plane.head(e) for e in right_edges]
    return {
        "left_path": left_path,
        "right_path": right_path,
        "left_edges": left_edges,
        "right_edges": right_edges,
        "left_outer_degree": len(left_edges),
        "right_outer_degree": len(right_edges),
    }


def pole_degrees(o):
    return (o.plane.degree(o.source), o.plane.degree(o.sink))


def _face_info(plane, f):
    orbit = plane.faces[f]
    # rotate so the walk starts with the forward run
    start = next(i for i in range(len(orbit)) if orbit[i] > 0 and orbit[i - 1] < 0)
    walk = orbit[start:] + orbit[:start]
    forward = [h for h in walk if h > 0]
    backward = walk[len(forward):]
    right = tuple(plane.head(h) for h in forward[:-1])
    left = tuple(reversed([plane.vertex_of(h) for h in backward[1:]]))
    return FaceInfo(
        face=f,
        source=plane.tail(forward[0]),
        sink=plane.head(forward[-1]),
        left_vertices=left,
        right_vertices=right,
        degree=len(orbit),
    )


def faces(o):
    """One FaceInfo per bounded face, in face-index order."""
    plane = o.plane
    outer = plane.outer_face
    return [_face_info(plane, f) for f in range(len(plane.faces)) if f != outer]


def vertex_faces(o):
    """
    For each non-polar vertex: its left face (between last ingoing and first outgoing,
    clockwise) and right face (between last outgoing and first ingoing).
    """
    plane = o.plane
    out = {}
    for v, rot in enumerate(plane.rotations):
        if v in (o.source, o.sink):
            continue
        left = right = None
        for i, h in enumerate(rot):
            nxt = rot[(i + 1) % len(rot)]
            if h > 0 and nxt < 0:
                right = plane.face_of[nxt]
            elif h < 0 and nxt > 0:
                left = plane.face_of[nxt]
        out[v] = {"left": left, "right": right}
    return out


def _oriented_pieces(o, swap):
    infos = faces(o)
    found = []
    for f1 in infos:
        for f2 in infos:
            if f1.face == f2.face:
                continue
            side2 = f2.right_vertices if swap else f2.left_vertices
            side1 = f1.left_vertices if swap else f1.right_vertices
            v1, v2 = f1.source, f2.sink
            if v1 in side2 and v2 in side1:
                found.append((v1, v2, f1.face, f2.face))
    return found


def find_rops(o):
    """
    Right-oriented pieces (v1, v2, f1, f2): v1 is the source of f1 and a left vertex
    of f2; v2 is the sink of f2 and a right vertex of f1.
    """
    return _oriented_pieces(o, swap=False)


def find_lops(o):
    """Left-oriented pieces: the ROP definition with left and right swapped."""
    return _oriented_pieces(o, swap=True)


def mirror(o):
    """Mirror image: every rotation reversed, poles kept."""
    rotations = tuple(tuple(reversed(rot)) for rot in o.plane.rotations)
    mirrored = BipolarOrientation(PlaneMap(rotations, -o.plane.outer), o.source, o.sink)
    return with_outer_at_source(mirrored)


def reverse_all(o):
    """Every edge direction flipped and the poles swapped."""
    rotations = tuple(tuple(-h for h in rot) for rot in o.plane.rotations)
    flipped = BipolarOrientation(PlaneMap(rotations, -o.plane.outer), o.sink, o.source)
    return with_outer_at_source(flipped)


def dual(o):
    """
    Dual orientation. Vertex 0 is the pole in the right outer region (the dual source),
    then one vertex per bounded face in face-index order, then the pole in the left
    outer region (the dual sink). The dual edge e* keeps the number of e and is directed
    from the face on the right of e to the face on the left of e.
    """
    plane = o.plane
    b = borders(o)
    outer = plane.outer_face
    bounded = [f for f in range(len(plane.faces)) if f != outer]

    # the dual half-edge living in the face on the left of dart h is -h
    rotations = [tuple(b["right_edges"])]
    for f in bounded:
        rotations.append(tuple(-h for h in reversed(plane.faces[f])))
    rotations.append(tuple(-e for e in reversed(b["left_edges"])))

    first_left = b["left_edges"][0]
    result = BipolarOrientation(PlaneMap(tuple(rotations), first_left), 0, len(rotations) - 1)
    return with_outer_at_source(result)
